"""Extremal members of the function classes and their coefficient/growth bounds.

* :class:`MoebiusExtremal` -- the self-map (a + z)/(1 + a z) of the disk.
* :class:`HarmonicPH0Extremal` -- f_M(z) = z + 2M sum z^n / (n(n-1)).
* :class:`HarmonicWH0Extremal` -- z + sum 2 z^n / (alpha n^2 + (1-alpha) n).

Only coefficient magnitudes and values on the positive real axis are modelled;
that is where the extremal configurations live.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Union

import numpy as np

from .errors import DomainError
from .families import PhiFamily, eval_phi
from .series import (
    LN2,
    boundary_constant_ph0,
    boundary_constant_wh0,
    ph0_alternating_sum,
    ph0_power_sum,
    weighted_value,
    wh0_alternating_sum,
    wh0_power_sum,
    _sum_at_one,
)

ADMISSIBLE_M = 1.0 / (2.0 * (2.0 * LN2 - 1.0))


@dataclass(frozen=True)
class MoebiusExtremal:
    a: float

    def __post_init__(self):
        if not 0.0 <= self.a < 1.0:
            raise DomainError(f"a must lie in [0, 1), got {self.a!r}")

    def coeff(self, n: int) -> float:
        if n == 0:
            return self.a
        return (1.0 - self.a) * (1.0 + self.a) * self.a ** (n - 1)

    def value(self, r: float) -> float:
        """f(r) = (a + r)/(1 + a r) on the real axis."""
        return (self.a + r) / (1.0 + self.a * r)

    def derivative(self, r: float) -> float:
        return (1.0 - self.a) * (1.0 + self.a) / (1.0 + self.a * r) ** 2

    def majorant(self, r: float) -> float:
        """sum_{n>=0} |a_n| r^n = a + (1-a^2) r / (1 - a r)."""
        return self.a + (1.0 - self.a) * (1.0 + self.a) * r / (1.0 - self.a * r)


@dataclass(frozen=True)
class HarmonicPH0Extremal:
    M: float

    def __post_init__(self):
        if not self.M > 0.0:
            raise DomainError(f"M must be positive, got {self.M!r}")

    def coeff(self, n: int) -> float:
        if n == 0:
            return 0.0
        if n == 1:
            return 1.0
        return 2.0 * self.M / (n * (n - 1.0))


@dataclass(frozen=True)
class HarmonicWH0Extremal:
    alpha: float

    def __post_init__(self):
        if not self.alpha >= 0.0:
            raise DomainError(f"alpha must be >= 0, got {self.alpha!r}")

    def coeff(self, n: int) -> float:
        if n == 0:
            return 0.0
        if n == 1:
            return 1.0
        return 2.0 / (self.alpha * n * n + (1.0 - self.alpha) * n)


Model = Union[MoebiusExtremal, HarmonicPH0Extremal, HarmonicWH0Extremal]
HarmonicModel = Union[HarmonicPH0Extremal, HarmonicWH0Extremal]


def coeff(model: Model, n: int) -> float:
    """Extremal coefficient magnitude |a_n| (or |a_n| + |b_n| for harmonic models)."""
    if n < 0:
        raise DomainError("n must be >= 0")
    return model.coeff(int(n))


def coefficients(model: Model, start: int = 0) -> Iterator[float]:
    """Lazy, nonincreasing-from-n=1 stream of coefficient magnitudes."""
    n = start
    while True:
        yield model.coeff(n)
        n += 1


def _check_r(r: float) -> float:
    r = float(r)
    if not 0.0 <= r <= 1.0:
        raise DomainError(f"r must lie in [0, 1], got {r!r}")
    return r


def _check_side(side: str) -> None:
    if side not in ("lower", "upper"):
        raise DomainError(f"side must be 'lower' or 'upper', got {side!r}")


def growth_ph0(M: float, r: float, side: str = "lower") -> float:
    """Sharp growth bounds L_M(r) <= |f(z)| <= R_M(r) on |z| = r.

    L_M(r) = r + 2M [r - (1+r) ln(1+r)],  R_M(r) = r + 2M [r + (1-r) ln(1-r)].
    """
    r = _check_r(r)
    _check_side(side)
    if not M > 0.0:
        raise DomainError(f"M must be positive, got {M!r}")
    if side == "lower":
        s = boundary_constant_ph0() if r == 1.0 else ph0_alternating_sum(r)
    else:
        s = ph0_power_sum(r)
    return r + 2.0 * M * s


def growth_wh0(alpha: float, r: float, side: str = "lower") -> float:
    """Sharp growth bounds L_w(r) <= |f(z)| <= R_w(r); R_w(1) may be infinite."""
    r = _check_r(r)
    _check_side(side)
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha!r}")
    if side == "lower":
        s = boundary_constant_wh0(alpha) if r == 1.0 else wh0_alternating_sum(alpha, r)
    elif r == 1.0:
        s = _sum_at_one(PhiFamily("power"), "wh0", alpha)
    else:
        s = wh0_power_sum(alpha, r)
    return r + 2.0 * s


def admissible_M_bound(family: PhiFamily, n_terms: int = 100_000) -> float:
    """Upper end of the admissible range 0 < M < 1 / (2 (s0 - 1 + ln 4)).

    s0 = sum_{n>=2} phi_n(0) / (n(n-1)), zero for every built-in kind.  For
    custom families s0 is summed to ``n_terms`` (phi_n(0) is assumed bounded;
    the neglected tail is then O(1/n_terms)).  Returns ``inf`` when the
    denominator is not positive, i.e. every M > 0 is admissible.
    """
    if family.vanishes_at_zero:
        s0 = 0.0
    else:
        n = np.arange(2, n_terms + 2)
        s0 = math.fsum(family.terms(n, 0.0) / (n * (n - 1.0)))
    denom = 2.0 * (s0 - 1.0 + 2.0 * LN2)
    if denom <= 0.0:
        return math.inf
    return 1.0 / denom


def dist_lower_bound(model: HarmonicModel) -> float:
    """Lower bound for the distance from f(0) = 0 to the boundary of f(D): L(1)."""
    if isinstance(model, HarmonicPH0Extremal):
        return growth_ph0(model.M, 1.0, "lower")
    if isinstance(model, HarmonicWH0Extremal):
        return growth_wh0(model.alpha, 1.0, "lower")
    raise DomainError("dist_lower_bound needs a harmonic extremal model")


def phi0(family: PhiFamily, r: float) -> float:
    return eval_phi(family, 0, r)


def harmonic_bohr_sum(model: HarmonicModel, family: PhiFamily, r: float) -> float:
    """A_f(r) = r phi_0(r) + sum_{n>=2} c_n phi_n(r) for the extremal coefficients c_n."""
    r = _check_r(r)
    if isinstance(model, HarmonicPH0Extremal):
        return r * phi0(family, r) + 2.0 * model.M * weighted_value(family, "ph0", r)
    if isinstance(model, HarmonicWH0Extremal):
        return r * phi0(family, r) + 2.0 * weighted_value(family, "wh0", r, model.alpha)
    raise DomainError("harmonic_bohr_sum needs a harmonic extremal model")
