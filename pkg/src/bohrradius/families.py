"""Weight sequences {phi_n(r)} that replace r^n in generalized Bohr sums.

Built-in kinds all have the form phi_n(r) = w(n) r^n:

* ``power``  -- w(n) = 1
* ``poly``   -- w(n) = n^alpha   (phi_0 forced to 1 by default)
* ``shift``  -- w(n) = (n+1)^beta

``custom`` families wrap user callables and are used mostly for negative
examples (e.g. phi_n = 1, whose sum diverges).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import DomainError

KINDS = ("power", "poly", "shift", "custom")


@dataclass(frozen=True)
class PhiFamily:
    kind: str
    param: float = 0.0
    phi0_override: bool = False
    description: str = ""
    custom_phi: Optional[Callable[[int, float], float]] = field(default=None, compare=False)
    custom_dphi: Optional[Callable[[int, float], float]] = field(default=None, compare=False)
    custom_ratio: Optional[Callable[[int, float], float]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown family kind {self.kind!r}")
        if self.kind in ("poly", "shift") and not self.param >= 0.0:
            raise DomainError(f"{self.kind} exponent must be >= 0, got {self.param!r}")
        if self.kind == "custom" and self.custom_phi is None:
            raise DomainError("custom families need custom_phi")
        if not self.description:
            object.__setattr__(self, "description", self.label)

    @property
    def label(self) -> str:
        if self.kind == "power":
            return "power"
        if self.kind == "custom":
            return self.description or "custom"
        p = self.param
        return f"{self.kind}:{int(p) if float(p).is_integer() else p}"

    @property
    def unit_at_one(self) -> bool:
        """True when phi_n(1) = 1 for every n."""
        return self.kind == "power" or (self.kind in ("poly", "shift") and self.param == 0.0)

    @property
    def vanishes_at_zero(self) -> bool:
        """True when phi_n(0) = 0 for every n >= 1 (always so for w(n) r^n kinds)."""
        return self.kind != "custom"

    def weight(self, n):
        """w(n) for the built-in kinds; accepts scalars or arrays."""
        n = np.asarray(n, dtype=float)
        if self.kind == "power":
            return np.ones_like(n)
        if self.kind == "poly":
            return np.power(n, self.param)
        if self.kind == "shift":
            return np.power(n + 1.0, self.param)
        raise DomainError("custom families have no closed-form weight")

    def terms(self, n, r: float) -> np.ndarray:
        """Vectorized phi_n(r) over an integer array ``n`` (no override, no checks)."""
        n = np.asarray(n)
        if self.kind == "custom":
            return np.array([float(self.custom_phi(int(k), r)) for k in n])
        return self.weight(n) * np.power(r, n.astype(float))

    def dterms(self, n, r: float) -> np.ndarray:
        """Vectorized phi_n'(r) over ``n``."""
        n = np.asarray(n)
        if self.kind == "custom":
            if self.custom_dphi is None:
                raise DomainError("custom family has no derivative")
            return np.array([float(self.custom_dphi(int(k), r)) for k in n])
        nf = n.astype(float)
        with np.errstate(divide="ignore", invalid="ignore"):
            d = self.weight(n) * nf * np.power(r, np.maximum(nf - 1.0, 0.0))
        return np.where(n == 0, 0.0, d)

    def ratio_bound(self, n: int, r: float) -> float:
        """Upper bound on phi_{k+1}(r) / phi_k(r) valid for every k >= n >= 1."""
        if self.kind == "power":
            return r
        if self.kind == "poly":
            return r * (1.0 + 1.0 / n) ** self.param
        if self.kind == "shift":
            return r * ((n + 2.0) / (n + 1.0)) ** self.param
        if self.custom_ratio is not None:
            return float(self.custom_ratio(n, r))
        return math.inf


def power() -> PhiFamily:
    return PhiFamily("power")


def poly_weight(alpha: float, phi0_override: bool = True) -> PhiFamily:
    return PhiFamily("poly", float(alpha), phi0_override)


def shift_weight(beta: float) -> PhiFamily:
    return PhiFamily("shift", float(beta), True)


def custom(phi, dphi=None, ratio=None, description="custom") -> PhiFamily:
    return PhiFamily("custom", 0.0, False, description, phi, dphi, ratio)


def parse_family(text: str) -> PhiFamily:
    """Parse ``power``, ``poly:K`` or ``shift:K``."""
    name, _, arg = text.strip().lower().partition(":")
    if name == "power" and not arg:
        return power()
    if name in ("poly", "shift") and arg:
        try:
            k = float(arg)
        except ValueError:
            raise DomainError(f"bad family exponent in {text!r}") from None
        return poly_weight(k) if name == "poly" else shift_weight(k)
    raise DomainError(f"cannot parse family {text!r}; expected power, poly:K or shift:K")


def _check_r(r: float, allow_one: bool) -> float:
    r = float(r)
    hi_ok = r <= 1.0 if allow_one else r < 1.0
    if not (r >= 0.0 and hi_ok):
        raise DomainError(f"r must lie in [0, 1{']' if allow_one else ')'}, got {r!r}")
    return r


def eval_phi(family: PhiFamily, n: int, r: float) -> float:
    """phi_n(r) for r in [0, 1]."""
    r = _check_r(r, allow_one=True)
    if n < 0:
        raise DomainError("n must be >= 0")
    if n == 0 and family.phi0_override:
        return 1.0
    return float(family.terms(np.array([n]), r)[0])


def eval_dphi(family: PhiFamily, n: int, r: float) -> float:
    """phi_n'(r) for r in [0, 1)."""
    r = _check_r(r, allow_one=False)
    if n < 0:
        raise DomainError("n must be >= 0")
    if n == 0 and family.phi0_override:
        return 0.0
    return float(family.dterms(np.array([n]), r)[0])


@dataclass
class MembershipReport:
    member: bool
    violated: Optional[str]
    detail: str = ""

    def __bool__(self) -> bool:
        return self.member


def check_in_g(family: PhiFamily, r_max: float = 0.99, grid: int = 256,
               n_check: int = 64, n_tail: int = 1000) -> MembershipReport:
    """Sampled test of membership in the class of admissible weight sequences.

    Checks nonnegativity and monotonicity of phi_0..phi_{n_check} on a grid of
    [0, r_max], then that phi_{n+1}/phi_n stays below 1 for n >= n_tail, which
    gives local uniform convergence of sum phi_n and sum phi_n'.
    """
    if not 0.0 < r_max < 1.0:
        raise DomainError("r_max must lie in (0, 1)")
    if grid < 2:
        raise DomainError("grid must be >= 2")
    rs = np.linspace(0.0, r_max, grid)
    for n in range(n_check + 1):
        vals = np.array([eval_phi(family, n, r) for r in rs])
        if np.any(vals < 0.0) or not np.all(np.isfinite(vals)):
            return MembershipReport(False, "nonnegative", f"phi_{n} < 0 on the grid")
        slack = 1e-15 * np.maximum(1.0, np.abs(vals[1:]))
        if np.any(vals[:-1] > vals[1:] + slack):
            return MembershipReport(False, "increasing", f"phi_{n} decreases on the grid")

    if family.kind == "custom" and family.custom_ratio is None:
        ratios = []
        for r in rs[1:]:
            ks = np.arange(n_tail, 2 * n_tail)
            a = family.terms(ks, r)
            b = family.terms(ks + 1, r)
            with np.errstate(divide="ignore", invalid="ignore"):
                ratios.append(np.max(np.where(a > 0, b / a, 0.0)))
        q = float(max(ratios))
    else:
        q = family.ratio_bound(n_tail, r_max)
    if not q < 1.0:
        return MembershipReport(False, "convergent", f"tail ratio {q:.6g} >= 1 at n={n_tail}")
    return MembershipReport(True, None, f"tail ratio {q:.6g} at n={n_tail}")
