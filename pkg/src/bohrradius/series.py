"""Weighted coefficient sums, boundary constants and Moebius-map series.

Two weightings appear in the radius equations::

    ph0:        sum_{n>=2} phi_n(r) / (n (n-1))
    wh0(alpha): sum_{n>=2} phi_n(r) / (alpha n^2 + (1-alpha) n)

Both are returned without their 2M / 2 prefactor.  Wherever an elementary or
Lerch/2F1 closed form is known it is used, and :func:`sum_weighted` checks it
against direct truncation with a certified geometric tail.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ToleranceUnreachable
from .families import PhiFamily
from .specfun import EPS, MAX_TERMS, SeriesValue, digamma, dilog, gauss_2f1, h_alpha, lerch_phi

LN2 = math.log(2.0)
WEIGHTS = ("ph0", "wh0")
MOEBIUS_PARTS = ("B2", "Aterm", "SrOverPi", "SrRatio", "F0Norm")


@dataclass(frozen=True)
class WeightedSumSpec:
    family: PhiFamily
    weight_kind: str
    r: float
    alpha: float = 0.0
    tol: float = 1e-12

    def __post_init__(self):
        if self.weight_kind not in WEIGHTS:
            raise DomainError(f"weight_kind must be one of {WEIGHTS}, got {self.weight_kind!r}")
        if self.weight_kind == "wh0" and not self.alpha >= 0.0:
            raise DomainError(f"alpha must be >= 0, got {self.alpha!r}")
        if not 0.0 <= self.r <= 1.0:
            raise DomainError(f"r must lie in [0, 1], got {self.r!r}")
        if not self.tol > 0.0:
            raise DomainError("tol must be positive")


def denominators(weight_kind: str, n, alpha: float = 0.0):
    n = np.asarray(n, dtype=float)
    if weight_kind == "ph0":
        return n * (n - 1.0)
    return alpha * n * n + (1.0 - alpha) * n


# ---------------------------------------------------------------------------
# brute-force truncation


def truncated_sum(family: PhiFamily, weight_kind: str, r: float, alpha: float = 0.0,
                  tol: float = 1e-12, max_terms: int = MAX_TERMS,
                  relative: bool = False) -> SeriesValue:
    """Direct summation from n = 2 with a certified geometric tail.

    The denominators increase with n, so phi_{k+1}/phi_k <= q for k >= N also
    bounds the ratio of consecutive summands; the remainder after n < N is at
    most t_N / (1 - q).  With ``relative=True`` the target is
    ``tol * max(1, |value|)`` instead of ``tol``.
    """
    if r >= 1.0:
        raise ToleranceUnreachable("truncation has no geometric tail at r = 1")
    parts = []
    n0 = 2
    chunk = 64
    scale = 1.0
    while True:
        n = np.arange(n0, n0 + chunk)
        t = family.terms(n, r) / denominators(weight_kind, n, alpha)
        parts.append(t)
        if relative:
            scale = max(scale, abs(math.fsum(np.concatenate(parts))))
        n0 += chunk
        t_next = float(family.terms(np.array([n0]), r)[0] / denominators(weight_kind, n0, alpha))
        if t_next == 0.0 and r == 0.0:
            trunc = 0.0
            break
        q = family.ratio_bound(n0, r)
        if q < 1.0:
            trunc = t_next / (1.0 - q)
            if trunc <= scale * tol / 4.0:
                break
        if n0 - 2 >= max_terms:
            raise ToleranceUnreachable(
                f"weighted sum at r={r} needs more than {max_terms} terms for tol={tol}")
        chunk = min(2 * chunk, 65536)
    terms = np.concatenate(parts)
    value = math.fsum(terms)
    total = trunc + 4.0 * EPS * math.fsum(np.abs(terms))
    if total > tol * (max(1.0, abs(value)) if relative else 1.0):
        raise ToleranceUnreachable(f"attainable bound {total:.3g} exceeds tol={tol}")
    return SeriesValue(value, total, n0 - 2)


# ---------------------------------------------------------------------------
# closed forms


def ph0_power_sum(r: float) -> float:
    """sum_{n>=2} r^n / (n(n-1)) = r + (1-r) ln(1-r)."""
    if r == 1.0:
        return 1.0
    return r + (1.0 - r) * math.log1p(-r)


def ph0_alternating_sum(r: float) -> float:
    """sum_{n>=2} (-1)^{n-1} r^n / (n(n-1)) = r - (1+r) ln(1+r)."""
    return r - (1.0 + r) * math.log1p(r)


def closed_form_ph0(k: int, variant: str, r: float) -> float:
    """sum_{n>=2} w(n) r^n / (n(n-1)) for w(n) = n^k or (n+1)^k, k = 0..3."""
    r = float(r)
    if not 0.0 <= r < 1.0:
        raise DomainError(f"closed forms need r in [0, 1), got {r!r}")
    if variant not in ("n", "n+1"):
        raise DomainError(f"variant must be 'n' or 'n+1', got {variant!r}")
    if k not in (0, 1, 2, 3):
        raise DomainError(f"k must be in 0..3, got {k!r}")
    lg = math.log1p(-r)
    s = 1.0 - r
    if k == 0:
        return r + s * lg
    if variant == "n":
        if k == 1:
            return -r * lg
        if k == 2:
            return r * (r - s * lg) / s
        return r * ((3.0 - 2.0 * r) * r / (s * s) - lg)
    if k == 1:
        return r + (1.0 - 2.0 * r) * lg
    if k == 2:
        return (r + (1.0 - 5.0 * r + 4.0 * r * r) * lg) / s
    return (r + 4.0 * r * r - 4.0 * r**3 + s * s * (1.0 - 8.0 * r) * lg) / (s * s)


def wh0_power_sum(alpha: float, r: float) -> float:
    """sum_{n>=2} r^n / (alpha n^2 + (1-alpha) n).

    Partial fractions give (1/(1-alpha)) [-ln(1-r) - r - r^2 Phi(r, 1, 1 + 1/alpha)];
    alpha = 1 is Li_2(r) - r.
    """
    if alpha == 1.0:
        return dilog(r) - r
    if alpha == 0.0:
        return -math.log1p(-r) - r
    if r == 0.0:
        return 0.0
    phi = lerch_phi(r, 1.0 + 1.0 / alpha, tol=1e-15 * max(1.0, 1.0 / (1.0 - r))).value
    return (-math.log1p(-r) - r - r * r * phi) / (1.0 - alpha)


def wh0_poly_sum(k: int, alpha: float, r: float) -> float:
    """sum_{n>=2} n^k r^n / (alpha n^2 + (1-alpha) n), k = 1..3, via 2F1."""
    if k not in (1, 2, 3):
        raise DomainError("k must be 1, 2 or 3")
    s = 1.0 - r
    if alpha == 0.0:
        if k == 1:
            return r * r / s
        if k == 2:
            return r / (s * s) - r
        return r * (1.0 + r) / s**3 - r
    if r == 0.0:
        return 0.0
    b = 1.0 + 1.0 / alpha
    # the 2F1 values grow like (1-r)^-a, so tolerances are relative
    if k == 1:
        return r * r / (1.0 + alpha) * gauss_2f1(1.0, b, b + 1.0, r, tol=1e-12 / s).value
    f3 = gauss_2f1(3.0, b, b + 1.0, r, tol=1e-12 / s**3).value
    if k == 2:
        return r * r * ((2.0 - r) / (s * s) - 2.0 * alpha * f3 / (1.0 + alpha))
    f4 = gauss_2f1(4.0, b + 1.0, b + 2.0, r, tol=1e-12 / s**4).value
    return r * r * ((4.0 - 3.0 * r + r * r) / s**3
                    - 4.0 * alpha * f3 / (1.0 + alpha)
                    - 6.0 * alpha * r * f4 / (1.0 + 2.0 * alpha))


def closed_form(family: PhiFamily, weight_kind: str, r: float, alpha: float = 0.0):
    """Closed-form weighted sum for r in [0, 1), or None when none is known."""
    kind, p = family.kind, family.param
    if kind in ("poly", "shift") and p == 0.0:
        kind = "power"
    if weight_kind == "ph0":
        if kind == "power":
            return ph0_power_sum(r)
        if kind in ("poly", "shift") and p in (1.0, 2.0, 3.0):
            return closed_form_ph0(int(p), "n" if kind == "poly" else "n+1", r)
        return None
    if kind == "power":
        return wh0_power_sum(alpha, r)
    if kind == "poly" and p in (1.0, 2.0, 3.0):
        return wh0_poly_sum(int(p), alpha, r)
    return None


def _sum_at_one(family: PhiFamily, weight_kind: str, alpha: float) -> float:
    """Value of the weighted sum at r = 1 (``inf`` when it diverges)."""
    p = 0.0 if family.kind == "power" else family.param
    if family.kind == "custom":
        raise ToleranceUnreachable("custom families are not summed at r = 1")
    degree = 1.0 if (weight_kind == "wh0" and alpha == 0.0) else 2.0
    if p >= degree - 1.0:
        return math.inf
    if p != 0.0:
        raise ToleranceUnreachable("algebraically convergent sum at r = 1 is not supported")
    if weight_kind == "ph0":
        return 1.0
    if alpha == 1.0:
        return math.pi**2 / 6.0 - 1.0
    # sum_{n>=2} [1/n - 1/(n + 1/alpha - 1)] / (1 - alpha)
    return (digamma(1.0 + 1.0 / alpha) - digamma(2.0)) / (1.0 - alpha)


def weighted_value(family: PhiFamily, weight_kind: str, r: float, alpha: float = 0.0,
                   tol: float = 1e-13) -> float:
    """Fast evaluation used inside root finding: closed form if known, else truncation."""
    if r >= 1.0:
        return _sum_at_one(family, weight_kind, alpha)
    cf = closed_form(family, weight_kind, r, alpha)
    if cf is not None:
        return cf
    return truncated_sum(family, weight_kind, r, alpha, tol=tol).value


def sum_weighted(spec: WeightedSumSpec) -> SeriesValue:
    """Weighted sum with certified error, cross-checked against truncation.

    When a closed form exists its value is returned with
    ``tail_bound = |closed - truncated| + truncation bound``, a valid bound on
    the closed form's error.  A disagreement beyond ``tol * max(1, |value|)``
    raises.  Large sums (near r = 1 with polynomial weights) cannot meet an
    absolute 1e-12 in double precision, hence the mixed criterion.
    """
    fam, wk, r, alpha, tol = spec.family, spec.weight_kind, spec.r, spec.alpha, spec.tol
    if r == 1.0:
        v = _sum_at_one(fam, wk, alpha)
        if math.isinf(v):
            raise ToleranceUnreachable("weighted sum diverges at r = 1")
        return SeriesValue(v, 4.0 * EPS * abs(v), 1)
    trunc = truncated_sum(fam, wk, r, alpha, tol=tol / 2.0, relative=True)
    cf = closed_form(fam, wk, r, alpha)
    if cf is None:
        return trunc
    gap = abs(cf - trunc.value)
    if gap > tol * max(1.0, abs(cf)):
        raise ArithmeticError(
            f"closed form and truncation disagree by {gap:.3g} (tol={tol}) for {fam.label}/{wk} at r={r}")
    return SeriesValue(cf, gap + trunc.tail_bound, trunc.terms_used)


# ---------------------------------------------------------------------------
# alternating boundary constants


def boundary_constant_ph0() -> float:
    """sum_{n>=2} (-1)^{n-1} / (n(n-1)) = 1 - ln 4."""
    return 1.0 - 2.0 * LN2


def boundary_constant_wh0(alpha: float) -> float:
    """sum_{n>=2} (-1)^{n-1} / (alpha n^2 + (1-alpha) n).

    Equals (H(alpha) + ln 2 - 1) / (1 - alpha) for 0 < alpha < 1 and ln 2 - 1 at
    alpha = 0.  At alpha = 1 the expression is 0/0; the sum is then
    sum_{n>=2} (-1)^{n-1} / n^2 = pi^2/12 - 1, which is also the alpha -> 1 limit.
    """
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha!r}")
    if alpha == 0.0:
        return LN2 - 1.0
    if alpha == 1.0:
        return math.pi**2 / 12.0 - 1.0
    return (h_alpha(alpha) + LN2 - 1.0) / (1.0 - alpha)


def wh0_alternating_sum(alpha: float, r: float) -> float:
    """sum_{n>=2} (-1)^{n-1} r^n / (alpha n^2 + (1-alpha) n) for 0 <= r <= 1.

    For alpha < 1: (1/(1-alpha)) [ln(1+r) - r + r^2 Phi(-r, 1, 1 + 1/alpha)].
    alpha = 1 goes through the dilogarithm.
    """
    if r == 1.0:
        return boundary_constant_wh0(alpha)
    if alpha == 0.0:
        return math.log1p(r) - r
    if alpha == 1.0:
        # -Li_2(-r) - r with Li_2(-r) = Li_2(r^2)/2 - Li_2(r)
        return dilog(r) - 0.5 * dilog(r * r) - r
    if r == 0.0:
        return 0.0
    phi = lerch_phi(-r, 1.0 + 1.0 / alpha, tol=1e-13).value
    return (math.log1p(r) - r + r * r * phi) / (1.0 - alpha)


# ---------------------------------------------------------------------------
# series of the Moebius self-map (a + z) / (1 + a z)


def moebius_series(a: float, r: float, part: str) -> float:
    """Closed forms of the majorant-type quantities of (a+z)/(1+az) at |z| = r.

    Coefficients are |a_0| = a, |a_n| = (1-a^2) a^{n-1}.

    ``B2``       sum_{n>=2} |a_n| r^n
    ``F0Norm``   sum_{n>=1} |a_n|^2 r^{2n}
    ``Aterm``    (1/(1+a) + r/(1-r)) * F0Norm
    ``SrOverPi`` sum_{n>=1} n |a_n|^2 r^{2n} (normalized area of the image of |z|<r)
    ``SrRatio``  SrOverPi / (1 - SrOverPi)
    """
    a, r = float(a), float(r)
    if not 0.0 <= a < 1.0:
        raise DomainError(f"a must lie in [0, 1), got {a!r}")
    if not 0.0 <= r < 1.0:
        raise DomainError(f"r must lie in [0, 1), got {r!r}")
    if part not in MOEBIUS_PARTS:
        raise DomainError(f"part must be one of {MOEBIUS_PARTS}, got {part!r}")
    c = (1.0 - a) * (1.0 + a)  # 1 - a^2 without cancellation near a = 1
    if part == "B2":
        return c * a * r * r / (1.0 - a * r)
    if part == "F0Norm":
        return c * c * r * r / (1.0 - a * a * r * r)
    if part == "Aterm":
        return (1.0 + a * r) / ((1.0 + a) * (1.0 - r)) * c * c * r * r / (1.0 - a * a * r * r)
    if part == "SrOverPi":
        return c * c * r * r / (1.0 - a * a * r * r) ** 2
    return c * c * r * r / ((1.0 - r * r) * (1.0 - a**4 * r * r))
