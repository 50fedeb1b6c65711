"""Digamma, the Hurwitz-Lerch transcendent at s=1, and Gauss 2F1 on [0, 1).

Every infinite sum is returned as a :class:`SeriesValue` whose ``tail_bound``
bounds ``|value - exact|``: the truncation remainder plus a floating-point
rounding allowance.  Summation order is always ascending in ``n``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ToleranceUnreachable

EPS = np.finfo(float).eps
MAX_TERMS = 10**6

# B_{2k} / (2k) for k = 1..10
_ASYMPTOTIC_COEFFS = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
    43867.0 / 14364.0,
    -174611.0 / 6600.0,
)
_SHIFT_THRESHOLD = 6.0


@dataclass(frozen=True)
class SeriesValue:
    """A partial sum together with a bound on its distance to the full sum."""

    value: float
    tail_bound: float
    terms_used: int

    def __post_init__(self):
        object.__setattr__(self, "value", float(self.value))
        object.__setattr__(self, "tail_bound", float(self.tail_bound))
        object.__setattr__(self, "terms_used", int(self.terms_used))
        if not (math.isfinite(self.tail_bound) and self.tail_bound >= 0.0):
            raise ValueError(f"tail_bound must be finite and >= 0, got {self.tail_bound!r}")
        if self.terms_used < 0:
            raise ValueError("terms_used must be >= 0")

    def __float__(self) -> float:
        return float(self.value)


def _rounding_allowance(abs_sum: float, n_terms: int = 0) -> float:
    # fsum is correctly rounded; each term carries a few ulps, recurrences
    # accumulate roughly one ulp per step.
    return (4.0 + n_terms) * EPS * abs_sum


def digamma(x: float) -> float:
    """Digamma function psi(x) for real x > 0.

    Shifts the argument above 6 with psi(x) = psi(x+1) - 1/x, then applies the
    asymptotic expansion ln x - 1/(2x) - sum B_{2k} / (2k x^{2k}).
    """
    x = float(x)
    if not x > 0.0 or not math.isfinite(x):
        raise DomainError(f"digamma requires x > 0, got {x!r}")
    shift = []
    while x < _SHIFT_THRESHOLD:
        shift.append(1.0 / x)
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    for c in reversed(_ASYMPTOTIC_COEFFS):
        series = (series + c) * inv2
    return (math.log(x) - 0.5 / x - series) - math.fsum(shift)


def _lerch_alternating_unit(a: float, tol: float) -> SeriesValue:
    """Phi(-1, 1, a) = sum (-1)^n / (n + a).

    The first terms are added in (even, odd) pairs.  The remaining tail
    sum_{k>=0} (-1)^k b_{N+k} with b_n = 1/(n+a) is expanded by Euler's
    transformation, sum_j Delta^j b_N / 2^{j+1}; since b is completely monotone
    each Delta^m b is positive and decreasing, so the alternating-series
    estimate bounds the remainder after m terms by Delta^m b_N / 2^m.
    """
    n_direct = 20
    k = np.arange(n_direct // 2, dtype=float)
    pairs = 1.0 / ((2.0 * k + a) * (2.0 * k + 1.0 + a))
    head = list(pairs)
    b = n_direct + a
    diff = 1.0 / b  # Delta^j b_N
    scale = 0.5
    tail_terms = []
    j = 0
    while True:
        tail_terms.append(diff * scale)
        j += 1
        diff *= j / (b + j)
        scale *= 0.5
        bound = 2.0 * diff * scale  # Delta^j b_N / 2^j
        if bound <= tol / 4.0:
            break
        if j > 2000:
            raise ToleranceUnreachable(f"Euler tail for Phi(-1,1,{a}) did not reach tol={tol}")
    terms = head + tail_terms
    value = math.fsum(terms)
    total = bound + _rounding_allowance(math.fsum(abs(t) for t in terms), 4)
    if total > tol:
        raise ToleranceUnreachable(f"Phi(-1,1,{a}): attainable bound {total:.3g} exceeds tol={tol}")
    return SeriesValue(value, total, n_direct + j)


def lerch_phi(z: float, a: float, s: int = 1, tol: float = 1e-14,
              max_terms: int = MAX_TERMS) -> SeriesValue:
    """Hurwitz-Lerch transcendent Phi(z, 1, a) = sum_{n>=0} z^n / (n + a).

    Supports real ``-1 <= z < 1`` and ``a > 0``.  For ``0 <= z < 1`` the
    remainder after N terms is at most z^N / ((N + a)(1 - z)); for
    ``-1 < z < 0`` it is at most the first omitted term.  ``z = -1`` uses an
    Euler-transformed tail (see :func:`_lerch_alternating_unit`).
    """
    if s != 1:
        raise DomainError("only s = 1 is supported")
    z = float(z)
    a = float(a)
    if not a > 0.0:
        raise DomainError(f"Phi requires a > 0, got a={a!r}")
    if not tol > 0.0:
        raise DomainError("tol must be positive")
    if not -1.0 <= z < 1.0:
        raise DomainError(f"Phi(z,1,a) diverges or is unsupported for z={z!r}")
    if z == -1.0:
        return _lerch_alternating_unit(a, tol)
    if z == 0.0:
        return SeriesValue(1.0 / a, _rounding_allowance(1.0 / a), 1)

    q = abs(z)
    chunk = 64
    parts = []
    abs_total = 0.0
    n0 = 0
    while True:
        n = np.arange(n0, n0 + chunk, dtype=float)
        terms = np.power(z, n) / (n + a)
        parts.append(terms)
        abs_total += float(np.sum(np.abs(terms)))
        n0 += chunk
        next_term = q**n0 / (n0 + a)
        trunc = next_term / (1.0 - q) if z > 0.0 else next_term
        if trunc <= tol / 4.0 or next_term == 0.0:
            break
        if n0 >= max_terms:
            raise ToleranceUnreachable(f"Phi({z},1,{a}) needs more than {max_terms} terms")
        chunk = min(2 * chunk, 65536)
    all_terms = np.concatenate(parts)
    value = math.fsum(all_terms)
    total = trunc + _rounding_allowance(abs_total)
    if total > tol:
        raise ToleranceUnreachable(f"Phi({z},1,{a}): attainable bound {total:.3g} exceeds tol={tol}")
    return SeriesValue(value, total, n0)


def lerch_phi_via_digamma(a: float) -> float:
    """Phi(-1, 1, a) = (psi((a+1)/2) - psi(a/2)) / 2 for a > 0."""
    a = float(a)
    if not a > 0.0:
        raise DomainError(f"a must be positive, got {a!r}")
    return 0.5 * (digamma(0.5 * (a + 1.0)) - digamma(0.5 * a))


def h_alpha(alpha: float, tol: float = 1e-14) -> float:
    """H(alpha) = Phi(-1, 1, 1 + 1/alpha) = sum (-1)^n / (n + 1 + 1/alpha).

    Increasing on alpha > 0, with H(0+) = 0 and H(1) = 1 - ln 2.
    """
    alpha = float(alpha)
    if not alpha > 0.0:
        raise DomainError(f"H(alpha) requires alpha > 0, got {alpha!r}")
    return lerch_phi(-1.0, 1.0 + 1.0 / alpha, tol=tol).value


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0.0 and float(x).is_integer()


def gauss_2f1(a: float, b: float, c: float, z: float, tol: float = 1e-13,
              max_terms: int = MAX_TERMS) -> SeriesValue:
    """Gauss hypergeometric 2F1(a, b; c; z) by its power series, 0 <= z < 1.

    Terms follow t_{n+1} = t_n (a+n)(b+n) z / ((c+n)(n+1)).  Once every
    Pochhammer factor is positive, the ratio for all k >= n is at most
    q_n = z * max(1, (a+n)/(1+n)) * max(1, (b+n)/(c+n)), which gives the
    geometric remainder bound |t_n| / (1 - q_n).
    """
    a, b, c, z = float(a), float(b), float(c), float(z)
    if _is_nonpositive_integer(c):
        raise DomainError(f"c must not be a nonpositive integer, got {c!r}")
    if not 0.0 <= z < 1.0:
        raise DomainError(f"z must lie in [0, 1), got {z!r}")
    if not tol > 0.0:
        raise DomainError("tol must be positive")
    if z == 0.0:
        return SeriesValue(1.0, _rounding_allowance(1.0), 1)

    terms = []
    t = 1.0
    n = 0
    start = max(0.0, -a, -b, -c) + 1.0  # all factors positive beyond this index
    trunc = math.inf
    running = 0.0
    while True:
        terms.append(t)
        running += t
        step = (a + n) * (b + n) * z / ((c + n) * (n + 1))
        t *= step
        n += 1
        if t == 0.0:
            trunc = 0.0
            break
        if n >= start:
            q = z * max(1.0, (a + n) / (1.0 + n)) * max(1.0, (b + n) / (c + n))
            if q < 1.0:
                trunc = abs(t) / (1.0 - q)
                # summing past tol/4 down to an ulp of the sum is cheap and
                # keeps the value accurate when tol is loose
                if trunc <= min(tol / 4.0, EPS * abs(running)):
                    break
        if n >= max_terms:
            raise ToleranceUnreachable(
                f"2F1({a},{b};{c};{z}) needs more than {max_terms} terms for tol={tol}")
    value = math.fsum(terms)
    # term k went through k multiplicative updates of ~3 roundings each
    drift = math.fsum((3 * k + 4) * abs(x) for k, x in enumerate(terms))
    total = trunc + EPS * drift
    if total > tol:
        raise ToleranceUnreachable(
            f"2F1({a},{b};{c};{z}): attainable bound {total:.3g} exceeds tol={tol}")
    return SeriesValue(value, total, n)


def dilog(x: float) -> float:
    """Real dilogarithm Li_2(x) = sum_{n>=1} x^n / n^2 for 0 <= x <= 1.

    Direct series for x <= 1/2; otherwise Euler's reflection
    Li_2(x) = pi^2/6 - ln(x) ln(1-x) - Li_2(1-x).
    """
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"dilog needs x in [0, 1], got {x!r}")
    if x == 1.0:
        return math.pi**2 / 6.0
    if x > 0.5:
        return math.pi**2 / 6.0 - math.log(x) * math.log1p(-x) - dilog(1.0 - x)
    if x == 0.0:
        return 0.0
    n = np.arange(1, 60, dtype=float)  # 0.5^60 / 60^2 is far below eps
    return math.fsum(np.power(x, n) / (n * n))
