"""Radius equations lhs(r) = rhs on [0, 1] and a bracketing root finder."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from .classes import HarmonicPH0Extremal, HarmonicWH0Extremal, admissible_M_bound, dist_lower_bound
from .errors import (
    AdmissibilityError,
    BohrError,
    ConvergenceError,
    DomainError,
    SignCheckError,
    ToleranceUnreachable,
)
from .families import PhiFamily, eval_dphi, eval_phi, poly_weight, shift_weight
from .published import TABLE_M, TABLE_TOLERANCE, TABLES
from .series import denominators, weighted_value
from .specfun import gauss_2f1

BISECT_WIDTH = 1e-8
FINAL_WIDTH = 1e-13
CERT_POINTS = 256
UNIQUENESS_POINTS = 1024
_NEAR_ONE = 1.0 - 2.0**-30
_DERIV_TERMS = 200


@dataclass(frozen=True)
class RadiusEquation:
    """lhs(r) = rhs with lhs continuous and increasing on [lo, hi].

    ``dlhs`` (optional) returns a lower bound of lhs'(r) on (0, 1); it backs the
    monotonicity certificate.
    """

    lhs: Callable[[float], float]
    rhs: float
    meta: Dict[str, object] = field(default_factory=dict, compare=False)
    dlhs: Optional[Callable[[float], float]] = None
    lo: float = 0.0
    hi: float = 1.0

    def __call__(self, r: float) -> float:
        return self.lhs(r) - self.rhs


@dataclass(frozen=True)
class RootResult:
    root: float
    bracket: Tuple[float, float]
    residual: float
    iterations: int
    monotone_certificate: bool
    sign_changes: int = -1
    meta: Dict[str, object] = field(default_factory=dict, compare=False)


def _safe_eval(lhs: Callable[[float], float], r: float) -> Tuple[float, float]:
    """lhs at r, retreating slightly from r = 1 when the value there is not available."""
    try:
        return r, lhs(r)
    except ToleranceUnreachable:
        if r < 1.0:
            raise
        return _NEAR_ONE, lhs(_NEAR_ONE)


def _check_signs(lhs, rhs, lo, hi, meta) -> float:
    f_lo = lhs(lo) - rhs
    hi, v = _safe_eval(lhs, hi)
    f_hi = v - rhs
    if not (f_lo < 0.0 < f_hi):
        raise SignCheckError(f"endpoints do not straddle a root for {meta}: f({lo})={f_lo:.6g}, f({hi})={f_hi:.6g}")
    return hi


def _weighted_deriv_lower(family: PhiFamily, weight_kind: str, alpha: float, r: float) -> float:
    n = np.arange(2, 2 + _DERIV_TERMS)
    return math.fsum(family.dterms(n, r) / denominators(weight_kind, n, alpha))


def _phi0_term_deriv(family: PhiFamily, r: float) -> float:
    # d/dr [r phi_0(r)]
    return eval_phi(family, 0, r) + r * eval_dphi(family, 0, r)


def build_ph0_equation(family: PhiFamily, M: float) -> RadiusEquation:
    """r phi_0(r) + 2M sum phi_n(r)/(n(n-1)) = 1 + 2M (1 - ln 4)."""
    M = float(M)
    bound = admissible_M_bound(family)
    if not 0.0 < M < bound:
        raise AdmissibilityError(f"M={M} outside the admissible range (0, {bound:.6g})")
    rhs = dist_lower_bound(HarmonicPH0Extremal(M))

    def lhs(r: float) -> float:
        return r * eval_phi(family, 0, r) + 2.0 * M * weighted_value(family, "ph0", r)

    def dlhs(r: float) -> float:
        return _phi0_term_deriv(family, r) + 2.0 * M * _weighted_deriv_lower(family, "ph0", 0.0, r)

    meta = {"class": "ph0", "family": family.label, "M": M}
    hi = _check_signs(lhs, rhs, 0.0, 1.0, meta)
    return RadiusEquation(lhs, rhs, meta, dlhs, 0.0, hi)


def build_wh0_equation(family: PhiFamily, alpha: float) -> RadiusEquation:
    """r phi_0(r) + 2 sum phi_n(r)/(alpha n^2 + (1-alpha) n) = L_w(1)."""
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise DomainError(f"alpha must lie in [0, 1], got {alpha!r}")
    rhs = dist_lower_bound(HarmonicWH0Extremal(alpha))

    def lhs(r: float) -> float:
        return r * eval_phi(family, 0, r) + 2.0 * weighted_value(family, "wh0", r, alpha)

    def dlhs(r: float) -> float:
        return _phi0_term_deriv(family, r) + 2.0 * _weighted_deriv_lower(family, "wh0", alpha, r)

    meta = {"class": "wh0", "family": family.label, "alpha": alpha}
    hi = _check_signs(lhs, rhs, 0.0, 1.0, meta)
    return RadiusEquation(lhs, rhs, meta, dlhs, 0.0, hi)


def count_sign_changes(eq: RadiusEquation, points: int = UNIQUENESS_POINTS) -> int:
    """Sign changes of lhs - rhs on an evenly spaced grid of [lo, hi] (endpoints included)."""
    signs = []
    for r in np.linspace(eq.lo, eq.hi, points):
        v = eq(float(r))
        if v != 0.0:
            signs.append(v > 0.0)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def monotone_certificate(eq: RadiusEquation, points: int = CERT_POINTS) -> bool:
    """lhs' > 0 at ``points`` interior points of (lo, hi).

    Uses the derivative lower bound when the equation has one, otherwise
    forward differences of lhs.
    """
    rs = np.linspace(eq.lo, eq.hi, points + 2)[1:-1]
    if eq.dlhs is not None:
        return all(eq.dlhs(float(r)) > 0.0 for r in rs)
    h = 1e-7
    return all(eq.lhs(float(r) + h) > eq.lhs(float(r)) for r in rs)


def solve_radius(eq: RadiusEquation, tol: float = 1e-12, max_iter: int = 400,
                 check_uniqueness: bool = True) -> RootResult:
    """Bisection down to width 1e-8, then Illinois-safeguarded secant to 1e-13.

    ``tol`` bounds the residual relative to max(1, |rhs|).
    """
    if not tol > 0.0:
        raise DomainError("tol must be positive")
    lo, hi = eq.lo, eq.hi
    f_lo, f_hi = eq(lo), eq(hi)
    if not (f_lo < 0.0 < f_hi):
        raise SignCheckError(f"no sign change on [{lo}, {hi}]")
    it = 0
    while hi - lo > BISECT_WIDTH:
        mid = 0.5 * (lo + hi)
        f_mid = eq(mid)
        it += 1
        if f_mid == 0.0:
            lo = hi = mid
            f_lo = f_hi = 0.0
            break
        if f_mid < 0.0:
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
        if it > max_iter:
            raise ConvergenceError("bisection exceeded max_iter")
    side = 0
    while hi - lo > FINAL_WIDTH:
        it += 1
        if it > max_iter:
            raise ConvergenceError("secant polish exceeded max_iter")
        x = hi - f_hi * (hi - lo) / (f_hi - f_lo)
        if not lo < x < hi:
            x = 0.5 * (lo + hi)
        f_x = eq(x)
        if f_x == 0.0:
            lo = hi = x
            f_lo = f_hi = 0.0
            break
        if f_x < 0.0:
            lo, f_lo = x, f_x
            if side == -1:
                f_hi *= 0.5
            side = -1
        else:
            hi, f_hi = x, f_x
            if side == 1:
                f_lo *= 0.5
            side = 1
        # probe a tight bracket around the current estimate
        if hi - lo > FINAL_WIDTH:
            d = 0.25 * FINAL_WIDTH
            a, b = max(lo, x - d), min(hi, x + d)
            f_a, f_b = eq(a), eq(b)
            it += 1
            if f_a < 0.0 < f_b:
                lo, f_lo, hi, f_hi = a, f_a, b, f_b
    root = lo if abs(eq(lo)) <= abs(eq(hi)) else hi
    residual = abs(eq(root))
    if residual > tol * max(1.0, abs(eq.rhs)):
        raise ConvergenceError(f"residual {residual:.3g} above tol={tol} at r={root!r}")
    cert = monotone_certificate(eq)
    changes = count_sign_changes(eq) if check_uniqueness else -1
    return RootResult(root, (lo, hi), residual, it, cert, changes, dict(eq.meta))


# ---------------------------------------------------------------------------
# classical radii

CLASSICAL_KINDS = ("rogosinski2", "rogosinski1", "hypergeometric")


def _hyp_coeffs_nonnegative(a: float, b: float, c: float, n_check: int = 200) -> bool:
    g = 1.0
    for n in range(n_check):
        g *= (a + n) * (b + n) / ((c + n) * (n + 1.0))
        if g < 0.0:
            return False
    return True


def _hyp_at_one(a: float, b: float, c: float) -> float:
    if c - a - b <= 0.0:
        return math.inf
    return math.gamma(c) * math.gamma(c - a - b) / (math.gamma(c - a) * math.gamma(c - b))


def classical_equation(kind: str, N: int = 1, a: float = 1.0, b: float = 1.0, c: float = 2.0,
                       p: float = 2.0) -> RadiusEquation:
    if kind == "rogosinski2" or kind == "rogosinski1":
        if int(N) != N or N < 1:
            raise DomainError(f"N must be an integer >= 1, got {N!r}")
        k = 2.0 if kind == "rogosinski2" else 1.0
        # k(1+r) r^N - (1-r)^2 = 0, increasing on [0, 1]
        return RadiusEquation(
            lambda r: k * (1.0 + r) * r**N - (1.0 - r) ** 2,
            0.0,
            {"kind": kind, "N": int(N)},
            lambda r: k * r**N + k * N * (1.0 + r) * r ** (N - 1) + 2.0 * (1.0 - r),
        )
    if kind == "hypergeometric":
        if not (a > -1.0 and b > -1.0 and c > -1.0):
            raise DomainError("a, b, c must exceed -1")
        if c <= 0.0 and float(c).is_integer():
            raise DomainError("c must not be a nonpositive integer")
        if not 0.0 < p <= 2.0:
            raise DomainError(f"p must lie in (0, 2], got {p!r}")
        if not _hyp_coeffs_nonnegative(a, b, c):
            raise DomainError("hypergeometric coefficients must be nonnegative")
        at_one = _hyp_at_one(a, b, c)

        def lhs(x: float) -> float:
            if x >= 1.0:
                return at_one - 1.0
            return gauss_2f1(a, b, c, x, tol=1e-11).value - 1.0

        eq = RadiusEquation(lhs, p / 2.0, {"kind": kind, "a": a, "b": b, "c": c, "p": p})
        if not at_one - 1.0 > p / 2.0:
            raise SignCheckError(f"|F(1) - 1| = {at_one - 1.0:.6g} never reaches p/2")
        # F is slow to evaluate near 1; shrink the bracket while keeping the sign
        hi = 1.0
        for x in (0.9, 0.99, 0.999):
            if lhs(x) > p / 2.0:
                hi = x
                break
        else:
            raise ToleranceUnreachable("root too close to 1 for the series evaluator")
        return RadiusEquation(lhs, p / 2.0, eq.meta, None, 0.0, hi)
    raise DomainError(f"kind must be one of {CLASSICAL_KINDS}, got {kind!r}")


def classical_radius(kind: str, N: int = 1, a: float = 1.0, b: float = 1.0, c: float = 2.0,
                     p: float = 2.0, tol: float = 1e-12) -> float:
    """Root in (0, 1) of a classical Bohr-Rogosinski-type radius equation.

    ``rogosinski2``:   2(1+r) r^N - (1-r)^2 = 0
    ``rogosinski1``:   (1+r) r^N - (1-r)^2 = 0
    ``hypergeometric``: |2F1(a, b; c; x) - 1| = p/2
    """
    return solve_radius(classical_equation(kind, N, a, b, c, p), tol).root


def refined_r0(a0: float) -> float:
    """2 / (3 + a0 + sqrt(5)(1 + a0)), the sharp radius of |f| + B_1 + A <= 1."""
    if not 0.0 <= a0 < 1.0:
        raise DomainError(f"|a0| must lie in [0, 1), got {a0!r}")
    return 2.0 / (3.0 + a0 + math.sqrt(5.0) * (1.0 + a0))


def refined_r0_squared(a0: float, tol: float = 1e-12) -> float:
    """Root in (0, 1) of (1 - a0^3) r^3 - (1 + 2 a0) r^2 - 2r + 1 = 0 (the |f|^2 variant)."""
    if not 0.0 <= a0 < 1.0:
        raise DomainError(f"|a0| must lie in [0, 1), got {a0!r}")
    # written as g(r) = -(cubic), increasing on [0, 1]
    eq = RadiusEquation(
        lambda r: -((1.0 - a0**3) * r**3 - (1.0 + 2.0 * a0) * r * r - 2.0 * r + 1.0),
        0.0,
        {"kind": "refined_squared", "a0": a0},
        lambda r: -(3.0 * (1.0 - a0**3) * r * r - 2.0 * (1.0 + 2.0 * a0) * r - 2.0),
    )
    return solve_radius(eq, tol).root


# ---------------------------------------------------------------------------
# tables


@dataclass(frozen=True)
class TableCell:
    M: float
    weight: int
    root: Optional[float]
    residual: Optional[float]
    paper_value: float
    abs_diff: Optional[float]
    flag: str
    result: Optional[RootResult] = field(default=None, compare=False, repr=False)
    error: Optional[str] = None


@dataclass
class TableResult:
    table_id: int
    cells: List[TableCell]
    ordering_violations: List[Tuple[float, int]]
    seconds: float
    provenance: str

    @property
    def agreement(self) -> int:
        return sum(1 for c in self.cells if c.flag == "ok")

    @property
    def ordering_ok(self) -> bool:
        return not self.ordering_violations

    @property
    def mismatches(self) -> List[TableCell]:
        return [c for c in self.cells if c.flag != "ok"]


def table_family(table_id: int, k: int) -> PhiFamily:
    return poly_weight(k) if TABLES[table_id]["family"] == "poly" else shift_weight(k)


def table_generate(table_id: int, tol: float = 1e-12, agree: float = TABLE_TOLERANCE) -> TableResult:
    """Recompute a printed 3 x 9 table of PH0 radii and compare cell by cell.

    Cells get flag ``ok`` (within ``agree`` of the printed value), ``mismatch``
    or ``error`` (solver failure, the table still completes).  The ordering
    R_1 >= R_2 >= R_3 of computed roots is checked for every M.
    """
    if table_id not in TABLES:
        raise DomainError(f"table_id must be one of {sorted(TABLES)}, got {table_id!r}")
    start = time.perf_counter()
    spec = TABLES[table_id]
    cells: List[TableCell] = []
    for k, printed in sorted(spec["rows"].items()):
        fam = table_family(table_id, k)
        for M, pv in zip(TABLE_M, printed):
            try:
                res = solve_radius(build_ph0_equation(fam, M), tol)
            except BohrError as exc:
                cells.append(TableCell(M, k, None, None, pv, None, "error", None, str(exc)))
                continue
            diff = abs(res.root - pv)
            flag = "ok" if diff <= agree else "mismatch"
            cells.append(TableCell(M, k, res.root, res.residual, pv, diff, flag, res))
    violations = []
    for M in TABLE_M:
        col = [c for c in cells if c.M == M]
        col.sort(key=lambda c: c.weight)
        for upper, lower in zip(col, col[1:]):
            if upper.root is None or lower.root is None or upper.root < lower.root:
                violations.append((M, lower.weight))
    return TableResult(table_id, cells, violations, time.perf_counter() - start, spec["provenance"])
