"""Grid verification of the sharp Bohr-type inequality for self-maps of the disk
and of the harmonic Bohr inequalities via their extremal functions.

For f in the Schur class with |a_0| = a, on |z| = r,

    L1(r) = |f(z)| + |f'(z)| r + B_2(f, r) + A(f_0, r) + lam * S_r / (pi - S_r) <= 1

for r <= R = (sqrt(17) - 3)/4 with the sharp lam = (221 - 43 sqrt(17))/64.  The
reduction to the majorant A1 covers every f; the Moebius map (a + z)/(1 + a z)
evaluated at z = r checks sharpness.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Union

import numpy as np

from .classes import (
    HarmonicPH0Extremal,
    HarmonicWH0Extremal,
    MoebiusExtremal,
    dist_lower_bound,
    harmonic_bohr_sum,
)
from .errors import DomainError
from .families import PhiFamily
from .published import LAMBDA_SHARP, R_SHARP, SQRT17
from .radius import build_ph0_equation, build_wh0_equation, solve_radius
from .series import moebius_series
from .specfun import EPS

# F1, F2 coefficients of a^0 .. a^5, as printed
F1_COEFFS = (
    8.0 * (-3445.0 + 851.0 * SQRT17),
    16.0 * (-195.0 + 53.0 * SQRT17),
    2.0 * (24191.0 - 5849.0 * SQRT17),
    2.0 * (-3927.0 + 961.0 * SQRT17),
    8.0 * (-5981.0 + 1451.0 * SQRT17),
    8.0 * (-3187.0 + 773.0 * SQRT17),
)
F2_COEFFS = (
    27560.0 - 6808.0 * SQRT17,
    3120.0 - 848.0 * SQRT17,
    -48382.0 + 11698.0 * SQRT17,
    7854.0 - 1922.0 * SQRT17,
    47848.0 - 11608.0 * SQRT17,
    25496.0 - 6184.0 * SQRT17,
)


@dataclass
class VerificationReport:
    """Outcome of a sweep.  ``worst_margin`` is max(lhs - rhs) over the grid."""

    claim_id: str
    grid: Dict[str, object]
    worst_margin: float
    witnesses: List[Dict[str, float]] = field(default_factory=list)
    passed: bool = False
    tol: float = 0.0

    def to_dict(self) -> Dict[str, object]:
        return {
            "claim_id": self.claim_id,
            "grid": self.grid,
            "worst_margin": self.worst_margin,
            "witnesses": self.witnesses,
            "passed": self.passed,
            "tol": self.tol,
        }


def _check_ar(a, r) -> None:
    a, r = np.asarray(a), np.asarray(r)
    if np.any(a < 0.0) or np.any(a >= 1.0):
        raise DomainError("a must lie in [0, 1)")
    if np.any(r < 0.0) or np.any(r >= 1.0):
        raise DomainError("r must lie in [0, 1)")


def _check_lam(lam: float) -> None:
    if not lam >= 0.0:
        raise DomainError(f"lambda must be >= 0, got {lam!r}")


def _l1_terms(a, r, lam):
    """The five summands of L1 minus 1 for the Moebius extremal, each O(1 - a)."""
    c = (1.0 - a) * (1.0 + a)  # 1 - a^2 without cancellation near a = 1
    return (
        -(1.0 - a) * (1.0 - r) / (1.0 + r * a),  # |f(r)| - 1
        c * r / (1.0 + a * r) ** 2,
        c * a * r * r / (1.0 - a * r),
        (1.0 + a * r) * c * c * r * r / ((1.0 + a) * (1.0 - r) * (1.0 - a * a * r * r)),
        lam * c * c * r * r / ((1.0 - r * r) * (1.0 - a**4 * r * r)),
    )


def eval_l1(a, r, lam: float = LAMBDA_SHARP):
    """L1 at the Moebius extremal, z = r.  Accepts scalars or broadcastable arrays."""
    _check_ar(a, r)
    _check_lam(lam)
    a = np.asarray(a, dtype=float)
    r = np.asarray(r, dtype=float)
    c = (1.0 - a) * (1.0 + a)  # 1 - a^2 without cancellation near a = 1
    v = ((r + a) / (1.0 + r * a) + c * r / (1.0 + a * r) ** 2 + c * a * r * r / (1.0 - a * r)
         + (1.0 + a * r) * c * c * r * r / ((1.0 + a) * (1.0 - r) * (1.0 - a * a * r * r))
         + lam * c * c * r * r / ((1.0 - r * r) * (1.0 - a**4 * r * r)))
    return float(v) if v.ndim == 0 else v


def l1_excess(a, r, lam: float = LAMBDA_SHARP):
    """L1 - 1 summed without the cancellation of |f(r)| against 1."""
    _check_ar(a, r)
    _check_lam(lam)
    terms = _l1_terms(np.asarray(a, dtype=float), np.asarray(r, dtype=float), lam)
    v = terms[0] + terms[1] + terms[2] + terms[3] + terms[4]
    return float(v) if np.ndim(v) == 0 else v


def eval_l1_assembled(a: float, r: float, lam: float = LAMBDA_SHARP) -> float:
    """L1 built term by term from the Moebius series kernels (cross-check)."""
    f = MoebiusExtremal(a)
    return (f.value(r) + f.derivative(r) * r + moebius_series(a, r, "B2")
            + moebius_series(a, r, "Aterm") + lam * moebius_series(a, r, "SrRatio"))


def eval_a1_majorant(a, r, lam: float = LAMBDA_SHARP):
    """A1(r) = (r+a)/(1+ra) + (1-a^2) r/(1+ar)^2 + (1-a^2) r^2/(1-r) + lam (1-a^2)^2 r^2/((1-r^2)(1-a^4 r^2))."""
    _check_ar(a, r)
    _check_lam(lam)
    a = np.asarray(a, dtype=float)
    r = np.asarray(r, dtype=float)
    c = (1.0 - a) * (1.0 + a)  # 1 - a^2 without cancellation near a = 1
    v = ((r + a) / (1.0 + r * a) + c * r / (1.0 + a * r) ** 2 + c * r * r / (1.0 - r)
         + lam * c * c * r * r / ((1.0 - r * r) * (1.0 - a**4 * r * r)))
    return float(v) if v.ndim == 0 else v


def a1_excess(a, r, lam: float = LAMBDA_SHARP):
    """A1 - 1 without cancellation."""
    _check_ar(a, r)
    _check_lam(lam)
    a = np.asarray(a, dtype=float)
    r = np.asarray(r, dtype=float)
    c = (1.0 - a) * (1.0 + a)  # 1 - a^2 without cancellation near a = 1
    v = (-(1.0 - a) * (1.0 - r) / (1.0 + r * a) + c * r / (1.0 + a * r) ** 2 + c * r * r / (1.0 - r)
         + lam * c * c * r * r / ((1.0 - r * r) * (1.0 - a**4 * r * r)))
    return float(v) if v.ndim == 0 else v


def poly_f(which: int, a):
    """The degree-5 polynomials F1, F2 with the printed coefficients."""
    if which not in (1, 2):
        raise DomainError(f"which must be 1 or 2, got {which!r}")
    coeffs = F1_COEFFS if which == 1 else F2_COEFFS
    a = np.asarray(a, dtype=float)
    v = np.zeros_like(a)
    for c in reversed(coeffs):
        v = v * a + c
    return float(v) if v.ndim == 0 else v


def sign_profile(which: int, points: int = 1001) -> Dict[str, float]:
    """min / max of F_which on [0, 1]; a constant sign shows up as min and max agreeing."""
    a = np.linspace(0.0, 1.0, points)
    v = poly_f(which, a)
    return {"min": float(v.min()), "max": float(v.max()),
            "argmin": float(a[int(np.argmin(v))]), "argmax": float(a[int(np.argmax(v))])}


def default_a_grid(grid_a: int) -> np.ndarray:
    """a = k/(grid_a + 1), k = 1..grid_a; 99 points gives 0.01, ..., 0.99."""
    return np.arange(1, grid_a + 1) / (grid_a + 1.0)


def verify_thm22(grid_a: int = 99, grid_r: int = 100, tol: float = 1e-10,
                 lam: float = LAMBDA_SHARP) -> VerificationReport:
    """Sweep a in (0, 1) and r in [0, R]; pass iff both A1 and L1 stay <= 1 + tol."""
    if grid_a < 2 or grid_r < 2:
        raise DomainError("grids need at least 2 points")
    a = default_a_grid(grid_a)
    r = np.linspace(0.0, R_SHARP, grid_r)
    A, Rr = np.meshgrid(a, r, indexing="ij")  # a-major: argmax ties go to smallest a, then r
    witnesses = []
    worst = -math.inf
    for name, fn in (("A1", a1_excess), ("L1", l1_excess)):
        vals = fn(A, Rr, lam)
        k = int(np.argmax(vals))
        i, j = np.unravel_index(k, vals.shape)
        m = float(vals[i, j])
        witnesses.append({"quantity": name, "a": float(a[i]), "r": float(r[j]), "value": 1.0 + m, "margin": m})
        worst = max(worst, m)
    grid = {"a": f"k/{grid_a + 1}, k=1..{grid_a}", "r": f"linspace(0, {R_SHARP!r}, {grid_r})", "lambda": lam}
    return VerificationReport("thm22", grid, worst, witnesses, worst <= tol, tol)


def sharpness_a_grid(a_grid: int) -> np.ndarray:
    """Uniform a in (0, 1) plus points 1 - 10^-t, t in [1, 8], clustering at a = 1."""
    uniform = default_a_grid(a_grid)
    near_one = 1.0 - np.logspace(-1.0, -8.0, a_grid)
    return np.unique(np.concatenate([uniform, near_one]))


def sharpness_probe_thm22(epsilon: float = 0.01, a_grid: int = 99,
                          r: Optional[float] = None) -> VerificationReport:
    """Look for a with L1 > 1 at r = R when lam is raised by ``epsilon``.

    Near a = 1 the excess behaves like C (1-a)^2 epsilon, so the grid clusters
    there.  An excess only counts as a witness when it beats the rounding noise
    of its summands; ``passed`` means a witness exists.
    """
    if not epsilon >= 0.0:
        raise DomainError("epsilon must be >= 0")
    r = R_SHARP if r is None else float(r)
    lam = LAMBDA_SHARP + epsilon
    a = sharpness_a_grid(a_grid)
    terms = _l1_terms(a, r, lam)
    excess = terms[0] + terms[1] + terms[2] + terms[3] + terms[4]
    noise = 16.0 * EPS * sum(np.abs(t) for t in terms)
    k = int(np.argmax(excess))
    hits = excess > noise
    witnesses = [{"a": float(a[k]), "r": r, "value": 1.0 + float(excess[k]), "margin": float(excess[k])}]
    if hits.any():
        idx = np.flatnonzero(hits)
        witnesses.append({"a_min": float(a[idx[0]]), "a_max": float(a[idx[-1]]), "count": int(idx.size)})
    grid = {"a": f"{a.size} points, uniform plus 1-10^-t clustering", "r": r, "lambda": lam}
    return VerificationReport("thm22-sharpness", grid, float(excess[k]), witnesses, bool(hits.any()), 0.0)


HarmonicClass = Union[HarmonicPH0Extremal, HarmonicWH0Extremal]


def verify_harmonic_bohr(model: HarmonicClass, family: PhiFamily, r: float,
                         tol: float = 1e-12) -> VerificationReport:
    """Compare A_f(r) of the extremal model with the distance bound L(1).

    Below the radius the inequality must hold (A_f <= L(1) + tol); above it the
    extremal must violate it strictly.
    """
    if not 0.0 < r < 1.0:
        raise DomainError(f"r must lie in (0, 1), got {r!r}")
    if isinstance(model, HarmonicPH0Extremal):
        eq = build_ph0_equation(family, model.M)
        params = {"class": "ph0", "M": model.M}
    elif isinstance(model, HarmonicWH0Extremal):
        eq = build_wh0_equation(family, model.alpha)
        params = {"class": "wh0", "alpha": model.alpha}
    else:
        raise DomainError("verify_harmonic_bohr needs a harmonic extremal model")
    root = solve_radius(eq, check_uniqueness=False).root
    value = harmonic_bohr_sum(model, family, r)
    bound = dist_lower_bound(model)
    margin = value - bound
    below = r <= root
    passed = margin <= tol if below else margin > 0.0
    grid = dict(params, family=family.label, r=r, radius=root, regime="inside" if below else "outside")
    witnesses = [{"r": r, "A_f": value, "L1": bound, "margin": margin}]
    return VerificationReport("harmonic-bohr", grid, margin, witnesses, passed, tol)
