import math
import time

import pytest
from hypothesis import given, settings, strategies as st

from bohrradius.classes import ADMISSIBLE_M, HarmonicPH0Extremal, dist_lower_bound, harmonic_bohr_sum
from bohrradius.errors import AdmissibilityError, ConvergenceError, DomainError, SignCheckError
from bohrradius.families import poly_weight, power, shift_weight
from bohrradius.published import LIMIT_ROOT_PRINTED, TABLE_M
from bohrradius.radius import (
    RadiusEquation,
    build_ph0_equation,
    build_wh0_equation,
    classical_equation,
    classical_radius,
    count_sign_changes,
    refined_r0,
    refined_r0_squared,
    solve_radius,
    table_generate,
)


def test_frozen_roots():
    # mpmath findroot at 30 digits
    assert solve_radius(build_ph0_equation(poly_weight(1), 0.431)).root == pytest.approx(
        0.44325111520146231671, abs=1e-12)
    assert solve_radius(build_ph0_equation(shift_weight(3), 0.431)).root == pytest.approx(
        0.18689719081722814602, abs=1e-12)
    assert solve_radius(build_ph0_equation(poly_weight(2), 1.21)).root == pytest.approx(
        0.051703269015139597118, abs=1e-12)
    assert solve_radius(build_wh0_equation(power(), 0.0)).root == pytest.approx(0.28519408763722219386, abs=1e-12)
    assert solve_radius(build_wh0_equation(power(), 1.0)).root == pytest.approx(0.48888791970419893262, abs=1e-12)


def test_root_satisfies_bohr_equality():
    model = HarmonicPH0Extremal(0.431)
    r = solve_radius(build_ph0_equation(poly_weight(1), 0.431)).root
    assert harmonic_bohr_sum(model, poly_weight(1), r) == pytest.approx(dist_lower_bound(model), abs=1e-12)


def test_admissibility():
    with pytest.raises(AdmissibilityError):
        build_ph0_equation(power(), 2.0)
    with pytest.raises(AdmissibilityError):
        build_ph0_equation(power(), ADMISSIBLE_M)
    with pytest.raises(DomainError):
        build_wh0_equation(power(), -1.0)


def test_limit_root_near_admissible_bound():
    res = solve_radius(build_ph0_equation(power(), 1.29433))
    assert 0.0 < res.root < 1e-4
    assert res.root == pytest.approx(LIMIT_ROOT_PRINTED, abs=1e-6)


@given(st.floats(min_value=0.05, max_value=1.29), st.sampled_from([1, 2, 3]))
@settings(max_examples=40, deadline=None)
def test_solver_invariants(M, k):
    res = solve_radius(build_ph0_equation(poly_weight(k), M))
    lo, hi = res.bracket
    assert lo <= res.root <= hi
    assert hi - lo <= 1e-13
    assert res.residual <= 1e-12
    assert res.monotone_certificate
    assert res.sign_changes == 1


@given(st.floats(min_value=0.05, max_value=1.2))
@settings(max_examples=25, deadline=None)
def test_radius_decreases_with_weight_and_M(M):
    roots = [solve_radius(build_ph0_equation(poly_weight(k), M)).root for k in (1, 2, 3)]
    assert roots[0] >= roots[1] >= roots[2]
    r_more = solve_radius(build_ph0_equation(poly_weight(1), M + 0.05)).root
    assert r_more < roots[0]


def test_solver_rejects_missing_sign_change():
    eq = RadiusEquation(lambda r: r + 1.0, 0.0)
    with pytest.raises(SignCheckError):
        solve_radius(eq)
    with pytest.raises(DomainError):
        solve_radius(RadiusEquation(lambda r: r, 0.5), tol=0.0)


def test_solver_max_iter():
    with pytest.raises(ConvergenceError):
        solve_radius(RadiusEquation(lambda r: r, 0.3), max_iter=5)


def test_count_sign_changes_sees_multiple_roots():
    eq = RadiusEquation(lambda r: math.sin(20.0 * r), 0.0, lo=0.1, hi=1.0)
    # zeros at k pi / 20 for k = 1..6
    assert count_sign_changes(eq) == 6


def test_classical_radii():
    assert classical_radius("rogosinski2", 1) == pytest.approx(math.sqrt(5.0) - 2.0, abs=1e-12)
    assert classical_radius("rogosinski1", 1) == pytest.approx(1.0 / 3.0, abs=1e-12)
    prev = 0.0
    for N in range(1, 8):
        r = classical_radius("rogosinski2", N)
        assert r > prev
        prev = r
    assert classical_radius("hypergeometric") == pytest.approx(0.79681213002002004616, abs=1e-10)


def test_classical_validation():
    with pytest.raises(DomainError):
        classical_equation("rogosinski2", 0)
    with pytest.raises(DomainError):
        classical_equation("nope")
    with pytest.raises(DomainError):
        classical_equation("hypergeometric", p=3.0)
    with pytest.raises(DomainError):
        classical_equation("hypergeometric", a=-0.5, b=0.5, c=1.0)


def test_refined_radii():
    assert refined_r0(0.0) == pytest.approx(2.0 / (3.0 + math.sqrt(5.0)), abs=1e-16)
    for a0 in (0.0, 0.25, 0.5, 0.9):
        assert refined_r0(a0) > math.sqrt(5.0) - 2.0
        r2 = refined_r0_squared(a0)
        assert 1.0 / 3.0 < r2 < 1.0 / (2.0 + a0)
        cubic = (1 - a0**3) * r2**3 - (1 + 2 * a0) * r2**2 - 2 * r2 + 1
        assert abs(cubic) <= 1e-12
    with pytest.raises(DomainError):
        refined_r0(1.0)


@pytest.mark.parametrize("table_id", [1, 2])
def test_table_shape_ordering_and_runtime(table_id):
    t0 = time.perf_counter()
    res = table_generate(table_id)
    assert time.perf_counter() - t0 < 10.0
    assert len(res.cells) == 27
    assert {c.M for c in res.cells} == set(TABLE_M)
    assert res.ordering_ok
    assert all(c.flag in ("ok", "mismatch") for c in res.cells)


def test_table_deterministic():
    a = [(c.M, c.weight, c.root, c.flag) for c in table_generate(1).cells]
    b = [(c.M, c.weight, c.root, c.flag) for c in table_generate(1).cells]
    assert a == b


def test_table_unknown_id():
    with pytest.raises(DomainError):
        table_generate(3)
