import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bohrradius.errors import DomainError
from bohrradius.families import (
    PhiFamily,
    check_in_g,
    custom,
    eval_dphi,
    eval_phi,
    parse_family,
    poly_weight,
    power,
    shift_weight,
)


def test_eval_phi_examples():
    assert eval_phi(power(), 3, 0.5) == 0.125
    assert eval_phi(poly_weight(2), 3, 0.5) == 1.125
    assert eval_phi(shift_weight(1), 2, 0.1) == pytest.approx(0.03, abs=1e-17)


def test_eval_dphi_examples():
    assert eval_dphi(power(), 2, 0.5) == 1.0
    assert eval_dphi(poly_weight(1), 3, 0.0) == 0.0
    assert eval_dphi(shift_weight(2), 2, 0.3) == pytest.approx(5.4, abs=1e-14)


def test_phi0_override():
    fam = poly_weight(2)
    assert eval_phi(fam, 0, 0.3) == 1.0
    assert eval_dphi(fam, 0, 0.3) == 0.0
    no_override = poly_weight(2, phi0_override=False)
    assert eval_phi(no_override, 0, 0.3) == 0.0  # 0^2 r^0


def test_power_is_one_at_one():
    assert all(eval_phi(power(), n, 1.0) == 1.0 for n in range(50))
    assert power().unit_at_one
    assert not poly_weight(2).unit_at_one


@pytest.mark.parametrize("fam", [power(), poly_weight(1.5), shift_weight(3)])
def test_vanish_at_zero(fam):
    assert all(eval_phi(fam, n, 0.0) == 0.0 for n in range(1, 30))


def test_domain_errors():
    with pytest.raises(DomainError):
        eval_phi(power(), 1, 1.5)
    with pytest.raises(DomainError):
        eval_phi(power(), 1, -0.1)
    with pytest.raises(DomainError):
        eval_dphi(power(), 1, 1.0)
    with pytest.raises(DomainError):
        PhiFamily("poly", -1.0)
    with pytest.raises(DomainError):
        PhiFamily("bogus")


def test_parse_family():
    assert parse_family("power") == power()
    assert parse_family("poly:2") == poly_weight(2)
    assert parse_family("shift:3").label == "shift:3"
    for bad in ("poly", "poly:x", "cubic:2", "power:2"):
        with pytest.raises(DomainError):
            parse_family(bad)


def test_power_partial_sums_geometric_tail():
    r = 0.5
    for N in (5, 20, 40):
        s = sum(eval_phi(power(), n, r) for n in range(N + 1))
        assert abs(2.0 - s) <= r ** (N + 1) / (1 - r) + 1e-15


FD_FAMILIES = [power(), poly_weight(1), poly_weight(2.5), shift_weight(1), shift_weight(3)]


def _central(fam, n, r, h):
    return (eval_phi(fam, n, r + h) - eval_phi(fam, n, r - h)) / (2 * h)


@given(st.integers(min_value=1, max_value=10), st.floats(min_value=0.01, max_value=0.95),
       st.sampled_from(FD_FAMILIES))
@settings(max_examples=200, deadline=None)
def test_dphi_matches_central_difference(n, r, fam):
    fd = _central(fam, n, r, 1e-5)
    assert abs(fd - eval_dphi(fam, n, r)) <= 1e-8 * max(1.0, abs(fd))


@given(st.integers(min_value=1, max_value=40), st.floats(min_value=0.05, max_value=0.9),
       st.sampled_from(FD_FAMILIES))
@settings(max_examples=100, deadline=None)
def test_dphi_central_difference_error_is_second_order(n, r, fam):
    # for large n the h^2 phi''' / 6 term of the difference quotient exceeds 1e-8,
    # so check the order instead: halving h cuts the error by about 4
    exact = eval_dphi(fam, n, r)
    e1 = abs(_central(fam, n, r, 1e-3) - exact)
    e2 = abs(_central(fam, n, r, 5e-4) - exact)
    assert e2 <= 0.3 * e1 + 1e-12 * max(1.0, abs(exact))


@given(st.integers(min_value=0, max_value=30), st.floats(min_value=0.0, max_value=1.0),
       st.floats(min_value=0.0, max_value=1.0))
@settings(max_examples=200, deadline=None)
def test_phi_nonnegative_and_monotone(n, r1, r2):
    lo, hi = min(r1, r2), max(r1, r2)
    for fam in (power(), poly_weight(3), shift_weight(2)):
        a, b = eval_phi(fam, n, lo), eval_phi(fam, n, hi)
        assert a >= 0.0
        assert a <= b + 1e-15


def test_check_in_g():
    assert check_in_g(power(), 0.99).member
    assert check_in_g(poly_weight(3), 0.9).member
    rep = check_in_g(custom(lambda n, r: 1.0, description="ones"), 0.9)
    assert not rep
    assert rep.violated == "convergent"


def test_check_in_g_catches_decreasing_and_negative():
    dec = custom(lambda n, r: (1 - r) * r**n, ratio=lambda n, r: r)
    assert check_in_g(dec).violated == "increasing"
    neg = custom(lambda n, r: -(r**n), ratio=lambda n, r: r)
    assert check_in_g(neg).violated == "nonnegative"


def test_check_in_g_arguments():
    with pytest.raises(DomainError):
        check_in_g(power(), 1.0)
    with pytest.raises(DomainError):
        check_in_g(power(), 0.5, grid=1)


def test_terms_vectorized_agree_with_scalar():
    fam = shift_weight(2)
    n = np.arange(0, 12)
    vec = fam.terms(n, 0.4)
    assert np.allclose(vec[1:], [eval_phi(fam, int(k), 0.4) for k in n[1:]], rtol=0, atol=1e-16)
