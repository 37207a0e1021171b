"""Exact-arithmetic layer: Stirling numbers by two routes, capped series."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spgauge.exact import (
    TruncPoly,
    binomial,
    exp_minus_one_pow,
    factorial,
    gcd_list,
    stirling2,
    stirling2_oracle,
    trunc_mul,
)

# hand-checked Stirling values
STIRLING_TABLE = {
    (1, 1): 1,
    (3, 2): 3,
    (4, 2): 7,
    (5, 3): 25,
    (6, 3): 90,
    (7, 4): 350,
    (9, 5): 6951,
    (10, 10): 1,
    (10, 1): 1,
}


def test_stirling_frozen_values():
    for (d, j), want in STIRLING_TABLE.items():
        assert stirling2(d, j) == want
        assert stirling2_oracle(d, j) == want


def test_stirling_out_of_range():
    assert stirling2(3, 5) == 0
    assert stirling2(0, 0) == 1
    with pytest.raises(ValueError):
        stirling2(-1, 2)
    with pytest.raises(ValueError):
        stirling2_oracle(0, 1)


@given(st.integers(min_value=1, max_value=60), st.integers(min_value=1, max_value=60))
def test_stirling_routes_agree(d, j):
    assert stirling2(d, j) == (stirling2_oracle(d, j) if j <= d else 0)


@given(st.integers(min_value=2, max_value=40), st.integers(min_value=1, max_value=40))
def test_stirling_recurrence_residual(d, j):
    assert stirling2(d, j) == j * stirling2(d - 1, j) + stirling2(d - 1, j - 1)


def test_binomial_edges():
    assert binomial(5, 2) == 10
    assert binomial(3, 7) == 0
    assert factorial(0) == 1


# --- capped polynomials ---------------------------------------------------


def test_truncpoly_construction():
    p = TruncPoly.from_coeffs(3, [1, 2])
    assert p.coeffs == (Fraction(1), Fraction(2), Fraction(0), Fraction(0))
    assert p.coeff(1) == 2
    with pytest.raises(ValueError):
        TruncPoly.from_coeffs(1, [1, 2, 3])
    with pytest.raises(ValueError):
        p.coeff(4)


def test_trunc_mul_discards_high_degrees():
    # (1 + t)^2 capped at 1 loses the t^2 term
    p = TruncPoly.from_coeffs(1, [1, 1])
    assert trunc_mul(p, p).coeffs == (Fraction(1), Fraction(2))


def test_trunc_mul_cap_mismatch():
    with pytest.raises(ValueError):
        trunc_mul(TruncPoly.one(2), TruncPoly.one(3))


@st.composite
def capped_polys(draw, cap):
    coeffs = draw(st.lists(st.integers(min_value=-9, max_value=9), min_size=cap + 1, max_size=cap + 1))
    return TruncPoly(cap, tuple(Fraction(c) for c in coeffs))


@given(st.integers(min_value=0, max_value=8).flatmap(lambda c: st.tuples(capped_polys(c), capped_polys(c))))
def test_trunc_mul_commutative(pair):
    p, q = pair
    assert trunc_mul(p, q) == trunc_mul(q, p)


@given(st.integers(min_value=0, max_value=6).flatmap(lambda c: st.tuples(capped_polys(c), capped_polys(c), capped_polys(c))))
def test_trunc_mul_associative(triple):
    p, q, r = triple
    assert trunc_mul(trunc_mul(p, q), r) == trunc_mul(p, trunc_mul(q, r))


def test_exp_minus_one_pow_base_series():
    p = exp_minus_one_pow(1, 5)
    assert [p.coeff(d) for d in range(6)] == [0, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24), Fraction(1, 120)]


def test_exp_minus_one_pow_known_coefficients():
    # t^3 of (e^t - 1)^2 is 2*S(3,2)/3! = 1; of (e^t - 1)^3 is 3!*S(3,3)/3! = 1
    assert exp_minus_one_pow(2, 3).coeff(3) == 1
    assert exp_minus_one_pow(3, 3).coeff(3) == 1
    assert exp_minus_one_pow(3, 3).coeff(2) == 0
    with pytest.raises(ValueError):
        exp_minus_one_pow(0, 3)


@given(st.integers(min_value=1, max_value=6), st.integers(min_value=0, max_value=14))
def test_exp_minus_one_pow_matches_stirling(j, cap):
    p = exp_minus_one_pow(j, cap)
    for d in range(cap + 1):
        assert p.coeff(d) == Fraction(factorial(j) * stirling2(d, j), factorial(d))


@given(st.fractions(), st.fractions())
def test_fraction_arithmetic_is_exact(a, b):
    # the engine leans on this: no drift when adding and subtracting back
    assert (a + b) - b == a


def test_gcd_list():
    assert gcd_list([40, 120]) == 40
    assert gcd_list([-6, 4]) == 2
    assert gcd_list([0, 0]) == 0
    with pytest.raises(ValueError):
        gcd_list([])
