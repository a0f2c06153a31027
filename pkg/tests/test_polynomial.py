import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from intervalcycles.errors import DivisorZero, NotSquare
from intervalcycles.markov import build_digraph
from intervalcycles.perm import all_cycles, parse_cycle
from intervalcycles.polynomial import (
    IntPolynomial,
    charpoly,
    cyclotomic_like,
    divides_exactly,
    poly_mul,
)

from oracles import fraction_det, leibniz_charpoly

P = IntPolynomial
LAM_MINUS_1 = P([-1, 1])


@pytest.mark.parametrize(
    "m, coeffs",
    [
        ([[1]], [-1, 1]),
        ([[0, 1], [1, 1]], [-1, -1, 1]),
        ([[0, 0, 1], [0, 1, 1], [1, 0, 0]], [1, -1, -1, 1]),
        ([], [1]),
    ],
)
def test_charpoly_examples(m, coeffs):
    assert charpoly(m) == P(coeffs)


def test_charpoly_not_square():
    with pytest.raises(NotSquare):
        charpoly([[0, 1]])


def test_poly_mul_examples():
    assert poly_mul(LAM_MINUS_1, P([-1, 0, 1])) == P([1, -1, -1, 1])
    q = P([3, 0, -2, 5])
    assert poly_mul(q, P([1])) == q
    assert poly_mul(P([-1, -1, 1]), cyclotomic_like(3)) == P([1, 1, -1, -1, -1, 1])


def test_divides_exactly_examples():
    assert divides_exactly(P([-1, 0, 1]), P([1, -1, -1, 1])) == LAM_MINUS_1
    assert divides_exactly(LAM_MINUS_1, LAM_MINUS_1) == P([1])
    assert divides_exactly(P([1, 0, 1]), P([-1, -1, 1])) is None
    assert divides_exactly(P([0, 2]), P([0, 3])) is None  # quotient would not be integral
    with pytest.raises(DivisorZero):
        divides_exactly(P([0]), LAM_MINUS_1)


def test_cyclotomic_like():
    assert cyclotomic_like(1) == LAM_MINUS_1
    assert cyclotomic_like(2) == P([-1, 0, 1])
    assert cyclotomic_like(4) == P([-1, 0, 0, 0, 1])


def test_text_format():
    assert P([1, -1, -1, 1]).to_text() == "l^3 - l^2 - l + 1"
    assert P([1, 1, -1, -1, -1, 1]).to_text() == "l^5 - l^4 - l^3 - l^2 + l + 1"
    assert P([1]).to_text() == "1"
    assert P([0]).to_text() == "0"
    assert P([0, -3, 0, 2]).to_text("λ") == "2*λ^3 - 3*λ"


def test_json_round_trip_with_big_coefficients():
    p = P([10**40, -1, 0, 7])
    obj = p.to_json()
    assert obj == {"coeffs": [str(10**40), "-1", "0", "7"]}
    assert P.from_json(obj) == p


def test_canonical_form():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([]).coeffs == (0,)
    assert P([0, 0]).degree == -1


@pytest.mark.parametrize("n", range(1, 7))
def test_charpoly_matches_leibniz_on_cycle_matrices(n):
    for theta in all_cycles(n):
        m = build_digraph(theta).matrix()
        p = charpoly(m)
        assert list(p.coeffs) == leibniz_charpoly(m)
        assert p.is_monic() and p.degree == n - 1
        # value at 0 is det(-M) = (-1)^(n-1) det(M)
        assert p(0) == (-1) ** (n - 1) * fraction_det(m)


def test_charpoly_matches_leibniz_on_random_matrices():
    rng = random.Random(20241016)
    for _ in range(100):
        d = rng.randint(1, 6)
        m = [[rng.randint(0, 1) for _ in range(d)] for _ in range(d)]
        assert list(charpoly(m).coeffs) == leibniz_charpoly(m)


polys = st.lists(st.integers(min_value=-50, max_value=50), min_size=1, max_size=8).map(P)


@given(polys, polys)
def test_divide_undoes_multiply(a, b):
    if a.is_zero():
        return
    assert divides_exactly(a, poly_mul(a, b)) == b


@given(polys, polys, st.integers(min_value=-5, max_value=5))
def test_mul_evaluates_pointwise(a, b, x):
    assert poly_mul(a, b)(x) == a(x) * b(x)
    assert (a + b)(Fraction(x, 3)) == a(Fraction(x, 3)) + b(Fraction(x, 3))


def test_period_eight_polynomial_factorises():
    p = charpoly(build_digraph(parse_cycle("(15472638)")).matrix())
    assert p == cyclotomic_like(4) * cyclotomic_like(2) * cyclotomic_like(1)
    # expanded form of (l^4-1)(l^2-1)(l-1)
    assert p.to_text() == "l^7 - l^6 - l^5 + l^4 - l^3 + l^2 + l - 1"
