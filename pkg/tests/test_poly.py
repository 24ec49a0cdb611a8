from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from petcalc import (
    DivisionByZero,
    NotDivisible,
    Polynomial,
    PolyT,
    divide_exact,
    is_graham_positive,
    specialize_to_t,
)


def a(i, rank=2):
    return Polynomial.variable(rank, i)


def test_product_with_non_simple_root():
    # a1 * (a1 + a2), the restriction value from the rank-2 worked example
    a3 = a(1) + a(2)
    assert a(1) * a3 == Polynomial(2, {(2, 0): 1, (1, 1): 1})


def test_multiplicative_identity():
    p = a(1) * a(1) + 3 * a(2)
    assert p * Polynomial.one(2) == p


def test_difference_of_squares():
    assert (a(1) + a(2)) * (a(1) - a(2)) == a(1) ** 2 - a(2) ** 2


def test_rank_mismatch_rejected():
    with pytest.raises(ValueError):
        Polynomial.variable(2, 1) * Polynomial.variable(3, 1)
    with pytest.raises(ValueError):
        Polynomial.variable(2, 1) + Polynomial.variable(3, 1)


def test_zero_terms_dropped():
    p = Polynomial(2, {(1, 0): 1, (0, 1): 0})
    assert list(p.terms) == [(1, 0)]
    assert (a(1) - a(1)).is_zero()


def test_specialize_simple_cases():
    assert specialize_to_t(a(1)) == PolyT((0, 1))
    assert specialize_to_t(a(1) + a(2)) == PolyT((0, 2))
    assert specialize_to_t(a(1) * (a(1) + a(2))) == PolyT((0, 0, 2))
    assert specialize_to_t(Polynomial.zero(2)).is_zero()


def test_graham_positive():
    assert is_graham_positive(a(1) + a(2))
    assert not is_graham_positive(a(1) - a(2))
    assert is_graham_positive(Polynomial.zero(2))
    assert is_graham_positive(PolyT((0, 2)))
    assert not is_graham_positive(PolyT((0, -2)))


def test_divide_exact_factor():
    num = a(1) ** 2 + a(1) * a(2)
    assert divide_exact(num, a(1)) == a(1) + a(2)


def test_divide_exact_polyt():
    assert divide_exact(PolyT((0, 0, 2)), PolyT((0, 1))) == PolyT((0, 2))
    with pytest.raises(NotDivisible):
        divide_exact(PolyT((0, 1)), PolyT((0, 0, 2)))


def test_divide_not_divisible_carries_remainder():
    with pytest.raises(NotDivisible) as info:
        divide_exact(a(1) ** 2, a(2))
    assert not info.value.remainder.is_zero()


def test_divide_by_zero():
    with pytest.raises(DivisionByZero):
        divide_exact(a(1), Polynomial.zero(2))
    with pytest.raises(DivisionByZero):
        divide_exact(PolyT((1,)), PolyT())


def test_divide_produces_fractions():
    q = divide_exact(a(1), a(1) * 2)
    assert q == Polynomial.constant(2, Fraction(1, 2))
    assert q.text() == "1/2"


def test_mixed_kind_division_rejected():
    with pytest.raises(TypeError):
        divide_exact(a(1), PolyT((0, 1)))


def test_text_rendering():
    assert Polynomial.zero(2).text() == "0"
    assert (a(1) * a(2) + a(1) ** 2).text() == "a1*a2 + a1^2"
    assert (a(1) - 2 * a(2)).text() == "-2*a2 + a1"
    assert Polynomial.constant(2, Fraction(1, 2)).text() == "1/2"
    assert PolyT().text() == "0"
    assert PolyT((0, 2)).text() == "2*t^1"
    assert PolyT((3,)).text() == "3"
    assert PolyT((0, 0, 1)).text() == "t^2"
    assert PolyT((1, -1)).text() == "1 - t^1"


def test_json_round_trip():
    p = a(1) * a(2) * 3 - a(2) ** 2 * Fraction(1, 3)
    data = p.to_json()
    assert data == sorted(data)
    assert Polynomial.from_json(2, data) == p
    q = PolyT((0, Fraction(2, 5), 1))
    assert PolyT.from_json(q.to_json()) == q


def test_polyt_trim_and_degree():
    assert PolyT((1, 0, 0)).coeffs == (1,)
    assert PolyT().degree() == -1
    assert PolyT((0, 1)).degree() == 1
    assert PolyT((0, 1)).is_monomial()
    assert not PolyT((1, 1)).is_monomial()


# -- property tests -------------------------------------------------------

coefficients = st.one_of(
    st.integers(-9, 9),
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
)


@st.composite
def polynomials(draw, rank):
    n_terms = draw(st.integers(0, 4))
    terms = {}
    for _ in range(n_terms):
        exps = tuple(
            draw(st.integers(0, 2)) for _ in range(rank)
        )
        terms[exps] = draw(coefficients)
    return Polynomial(rank, terms)


@st.composite
def poly_triples(draw):
    rank = draw(st.integers(1, 4))
    return (
        draw(polynomials(rank)),
        draw(polynomials(rank)),
        draw(polynomials(rank)),
    )


@settings(max_examples=150, deadline=None)
@given(poly_triples())
def test_ring_laws(triple):
    p, q, r = triple
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=150, deadline=None)
@given(poly_triples())
def test_specialize_is_ring_map(triple):
    p, q, _ = triple
    assert specialize_to_t(p * q) == specialize_to_t(p) * specialize_to_t(q)
    assert specialize_to_t(p + q) == specialize_to_t(p) + specialize_to_t(q)


@settings(max_examples=150, deadline=None)
@given(poly_triples())
def test_division_inverts_multiplication(triple):
    p, q, _ = triple
    if q.is_zero():
        return
    assert divide_exact(p * q, q) == p


@settings(max_examples=100, deadline=None)
@given(poly_triples())
def test_product_of_homogeneous_is_homogeneous(triple):
    p, q, _ = triple
    dp, dq = p.degree(), q.degree()
    top_p = Polynomial(p.rank, {e: c for e, c in p.terms.items() if sum(e) == dp})
    top_q = Polynomial(q.rank, {e: c for e, c in q.terms.items() if sum(e) == dq})
    product = top_p * top_q
    if top_p.is_zero() or top_q.is_zero():
        assert product.is_zero()
    else:
        assert product.is_homogeneous(dp + dq)
