"""Order axioms and the product order's documented comparisons."""

from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from cycle_rees.orders import OrderSpec, canonical_order, elimination_order, monomial_cmp, product_order
from cycle_rees.rings import RingError, cycle_ring, mono_mul, parse_polynomial

R5 = cycle_ring(5)
R4 = cycle_ring(4)
PO5 = product_order(R5)
PO4 = product_order(R4)


def mono(ring, text):
    (exps,) = parse_polynomial(ring, text).monomials()
    return exps


def test_single_y_variables_follow_priority():
    assert monomial_cmp(PO5, R5, mono(R5, "y1"), mono(R5, "y2")) == 1
    assert monomial_cmp(PO5, R5, mono(R5, "y4"), mono(R5, "y0")) == 1


def test_y_block_dominates_x_parts():
    a = mono(R5, "x3*y1")
    b = mono(R5, "x1*y2")
    assert monomial_cmp(PO5, R5, a, b) == 1


def test_reflexive_equal():
    m = mono(R5, "x1*y2^3")
    assert monomial_cmp(PO5, R5, m, m) == 0


def test_equal_y_degree_revlex_rule():
    assert monomial_cmp(PO4, R4, mono(R4, "y1*y3"), mono(R4, "y0*y2")) == 1


def test_x_lex_breaks_ties():
    assert monomial_cmp(PO4, R4, mono(R4, "x1*y1"), mono(R4, "x2*y1")) == 1
    assert monomial_cmp(PO4, R4, mono(R4, "x3*y1"), mono(R4, "x0*y1")) == 1


def test_elimination_order_puts_s_first():
    ring = cycle_ring(4, with_s=True)
    order = elimination_order(ring, ("S",))
    s = mono(ring, "s")
    big = mono(ring, "y1^5*x1^5")
    assert monomial_cmp(order, ring, s, big) == 1


def test_order_must_cover_ring():
    with pytest.raises(RingError):
        OrderSpec(((("Y",), "grevlex"),)).key_function(R5)
    with pytest.raises(RingError):
        OrderSpec(((("Y",), "weird"),))


def test_mismatched_length_rejected():
    with pytest.raises(RingError):
        monomial_cmp(PO5, R5, (0,) * 3, (0,) * R5.nvars)


exponents5 = st.tuples(*([st.integers(min_value=0, max_value=4)] * R5.nvars))


@given(exponents5, exponents5, exponents5)
def test_total_multiplicative_well_order(a, b, c):
    cmp_ab = monomial_cmp(PO5, R5, a, b)
    assert cmp_ab in (-1, 0, 1)
    assert (cmp_ab == 0) == (a == b)
    assert cmp_ab == -monomial_cmp(PO5, R5, b, a)
    # multiplicative: scaling both sides by c preserves the comparison
    assert cmp_ab == monomial_cmp(PO5, R5, mono_mul(a, c), mono_mul(b, c))
    # 1 is the minimum
    one = R5.one_exps()
    assert monomial_cmp(PO5, R5, a, one) >= 0


@given(exponents5, exponents5, exponents5)
def test_transitivity(a, b, c):
    if monomial_cmp(PO5, R5, a, b) >= 0 and monomial_cmp(PO5, R5, b, c) >= 0:
        assert monomial_cmp(PO5, R5, a, c) >= 0


@given(exponents5, exponents5)
def test_y_block_dominance(a, b):
    """If the Y parts differ, the X parts cannot influence the comparison."""
    y_idx = R5.block_indices("Y")
    ya = tuple(a[i] if i in y_idx else 0 for i in range(R5.nvars))
    yb = tuple(b[i] if i in y_idx else 0 for i in range(R5.nvars))
    cmp_y = monomial_cmp(PO5, R5, ya, yb)
    if cmp_y != 0:
        assert monomial_cmp(PO5, R5, a, b) == cmp_y


def test_canonical_order_matches_product_order_on_xy_ring():
    assert canonical_order(R5) == PO5


def test_leading_terms_of_family_members():
    from fractions import Fraction

    from cycle_rees.orders import leading_term
    from cycle_rees.rings import Polynomial

    R6 = cycle_ring(6)
    PO6 = product_order(R6)
    f1 = parse_polynomial(R6, "x5*y1 - x1*y2")
    assert leading_term(PO6, f1) == (mono(R6, "x5*y1"), Fraction(1))
    h1 = parse_polynomial(R6, "y1*y4 - y0*y3")
    assert leading_term(PO6, h1) == (mono(R6, "y1*y4"), Fraction(1))
    const = Polynomial.constant(R6, Fraction(5, 2))
    assert leading_term(PO6, const) == (R6.one_exps(), Fraction(5, 2))
    with pytest.raises(RingError):
        leading_term(PO6, Polynomial.zero(R6))
