"""Initial ideals, squarefreeness, x-condition, colon/sum, Hilbert series."""

from __future__ import annotations

import random

from cycle_rees.monomial_ideals import (
    HilbertSeries,
    MonomialIdeal,
    colon_mono,
    hilbert_by_inclusion_exclusion,
    hilbert_numerator,
    initial_ideal,
    is_squarefree,
    pivot_least_frequent,
    pivot_most_frequent,
    sum_mono,
    x_condition,
)
from cycle_rees.orders import OrderSpec, product_order
from cycle_rees.rings import RingSpec, cycle_ring, mono_divides, parse_polynomial


def monos(ring, *texts):
    return [parse_polynomial(ring, t).monomials()[0] for t in texts]


def mono_ideal(ring, *texts) -> MonomialIdeal:
    return MonomialIdeal.from_exponents(ring, monos(ring, *texts))


def test_initial_ideal_n4(rees_cache):
    J = rees_cache(4, 2)
    K = initial_ideal(J, product_order(J.ring))
    expected = mono_ideal(J.ring, "x3*y1", "x0*y2", "x1*y3", "x0*y1", "y1*y3")
    assert set(K.gens) == set(expected.gens)
    assert is_squarefree(K)
    assert x_condition(K)


def test_initial_ideal_n5(rees_cache):
    J = rees_cache(5, 3)
    K = initial_ideal(J, product_order(J.ring))
    expected = mono_ideal(J.ring, "x4*y1", "x0*y2", "x1*y3", "x2*y4", "x0*y1", "x2*y1*y3")
    assert set(K.gens) == set(expected.gens)


def test_initial_ideal_zero():
    from cycle_rees.groebner import Ideal

    ring = cycle_ring(4)
    K = initial_ideal(Ideal(ring, []), product_order(ring))
    assert K.is_zero()


def test_squarefree_negative():
    ring = cycle_ring(4)
    assert not is_squarefree(mono_ideal(ring, "y1^2"))


def test_x_condition_cases(rees_cache):
    ring = cycle_ring(4)
    assert not x_condition(mono_ideal(ring, "x1^2*y1"))
    J = rees_cache(8, 6)
    assert x_condition(initial_ideal(J, product_order(J.ring)))


def test_colon_and_sum():
    ring = cycle_ring(4)
    M = mono_ideal(ring, "x1*y1")
    (y1,) = monos(ring, "y1")
    assert colon_mono(M, y1) == mono_ideal(ring, "x1")
    one = ring.one_exps()
    assert sum_mono(M, one).contains_one()


def test_colon_k5(rees_cache):
    J = rees_cache(5, 3)
    K5 = initial_ideal(J, product_order(J.ring))
    (p,) = monos(J.ring, "y1*y3")
    assert colon_mono(K5, p) == mono_ideal(J.ring, "x4", "x0", "x1", "x2")


def test_colon_sum_laws():
    rng = random.Random(5)
    ring = RingSpec((("X", ("a", "b", "c", "d")),))
    for _ in range(100):
        gens = [tuple(rng.randint(0, 2) for _ in range(4)) for _ in range(rng.randint(1, 4))]
        gens = [g for g in gens if any(g)]
        if not gens:
            continue
        M = MonomialIdeal.from_exponents(ring, gens)
        p = tuple(rng.randint(0, 2) for _ in range(4))
        colon = colon_mono(M, p)
        for q in colon.gens:
            assert M.contains(tuple(a + b for a, b in zip(q, p)))
        S = sum_mono(M, p)
        for g in M.gens:
            assert S.contains(g)
        for ideal in (M, colon, S):
            for g in ideal.gens:
                assert not any(mono_divides(o, g) for o in ideal.gens if o != g)


def test_hilbert_base_cases():
    ring3 = RingSpec((("X", ("a", "b", "c")),))
    assert hilbert_numerator(MonomialIdeal.from_exponents(ring3, [])) == HilbertSeries((1,), 3)
    ring2 = RingSpec((("X", ("a", "b")),))
    M = MonomialIdeal.from_exponents(ring2, [(1, 1)])
    assert hilbert_numerator(M) == HilbertSeries((1, 1), 1)


def test_hilbert_k4(rees_cache):
    J = rees_cache(4, 2)
    K4 = initial_ideal(J, product_order(J.ring))
    assert hilbert_numerator(K4) == HilbertSeries((1, 3, 1), 5)


def test_hilbert_pivot_independence(rees_cache):
    J = rees_cache(6, 4)
    K = initial_ideal(J, product_order(J.ring))
    assert hilbert_numerator(K, pivot_most_frequent) == hilbert_numerator(K, pivot_least_frequent)


def test_hilbert_inclusion_exclusion_oracle():
    rng = random.Random(3)
    ring = RingSpec((("X", ("a", "b", "c", "d")),))
    for _ in range(200):
        gens = [tuple(rng.randint(0, 3) for _ in range(4)) for _ in range(rng.randint(1, 5))]
        gens = [g for g in gens if any(g)]
        if not gens:
            continue
        M = MonomialIdeal.from_exponents(ring, gens)
        assert hilbert_numerator(M) == hilbert_by_inclusion_exclusion(M)


def test_series_equal_across_orders(rees_cache):
    """The Hilbert series of T/J is order independent: two different initial
    ideals of the same Rees ideal have identical series."""
    J = rees_cache(6, 3)
    first = hilbert_numerator(initial_ideal(J, product_order(J.ring)))
    other_order = OrderSpec(((("X",), "grevlex"), (("Y",), "grevlex")))
    second = hilbert_numerator(initial_ideal(J, other_order))
    assert first == second


def test_series_canonical_form_strips_common_factors():
    s = HilbertSeries((1, 0, -1), 2).canonical()  # (1-z^2)/(1-z)^2 = (1+z)/(1-z)
    assert s == HilbertSeries((1, 1), 1)
    assert HilbertSeries((0,), 4).canonical() == HilbertSeries((), 0)


def test_json_shape():
    s = HilbertSeries((1, 3, 1), 5)
    assert s.to_json() == {"numerator": [1, 3, 1], "denom_power": 5}
