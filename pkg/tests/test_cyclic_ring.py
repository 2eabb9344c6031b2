import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from branecalc.cyclic_ring import (RelationLattice, RingElement, cyclotomic_relations, project_even,
                                   reduce, ring_mul)
from branecalc.errors import OrderMismatch, ParityError
from branecalc.models import P11222_8, P11226_12

from oracles import convolve_mod, poly_remainder_reduce

REL8 = P11222_8.require_relations()
REL12 = P11226_12.require_relations()


def test_monomial_product_adds_exponents():
    a = RingElement.monomial(16, 3)
    b = RingElement.monomial(16, 5)
    assert ring_mul(a, b) == RingElement.monomial(16, 8)


def test_difference_of_squares():
    a = RingElement.from_terms(16, {0: 1, 1: 1})
    b = RingElement.from_terms(16, {0: 1, 1: -1})
    assert a * b == RingElement.from_terms(16, {0: 1, 2: -1})


def test_negative_exponents_wrap():
    assert RingElement.monomial(16, -1) == RingElement.monomial(16, 15)


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        RingElement.one(16) * RingElement.one(24)


@pytest.mark.parametrize("n", [16, 24])
def test_ring_mul_matches_convolution_oracle(n):
    rng = random.Random(n)
    for _ in range(1000):
        a = [rng.randint(-20, 20) for _ in range(n)]
        b = [rng.randint(-20, 20) for _ in range(n)]
        got = ring_mul(RingElement(n, tuple(a)), RingElement(n, tuple(b)))
        assert list(got.coeffs) == convolve_mod(a, b, n)


def test_large_coefficients_stay_exact():
    a = RingElement.from_terms(16, {0: 10**30, 3: -(10**30)})
    assert (a * a).coeffs[6] == 10**60


def test_project_even_relabels_slots():
    el = RingElement.from_terms(16, {4: 3, 10: -1})
    assert project_even(el) == (0, 0, 3, 0, 0, -1, 0, 0)


def test_project_even_rejects_odd_support():
    with pytest.raises(ParityError):
        project_even(RingElement.monomial(16, 1))


def test_project_even_square_of_t1():
    t1 = RingElement.from_terms(16, {-1: 1, 1: 1})
    assert project_even(t1 * t1) == (2, 1, 0, 0, 0, 0, 0, 1)


def test_reduce_generator_is_zero():
    for gen in REL8.generators:
        assert reduce(gen, REL8) == (0,) * 6
    for gen in REL12.generators:
        assert reduce(gen, REL12) == (0,) * 6


def test_reduce_untouched_coordinate():
    assert reduce((1, 0, 0, 0, 0, 0, 0, 0), REL8) == (1, 0, 0, 0, 0, 0)


def test_reduce_pivot_coordinate():
    assert reduce((0, 0, 0, 0, 0, 0, 1, 0), REL8) == (-1, 0, -1, 0, -1, 0)


def test_reduce_rank_is_six():
    assert REL8.rank == 6
    assert REL12.rank == 6


def test_dependent_generators_rejected():
    with pytest.raises(ValueError):
        RelationLattice(4, ((1, 0, 0, 1), (0, 0, 0, 1)), (0, 3))


def test_cyclotomic_relations_reproduce_published_set():
    derived = cyclotomic_relations(8, (1, 1, 2, 2, 2))
    assert derived == REL8


vec8 = st.lists(st.integers(-50, 50), min_size=8, max_size=8)
vec12 = st.lists(st.integers(-50, 50), min_size=12, max_size=12)


@given(vec8, vec8, st.integers(-9, 9), st.integers(-9, 9))
def test_reduce_is_linear(u, v, a, b):
    lhs = reduce([a * x + b * y for x, y in zip(u, v)], REL8)
    ru, rv = reduce(u, REL8), reduce(v, REL8)
    assert lhs == tuple(a * x + b * y for x, y in zip(ru, rv))


@given(vec12, st.integers(0, 5), st.integers(-9, 9))
def test_adding_a_generator_does_not_change_reduction(v, which, c):
    gen = REL12.generators[which]
    assert reduce([x + c * y for x, y in zip(v, gen)], REL12) == reduce(v, REL12)


@settings(max_examples=60, deadline=None)
@given(vec8)
def test_reduce_matches_polynomial_remainder(v):
    poly = [int(c) for c in reversed(REL8.polynomial().all_coeffs())]
    assert reduce(v, REL8) == poly_remainder_reduce(v, poly, REL8.rank)


@settings(max_examples=40, deadline=None)
@given(vec12)
def test_reduce_matches_polynomial_remainder_12(v):
    poly = [int(c) for c in reversed(REL12.polynomial().all_coeffs())]
    assert reduce(v, REL12) == poly_remainder_reduce(v, poly, REL12.rank)


@settings(max_examples=40, deadline=None)
@given(vec8)
def test_period_pairing_invariant_under_reduce(v):
    # pairing with periods that obey the relations (roots of the relation
    # polynomial) is the same before and after reduction
    import sympy
    poly = REL8.polynomial()
    g = poly.gens[0]
    red = REL8.lift(reduce(v, REL8))
    for root in sympy.roots(poly, g):
        diff = sum((a - b) * root**i for i, (a, b) in enumerate(zip(v, red)))
        assert sympy.simplify(sympy.expand(diff)) == 0


@given(st.lists(st.integers(-5, 5), min_size=16, max_size=16))
def test_conjugate_is_involution(c):
    el = RingElement(16, tuple(c))
    assert el.conjugate().conjugate() == el
    assert el.conjugate().coefficient_sum() == el.coefficient_sum()
