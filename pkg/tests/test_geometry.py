import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from branecalc.errors import ConstraintError
from branecalc.geometry import (BPSClass, CurveClass, DivisorClass, E, H, IntersectionRing, L,
                                bps_classify, central_charge, charge_to_chern,
                                chern_to_charge, cy_fibration_check, d2_charge, d4_charge,
                                dirac_check, divisor_curve_pairing, h, is_slope_semistable, l,
                                moduli_dimension, mukai_pairing, mukai_vector, period_polynomials,
                                period_vector, prepotential, slope, triple_intersection)
from branecalc.models import P11222_8, P11226_12
from branecalc.monodromy import ChargeVector

R8 = IntersectionRing.from_model(P11222_8)
R12 = IntersectionRing.from_model(P11226_12)
t1, t2 = sympy.symbols("t1 t2")
F = Fraction


def test_triple_intersections_model_8():
    assert triple_intersection(H, H, H, R8) == 8
    assert triple_intersection(H, H, L, R8) == 4
    assert triple_intersection(H, L, L, R8) == 0
    assert triple_intersection(L, L, L, R8) == 0
    assert triple_intersection(H + L, H + L, H + L, R8) == 20


def test_triple_intersections_model_12():
    assert (triple_intersection(H, H, H, R12), triple_intersection(H, H, L, R12)) == (4, 2)


def test_divisor_curve_pairing():
    assert divisor_curve_pairing(H, h) == 2
    assert divisor_curve_pairing(H, l) == 0
    assert divisor_curve_pairing(L, l) == 2
    assert divisor_curve_pairing(L, h) == 0
    assert divisor_curve_pairing(H + L, h + l) == 4


divisors = st.builds(DivisorClass, st.integers(-5, 5), st.integers(-5, 5))


@given(divisors, divisors, divisors)
def test_triple_intersection_symmetric(a, b, c):
    v = triple_intersection(a, b, c, R8)
    for perm in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)]:
        assert triple_intersection(*perm, R8) == v


def test_exceptional_divisor_basis():
    assert E == H - L * 2
    assert DivisorClass.from_LE(2, 1) == H
    assert E.to_LE() == (0, 1)


def test_period_vector_matches_printed_column():
    printed = [F(4, 3) * t1**3 + 2 * t1**2 * t2 + F(7, 3) * t1 + t2,
               -4 * t1**2 - 4 * t1 * t2 + F(7, 3),
               -2 * t1**2 + 1, sympy.Integer(1), t1, t2]
    printed = [sympy.nsimplify(e) for e in printed]
    for got, want in zip(period_polynomials(R8), printed):
        assert got == sympy.Poly(want, t1, t2)


def test_period_vector_entries():
    assert period_vector(R8, 0, 0)[3] == 1
    assert period_vector(R8, F(1, 2), 3)[1] == -4 * F(1, 4) - 4 * F(3, 2) + F(7, 3)


def test_prepotential_values():
    assert prepotential(R8, 0, 0, const=5) == 5
    assert prepotential(R8, 1, 1) == 0


def test_prepotential_float_input():
    assert prepotential(R8, 0.5, 0.25) == pytest.approx(-4 / 3 * 0.125 - 2 * 0.25 * 0.25 + 7 / 3 * 0.5 + 0.25)


def test_central_charge_examples():
    assert central_charge(R8, ChargeVector.of([0, 0, 0, 1, 0, 0]), 3, 4) == 1
    assert central_charge(R8, ChargeVector.of([0, 0, 0, 0, 1, 0]), F(3, 7), 4) == F(3, 7)
    assert central_charge(R8, ChargeVector.of([0, 1, 0, -2, 0, 1]), 1, 1) == F(-20, 3)


def test_central_charge_random_points_against_formula():
    rng = random.Random(11)
    for _ in range(50):
        a, b = F(rng.randint(-20, 20), rng.randint(1, 9)), F(rng.randint(-20, 20), rng.randint(1, 9))
        n = [rng.randint(-5, 5) for _ in range(6)]
        Fv = -F(4, 3) * a**3 - 2 * a**2 * b + F(7, 3) * a + b
        F1 = -4 * a**2 - 4 * a * b + F(7, 3)
        F2 = -2 * a**2 + 1
        expected = n[0] * (2 * Fv - a * F1 - b * F2) + n[1] * F1 + n[2] * F2 + n[3] + n[4] * a + n[5] * b
        assert central_charge(R8, ChargeVector.of(n), a, b) == expected


vec6 = st.lists(st.integers(-9, 9), min_size=6, max_size=6)


@given(vec6, vec6)
def test_central_charge_linear(u, v):
    a, b = F(2, 3), F(-5, 2)
    lhs = central_charge(R8, ChargeVector.of([x + y for x, y in zip(u, v)]), a, b)
    assert lhs == central_charge(R8, ChargeVector.of(u), a, b) + central_charge(R8, ChargeVector.of(v), a, b)


def test_charge_dictionary_examples():
    m2 = charge_to_chern(ChargeVector.of([0, 1, 0, -1, 0, 0]))
    assert m2.c1 == E * F(1, 2) and m2.ch2.is_zero() and m2.ch3 == F(2, 3)
    m1 = charge_to_chern(ChargeVector.of([0, 1, 0, -2, 0, 1]))
    assert m1.c1 == E * F(1, 2) and m1.ch2 == l and m1.ch3 == F(5, 3)
    zero = charge_to_chern(ChargeVector.of([0] * 6))
    assert zero.r == 0 and zero.c1.is_zero() and zero.ch2.is_zero() and zero.ch3 == 0


@given(vec6)
def test_charge_dictionary_invertible(n):
    cv = ChargeVector.of(n)
    assert chern_to_charge(charge_to_chern(cv)) == cv


def test_d2_and_d4_charges():
    v = d2_charge(ChargeVector.of([0, 0, 0, -1, 0, 1]))
    assert (v.rank, v.c1, v.ch2, v.ch3) == (0, DivisorClass(), l, 1)
    w = d4_charge(ChargeVector.of([0, 0, 0, 3, 2, 0]))
    assert (w.rank, w.c1, w.ch2, w.ch3) == (0, DivisorClass(), CurveClass(2, 0), -3)
    with pytest.raises(ConstraintError):
        d4_charge(ChargeVector.of([1, 0, 0, 0, 0, 0]))
    with pytest.raises(ConstraintError):
        d2_charge(ChargeVector.of([1, 0, 0, 0, 0, 1]))


def test_mukai_vector_examples():
    v = mukai_vector(1, DivisorClass(), 0, R8)
    assert (v.rank, v.c1, v.s) == (1, DivisorClass(), 1)
    c1 = DivisorClass(F(1, 2), -1)
    w = mukai_vector(0, c1, 3, R8)
    assert w.s == R8.fiber_pairing(c1, c1) / 2 - 3
    u = mukai_vector(2, H, 4, R8)
    assert u.s == F(4, 2) - 2  # H.H = 4 on the quartic fiber


def test_rigid_vector_has_dimension_zero():
    # (1, 0, 1) pairs to -2
    v = mukai_vector(1, DivisorClass(), 0, R8)
    assert mukai_pairing(v, v, R8) == -2
    assert moduli_dimension(v, R8) == 0


mukai = st.builds(lambda r, a, b, c2: mukai_vector(r, DivisorClass(a, b), c2, R8),
                  st.integers(0, 4), st.integers(-4, 4), st.integers(-4, 4), st.integers(-6, 6))


@given(mukai, mukai)
def test_mukai_pairing_symmetric(v, w):
    assert mukai_pairing(v, w, R8) == mukai_pairing(w, v, R8)
    assert moduli_dimension(v, R8) == mukai_pairing(v, v, R8) + 2


def test_m1_fiber_moduli_dimension_positive():
    chern = charge_to_chern(ChargeVector.of([0, 1, 0, -2, 0, 1]))
    from branecalc.geometry import FiberMukaiVector
    v = FiberMukaiVector(chern.r, chern.c1, chern.ch3)
    assert moduli_dimension(v, R8) == 3


def test_slope_stability():
    omega = H + L
    assert is_slope_semistable((1, H), (1, H), omega, 3, R8)
    assert not is_slope_semistable((1, H * 2), (2, H), omega, 3, R8)
    assert is_slope_semistable((2, H), (1, H * 2), omega, 2, R8)
    assert slope(2, H, omega, 3, R8) == F(8 + 2 * 4, 2)  # (H+L)^2.H = H^3 + 2 H^2 L
    with pytest.raises(ConstraintError):
        slope(0, H, omega, 3, R8)


def test_bps_classification():
    assert bps_classify(1, E, l) is BPSClass.BPS
    assert bps_classify(0, DivisorClass(), CurveClass()) is BPSClass.OUTSIDE
    assert bps_classify(0, DivisorClass(), h) is BPSClass.BPS
    assert bps_classify(0, -H, h) is BPSClass.ANTI_BPS
    assert bps_classify(-2, H, h) is BPSClass.ANTI_BPS


def test_dirac_and_fibration_checks():
    assert dirac_check(1, 1)
    assert not dirac_check(1, F(1, 2))
    assert cy_fibration_check(-2, -2)
    assert not cy_fibration_check(-2, -1)
    for a in range(-5, 4):
        for b in range(-5, 4):
            assert cy_fibration_check(-2, a + b) == (a + b == -2)
