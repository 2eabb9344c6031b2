"""Gepner models, B-type boundary states and their intersection data.

All ring data live in the order-2K shift algebra of `cyclic_ring`.  For a
factor with weight w, the factor shift g_j = g**w is ``r**(2*w)`` and its
square root g_j**(1/2) is ``r**w``.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .cyclic_ring import RelationLattice, RingElement, product, project_even
from .errors import LabelError, MissingRelations, ParityError
from .monodromy import MonodromyMatrix


@dataclass(frozen=True)
class MinimalModelFactor:
    level: int
    weight: int

    @property
    def height(self) -> int:
        return self.level + 2

    @property
    def central_charge(self) -> Fraction:
        return Fraction(3 * self.level, self.level + 2)


@dataclass(frozen=True)
class BoundaryState:
    """Cardy labels |L1..L5, M, S> of a B-type boundary state."""

    L: tuple[int, ...]
    M: int = 0
    S: int = 0

    def __post_init__(self):
        object.__setattr__(self, "L", tuple(int(x) for x in self.L))
        if self.S not in (0, 2):
            raise LabelError(f"S must be 0 or 2, got {self.S}")

    def __str__(self):
        return f"|{','.join(map(str, self.L))}; M={self.M}, S={self.S}>"


@dataclass(frozen=True)
class GepnerModel:
    """Registry entry for one two-parameter model.

    ``intersection_coeffs`` is (c111, c112, b1, b2); ``fiber_lattice`` is the
    K3-fiber pairing (H.H, H.L, L.L) of divisors restricted to the fiber.
    """

    name: str
    levels: tuple[int, ...]
    monodromy: MonodromyMatrix
    intersection_coeffs: tuple[int, int, int, int]
    fiber_lattice: tuple[int, int, int]
    relations: RelationLattice | None = None
    description: str = field(default="", compare=False)

    def __post_init__(self):
        levels = tuple(int(k) for k in self.levels)
        if len(levels) != 5:
            raise LabelError(f"a two-parameter model needs 5 minimal-model levels, got {len(levels)}")
        if any(k < 0 for k in levels):
            raise LabelError(f"levels must be nonnegative: {levels}")
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "intersection_coeffs", tuple(int(x) for x in self.intersection_coeffs))
        object.__setattr__(self, "fiber_lattice", tuple(int(x) for x in self.fiber_lattice))
        if self.relations is not None and self.relations.dim != self.K:
            raise LabelError(f"relations have dimension {self.relations.dim}, model has K={self.K}")

    @property
    def heights(self) -> tuple[int, ...]:
        return tuple(k + 2 for k in self.levels)

    @property
    def K(self) -> int:
        return math.lcm(*self.heights)

    @property
    def order(self) -> int:
        """Size of the M label range and of the r-basis (2K)."""
        return 2 * self.K

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(self.K // h for h in self.heights)

    @property
    def factors(self) -> tuple[MinimalModelFactor, ...]:
        return tuple(MinimalModelFactor(k, w) for k, w in zip(self.levels, self.weights))

    @property
    def central_charge(self) -> Fraction:
        return sum((f.central_charge for f in self.factors), Fraction(0))

    def require_relations(self) -> RelationLattice:
        if self.relations is None:
            raise MissingRelations(f"model {self.name!r} has no period relations")
        return self.relations

    def state(self, L: Sequence[int], M: int = 0, S: int = 0) -> BoundaryState:
        """Validated boundary state; M is reduced mod 2K."""
        s = BoundaryState(tuple(L), M % self.order, S)
        self.check_state(s)
        return s

    def check_state(self, s: BoundaryState) -> None:
        if len(s.L) != len(self.levels):
            raise LabelError(f"state has {len(s.L)} L labels, model has {len(self.levels)} factors")
        for j, (L, k) in enumerate(zip(s.L, self.levels)):
            if not 0 <= L <= k:
                raise LabelError(f"L_{j + 1}={L} outside 0..{k}")

    def ground_state(self, M: int = 0) -> BoundaryState:
        return self.state((0,) * len(self.levels), M)

    def parity_ok(self, s: BoundaryState) -> bool:
        return (s.M + sum(w * L for w, L in zip(self.weights, s.L))) % 2 == 0

    def admissible_M(self, L: Sequence[int]) -> list[int]:
        parity = sum(w * x for w, x in zip(self.weights, L)) % 2
        return [M for M in range(self.order) if (M + parity) % 2 == 0]

    def states(self, max_total: int | None = None):
        """All L label vectors (M=0, S=0), optionally with sum(L) <= max_total."""
        for L in itertools.product(*(range(k + 1) for k in self.levels)):
            if max_total is None or sum(L) <= max_total:
                yield BoundaryState(L)

    def _factor(self, j: int) -> MinimalModelFactor:
        if not 0 <= j < len(self.levels):
            raise LabelError(f"factor index {j} out of range")
        return self.factors[j]

    @cached_property
    def direct_normalization(self) -> Fraction:
        """The constant C, calibrated once on the ground-state self-pairing."""
        s = self.ground_state()
        raw = _direct_raw(self, s, s)
        ref = intersection_element(self, s, s)
        ratios = {Fraction(a, b) for a, b in zip(raw, ref.coeffs) if b}
        if len(ratios) != 1 or any(a and not b for a, b in zip(raw, ref.coeffs)):
            raise ArithmeticError("ground-state pairings are not proportional; cannot calibrate")
        return ratios.pop()


def _check_label(k: int, *labels: int):
    for L in labels:
        if not 0 <= L <= k:
            raise LabelError(f"label {L} outside 0..{k}")


def t_element(model: GepnerModel, j: int, L: int) -> RingElement:
    """Excitation operator t_L = sum_{l=-L/2}^{L/2} g_j^l for factor j."""
    f = model._factor(j)
    _check_label(f.level, L)
    return RingElement.from_terms(model.order, [(f.weight * (2 * i - L), 1) for i in range(L + 1)])


def n00_element(model: GepnerModel, j: int) -> RingElement:
    """Ground-state factor 1 - g_j^{-1}."""
    w = model._factor(j).weight
    return RingElement.from_terms(model.order, [(0, 1), (-2 * w, -1)])


def fusion_element(model: GepnerModel, j: int, L: int, Lt: int) -> RingElement:
    """Band sum n_{L,Lt} = sum_i g_j^{d/2+i} - g_j^{-1-d/2-i}, d = |L-Lt|, i = 0..min(L,Lt)."""
    f = model._factor(j)
    _check_label(f.level, L, Lt)
    w, d = f.weight, abs(L - Lt)
    terms = []
    for i in range(min(L, Lt) + 1):
        terms.append((w * (d + 2 * i), 1))
        terms.append((-w * (2 + d + 2 * i), -1))
    return RingElement.from_terms(model.order, terms)


def ground_intersection(model: GepnerModel) -> RingElement:
    return product((n00_element(model, j) for j in range(len(model.levels))), model.order)


def su2_fusion(k: int, l1: int, l2: int, l3: int) -> int:
    """Level-k SU(2) fusion multiplicity N_{l1 l2}^{l3} (Dynkin labels)."""
    _check_label(k, l1, l2, l3)
    if (l1 + l2 + l3) % 2:
        return 0
    return int(abs(l1 - l2) <= l3 <= min(l1 + l2, 2 * k - l1 - l2))


def _sign(s1: BoundaryState, s2: BoundaryState) -> int:
    return -1 if ((s2.S - s1.S) // 2) % 2 else 1


def intersection_element(model: GepnerModel, s1: BoundaryState, s2: BoundaryState) -> RingElement:
    """Intersection generating element via shift matrices (unreduced)."""
    model.check_state(s1)
    model.check_state(s2)
    fusions = (fusion_element(model, j, a, b) for j, (a, b) in enumerate(zip(s1.L, s2.L)))
    el = product(fusions, model.order).shift(s2.M - s1.M)
    return el * _sign(s1, s2)


def _extended_fusion(k: int, L1: int, L2: int) -> list[tuple[int, int]]:
    """Nonzero values of the antisymmetrically extended fusion N^{m'-1}, m' in Z_{2k+4}.

    N^{l} for 0 <= l <= k, -N^{-l-2} on the reflected range, 0 at l = -1, k+1.
    """
    period = 2 * k + 4
    out: dict[int, int] = {}
    for l in range(k + 1):
        n = su2_fusion(k, L1, L2, l)
        if n:
            out[(l + 1) % period] = out.get((l + 1) % period, 0) + n
            out[(-l - 1) % period] = out.get((-l - 1) % period, 0) - n
    return [(m, v) for m, v in sorted(out.items()) if v]


def _direct_raw(model: GepnerModel, s1: BoundaryState, s2: BoundaryState) -> list[int]:
    n = model.order
    acc = [0] * n
    per_factor = [_extended_fusion(k, a, b) for k, a, b in zip(model.levels, s1.L, s2.L)]
    weights = model.weights
    base = s2.M - s1.M
    for combo in itertools.product(*per_factor):
        # delta constraint: slot = (M2 - M1) + sum_j w_j (m'_j + 1)  (mod 2K)
        slot = base
        coeff = 1
        for w, (m, v) in zip(weights, combo):
            slot += w * (m + 1)
            coeff *= v
        acc[slot % n] += coeff
    sign = _sign(s1, s2)
    return [sign * c for c in acc]


def intersection_direct(model: GepnerModel, s1: BoundaryState, s2: BoundaryState) -> RingElement:
    """Intersection generating element from the constrained channel sum.

    Enumerates tuples (m'_j) of extended SU(2) fusion channels; each tuple
    contributes the product of its fusion coefficients at the r-slot fixed
    by the delta constraint. The result is divided by the calibrated C.
    """
    model.check_state(s1)
    model.check_state(s2)
    raw = _direct_raw(model, s1, s2)
    C = model.direct_normalization
    coeffs = []
    for c in raw:
        q = Fraction(c) / C
        if q.denominator != 1:
            raise ArithmeticError(f"normalization {C} does not divide coefficient {c}")
        coeffs.append(int(q))
    return RingElement(model.order, tuple(coeffs))


def charge_from_qb(model: GepnerModel, qb: RingElement, L: Sequence[int]) -> tuple[int, ...]:
    """q_G = q_B t_{L1}...t_{L5} (1 - g), projected to the g-basis and reduced."""
    rel = model.require_relations()
    ts = [t_element(model, j, x) for j, x in enumerate(L)]
    one_minus_g = RingElement.from_terms(model.order, [(0, 1), (2, -1)])
    el = product([qb, *ts, one_minus_g], model.order)
    return rel.reduce(project_even(el))


def boundary_charge_gepner(model: GepnerModel, s: BoundaryState) -> tuple[int, ...]:
    """Gepner-basis charge of a boundary state, in the independent-period basis."""
    model.check_state(s)
    if not model.parity_ok(s):
        raise ParityError(f"{s} violates the selection rule M + sum(w_j L_j) even")
    return charge_from_qb(model, RingElement.monomial(model.order, s.M), s.L)


def self_spectrum_element(model: GepnerModel, s: BoundaryState,
                          factors: Sequence[int] | None = None) -> RingElement:
    """intersection_element(s, s), optionally restricted to a subset of factors."""
    model.check_state(s)
    idx = range(len(model.levels)) if factors is None else factors
    return product((fusion_element(model, j, s.L[j], s.L[j]) for j in idx), model.order)


class MarginalInterpretation(str, enum.Enum):
    """Readings of the absolute-value count of marginal operators.

    REDUCED_ABS: half the absolute coefficient sum of the self-spectrum
    element after projection to the g-basis and period reduction.
    PROJECTED_ABS: same, but without the period reduction.
    LAURENT_ABS: half the product over factors of the absolute coefficient
    sums of n_{L,L} as Laurent polynomials, i.e. before any periodicity.
    """

    REDUCED_ABS = "reduced-abs"
    PROJECTED_ABS = "projected-abs"
    LAURENT_ABS = "laurent-abs"


def vacuum_count(model: GepnerModel, s: BoundaryState, factors: Sequence[int] | None = None) -> int:
    """Identity-channel occurrences in the product of self-fusions L_j x L_j."""
    idx = range(len(model.levels)) if factors is None else factors
    return math.prod(su2_fusion(model.levels[j], s.L[j], s.L[j], 0) for j in idx)


def marginal_count(model: GepnerModel, s: BoundaryState,
                   interpretation: MarginalInterpretation | str = MarginalInterpretation.REDUCED_ABS,
                   factors: Sequence[int] | None = None) -> tuple[Fraction, int]:
    """(marginal, vac) for a state under the chosen interpretation."""
    interpretation = MarginalInterpretation(interpretation)
    vac = vacuum_count(model, s, factors)
    if interpretation is MarginalInterpretation.LAURENT_ABS:
        idx = range(len(model.levels)) if factors is None else factors
        total = math.prod(2 * (s.L[j] + 1) for j in idx)
    else:
        g_basis = project_even(self_spectrum_element(model, s, factors))
        if interpretation is MarginalInterpretation.REDUCED_ABS:
            g_basis = model.require_relations().reduce(g_basis)
        total = sum(abs(c) for c in g_basis)
    return Fraction(total, 2) - vac, vac
