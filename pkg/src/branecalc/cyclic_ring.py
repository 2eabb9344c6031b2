"""Exact integer arithmetic in the cyclic shift algebra Z[r]/(r^{2K} - 1).

Elements are stored in the r-basis, where r is the half-shift and g = r**2.
Odd powers of g^{1/2} are therefore plain integer slots, and the g-basis is
recovered only when charges are extracted (`project_even`).

The period quotient is modelled by `RelationLattice`: an integer sublattice
of Z^K spanned by relation generators, each carrying a +-1 pivot entry.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce as _fold
from typing import Iterable, Sequence

import sympy

from .errors import OrderMismatch, ParityError


@dataclass(frozen=True)
class RingElement:
    """Integer coefficient vector over the cyclic group of the given order.

    ``coeffs[i]`` is the coefficient of ``r**i``.
    """

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.order <= 0 or self.order % 2:
            raise ValueError(f"order must be a positive even integer, got {self.order}")
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.order:
            raise ValueError(f"expected {self.order} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    # constructors

    @classmethod
    def zero(cls, order: int) -> "RingElement":
        return cls(order, (0,) * order)

    @classmethod
    def one(cls, order: int) -> "RingElement":
        return cls.monomial(order, 0)

    @classmethod
    def monomial(cls, order: int, exponent: int, coeff: int = 1) -> "RingElement":
        c = [0] * order
        c[exponent % order] = coeff
        return cls(order, tuple(c))

    @classmethod
    def from_terms(cls, order: int, terms: dict[int, int] | Iterable[tuple[int, int]]) -> "RingElement":
        """Build from ``{r_exponent: coeff}``; exponents are reduced mod order."""
        items = terms.items() if isinstance(terms, dict) else terms
        c = [0] * order
        for e, v in items:
            c[int(e) % order] += int(v)
        return cls(order, tuple(c))

    # arithmetic

    def _check(self, other: "RingElement"):
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.order != self.order:
            raise OrderMismatch(f"cannot combine orders {self.order} and {other.order}")
        return None

    def __add__(self, other):
        if (bad := self._check(other)) is not None:
            return bad
        return RingElement(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if (bad := self._check(other)) is not None:
            return bad
        return RingElement(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return RingElement(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.order, tuple(other * a for a in self.coeffs))
        return ring_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = RingElement.one(self.order)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k: int) -> "RingElement":
        """Multiply by r**k."""
        n = self.order
        c = [0] * n
        for i, a in enumerate(self.coeffs):
            c[(i + k) % n] = a
        return RingElement(n, tuple(c))

    def conjugate(self) -> "RingElement":
        """Apply r -> r^{-1} (equivalently g -> g^{-1})."""
        n = self.order
        return RingElement(n, tuple(self.coeffs[(-i) % n] for i in range(n)))

    # inspection

    def terms(self) -> dict[int, int]:
        """Sparse ``{r_exponent: coeff}`` map of the nonzero slots."""
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def coefficient_sum(self) -> int:
        """Value at r = 1 (hence at g = 1)."""
        return sum(self.coeffs)

    def is_even(self) -> bool:
        return not any(self.coeffs[1::2])

    def evaluate(self, r_value):
        """Evaluate the element at a concrete value of r (any numeric type)."""
        return sum(c * r_value**i for i, c in enumerate(self.coeffs) if c)

    def __str__(self):
        parts = [f"{c:+d}*r^{i}" for i, c in self.terms().items()]
        return " ".join(parts) if parts else "0"


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    """Cyclic convolution of two elements (r^{2K} = 1)."""
    if a.order != b.order:
        raise OrderMismatch(f"cannot multiply orders {a.order} and {b.order}")
    n = a.order
    out = [0] * n
    bt = [(j, y) for j, y in enumerate(b.coeffs) if y]
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j, y in bt:
            out[(i + j) % n] += x * y
    return RingElement(n, tuple(out))


def product(elements: Iterable[RingElement], order: int) -> RingElement:
    return _fold(ring_mul, elements, RingElement.one(order))


def project_even(a: RingElement) -> tuple[int, ...]:
    """Rewrite an element with only even r-slots in the g-basis.

    Raises ParityError if any odd slot is nonzero.
    """
    odd = [i for i in range(1, a.order, 2) if a.coeffs[i]]
    if odd:
        raise ParityError(f"odd r-slots {odd} are nonzero; no integer g-power representation")
    return a.coeffs[0::2]


@dataclass(frozen=True)
class RelationLattice:
    """Sublattice of Z^dim spanned by period-relation generators.

    Each generator has entry +-1 at its pivot and zeros at every higher
    pivot, so eliminating pivots from the top down is well defined.
    """

    dim: int
    generators: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        pivots = tuple(int(p) for p in self.pivots)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "pivots", pivots)
        if len(gens) != len(pivots):
            raise ValueError("one pivot per generator is required")
        if len(set(pivots)) != len(pivots):
            raise ValueError(f"pivots must be distinct: {pivots}")
        for g, p in zip(gens, pivots):
            if len(g) != self.dim:
                raise ValueError(f"generator {g} does not have length {self.dim}")
            if not 0 <= p < self.dim:
                raise ValueError(f"pivot {p} out of range")
            if g[p] not in (1, -1):
                raise ValueError(f"generator {g} has entry {g[p]} at pivot {p}; need +-1")
            # triangularity implies linear independence
            for q in pivots:
                if q > p and g[q]:
                    raise ValueError(
                        f"generator with pivot {p} is nonzero at higher pivot {q}; "
                        "generators are dependent or not in echelon form")

    @property
    def rank(self) -> int:
        """Rank of the quotient lattice."""
        return self.dim - len(self.generators)

    @property
    def kept(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.dim) if i not in self.pivots)

    def _ordered(self):
        return sorted(zip(self.pivots, self.generators), reverse=True)

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        return reduce(v, self)

    def lift(self, w: Sequence[int]) -> tuple[int, ...]:
        """Inverse of the coordinate drop: zeros re-inserted at the pivots."""
        if len(w) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(w)}")
        out = [0] * self.dim
        for i, x in zip(self.kept, w):
            out[i] = x
        return tuple(out)

    def polynomial(self):
        """The relation generator with the lowest pivot, as a sympy polynomial in g."""
        g = sympy.Symbol("g")
        _, gen = min(zip(self.pivots, self.generators))
        return sympy.Poly(sum(c * g**i for i, c in enumerate(gen)), g)


def reduce(v: Sequence[int], rel: RelationLattice) -> tuple[int, ...]:
    """Canonical quotient representative by pivot elimination.

    Pivot coordinates are zeroed from the highest pivot down, then dropped.
    """
    if len(v) != rel.dim:
        raise ValueError(f"vector of length {len(v)} does not match lattice dimension {rel.dim}")
    w = [int(x) for x in v]
    for p, gen in rel._ordered():
        c = w[p] * gen[p]  # gen[p] is +-1, so this is w[p] / gen[p]
        if c:
            for i, x in enumerate(gen):
                if x:
                    w[i] -= c * x
    return tuple(w[i] for i in rel.kept)


def cyclotomic_relations(K: int, weights: Sequence[int]) -> RelationLattice:
    """Relation lattice generated by the periods' vanishing polynomial.

    The relation polynomial is the product of the cyclotomic factors of
    g^K - 1 whose roots are not killed by any ``1 - g^w``; the generators
    are its multiples ``g^i * p(g)`` that still fit below degree K.
    """
    g = sympy.Symbol("g")
    p = sympy.Integer(1)
    for d in sympy.divisors(K):
        if all(w % d for w in weights):
            p *= sympy.cyclotomic_poly(d, g)
    poly = sympy.Poly(p, g)
    deg = poly.degree()
    base = [int(c) for c in reversed(poly.all_coeffs())]
    gens, pivots = [], []
    for i in range(K - deg):
        row = [0] * K
        for j, c in enumerate(base):
            row[i + j] = c
        gens.append(tuple(row))
        pivots.append(i + deg)
    return RelationLattice(K, tuple(gens), tuple(pivots))
