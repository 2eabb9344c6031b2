"""Exact rational 6x6 basis-change matrices and large-radius charge vectors."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import sympy
from sympy.polys.matrices import DomainMatrix

from .errors import ModelError

CHARGE_FIELDS = ("n6", "n41", "n42", "n0", "n21", "n22")


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, sympy.Rational):
        return Fraction(int(x.p), int(x.q))
    return Fraction(x)


def _domain(rows) -> DomainMatrix:
    return DomainMatrix([[sympy.QQ(x.numerator, x.denominator) for x in r] for r in rows],
                        (len(rows), len(rows[0])), sympy.QQ)


def matmul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a)))


def matvec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


@dataclass(frozen=True)
class MonodromyMatrix:
    """Gepner-point to large-radius period map; entries are exact rationals."""

    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(as_fraction(x) for x in row) for row in self.entries)
        if len(rows) != 6 or any(len(r) != 6 for r in rows):
            raise ModelError("monodromy matrix must be 6x6", field="monodromy")
        object.__setattr__(self, "entries", rows)
        if _domain(rows).det() == 0:
            raise ModelError("monodromy matrix is singular", field="monodromy")

    @classmethod
    def from_flat(cls, values: Sequence) -> "MonodromyMatrix":
        if len(values) != 36:
            raise ModelError(f"expected 36 monodromy entries, got {len(values)}", field="monodromy")
        vals = [as_fraction(v) for v in values]
        return cls(tuple(tuple(vals[6 * i:6 * i + 6]) for i in range(6)))

    def flat(self) -> tuple[Fraction, ...]:
        return tuple(x for row in self.entries for x in row)

    @cached_property
    def inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        inv = _domain(self.entries).inv().to_list()
        return tuple(tuple(Fraction(int(x.numerator), int(x.denominator)) for x in row) for row in inv)

    def apply(self, v):
        return matvec(self.entries, [as_fraction(x) for x in v])

    def apply_inverse(self, v):
        return matvec(self.inverse, [as_fraction(x) for x in v])


@dataclass(frozen=True)
class ChargeVector:
    """Large-radius charges, ordered as in Z = n6 F0 + n41 F1 + n42 F2 + n0 + n21 t1 + n22 t2."""

    n6: Fraction = Fraction(0)
    n41: Fraction = Fraction(0)
    n42: Fraction = Fraction(0)
    n0: Fraction = Fraction(0)
    n21: Fraction = Fraction(0)
    n22: Fraction = Fraction(0)

    def __post_init__(self):
        for name in CHARGE_FIELDS:
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    @classmethod
    def of(cls, values: Sequence) -> "ChargeVector":
        if len(values) != 6:
            raise ValueError(f"a charge vector has 6 components, got {len(values)}")
        return cls(*values)

    def as_tuple(self) -> tuple[Fraction, ...]:
        return tuple(getattr(self, n) for n in CHARGE_FIELDS)

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.as_tuple())

    @property
    def non_integral_fields(self) -> tuple[str, ...]:
        return tuple(n for n in CHARGE_FIELDS if getattr(self, n).denominator != 1)

    def int_tuple(self) -> tuple[int, ...]:
        if not self.is_integral:
            raise ValueError(f"non-integer components {self.non_integral_fields}")
        return tuple(int(x) for x in self.as_tuple())

    def __neg__(self):
        return ChargeVector(*(-x for x in self.as_tuple()))

    def __add__(self, other):
        return ChargeVector(*(a + b for a, b in zip(self.as_tuple(), other.as_tuple())))
