"""Gepner-basis to large-radius charge map and charge tables."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .gepner import GepnerModel, boundary_charge_gepner
from .monodromy import ChargeVector, as_fraction, matvec

CONVENTIONS = ("column", "row")


def to_large_radius(model: GepnerModel, q_G: Sequence, convention: str = "column") -> ChargeVector:
    """q_L = m^{-1} q_G, exactly.

    ``convention="row"`` applies the inverse to a row vector instead
    (q_L = q_G m^{-1}), the ordering that appears in the continuation
    identity Z = (n^G m^{-1}).(m Pi^G). Non-integer components are kept
    and flagged by ``ChargeVector.is_integral``.
    """
    q = [as_fraction(x) for x in q_G]
    if len(q) != 6:
        raise ValueError(f"Gepner charge must have 6 components, got {len(q)}")
    inv = model.monodromy.inverse
    if convention == "column":
        return ChargeVector.of(matvec(inv, q))
    if convention == "row":
        return ChargeVector.of(tuple(sum(q[i] * inv[i][j] for i in range(6)) for j in range(6)))
    raise ValueError(f"unknown convention {convention!r}; choose from {CONVENTIONS}")


def to_gepner(model: GepnerModel, n: ChargeVector, convention: str = "column") -> tuple:
    """Inverse of `to_large_radius`."""
    m = model.monodromy.entries
    v = n.as_tuple()
    if convention == "column":
        return matvec(m, v)
    if convention == "row":
        return tuple(sum(v[i] * m[i][j] for i in range(6)) for j in range(6))
    raise ValueError(f"unknown convention {convention!r}")


@dataclass(frozen=True)
class ChargeRow:
    M: int
    charge: ChargeVector


def charge_table(model: GepnerModel, L: Sequence[int], convention: str = "column") -> list[ChargeRow]:
    """One row per admissible M, sorted by M."""
    rows = []
    for M in model.admissible_M(L):
        q_G = boundary_charge_gepner(model, model.state(L, M))
        rows.append(ChargeRow(M, to_large_radius(model, q_G, convention)))
    return rows
