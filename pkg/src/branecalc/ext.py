"""Ext-group dimension bookkeeping for split normal bundles and the brane quiver."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import ConstraintError, LabelError


def p1_line_cohomology(n: int) -> tuple[int, int]:
    """(h^0, h^1) of O(n) on P^1."""
    return max(n + 1, 0), max(-n - 1, 0)


@dataclass(frozen=True)
class NormalBundleSplit:
    """N = O(a) + O(b) for a rational curve in a Calabi-Yau threefold."""

    a: int
    b: int

    def __post_init__(self):
        if self.a + self.b != -2:
            raise ConstraintError(f"Calabi-Yau condition needs a + b = -2, got {self.a} + {self.b}")


def _split(split) -> NormalBundleSplit:
    return split if isinstance(split, NormalBundleSplit) else NormalBundleSplit(*split)


def normal_ext(split) -> tuple[int, int]:
    """(dim Ext^1, dim Ext^2) of O_C with itself: H^0(N) and H^1(N)."""
    s = _split(split)
    ha, hb = p1_line_cohomology(s.a), p1_line_cohomology(s.b)
    return ha[0] + hb[0], ha[1] + hb[1]


@dataclass(frozen=True)
class Superpotential:
    split: tuple[int, int]
    form: str
    deformations: int | None
    free_parameters: tuple[str, ...] = ()


_SUPERPOTENTIALS = {
    (-1, -1): ("phi psi^2", 0, ()),
    (0, -2): ("psi^(n+1)", 1, ("n",)),
    (1, -3): ("rho^3 psi^3 + phi F(rho, psi) + ...", 2, ()),
}


def superpotential_form(split) -> Superpotential:
    """World-volume superpotential for the classified splits; others are 'unclassified'."""
    s = _split(split)
    key = (max(s.a, s.b), min(s.a, s.b))
    if key in _SUPERPOTENTIALS:
        form, n, params = _SUPERPOTENTIALS[key]
        return Superpotential(key, form, n, params)
    return Superpotential(key, "unclassified", None)


@dataclass(frozen=True)
class CohomologyTable:
    """h[p][q] = dim H^p(S, E^v (x) F (x) wedge^q N)."""

    h: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.h)
        if not rows or len({len(r) for r in rows}) != 1 or not rows[0]:
            raise ValueError("cohomology table must be a nonempty rectangle")
        if any(x < 0 for row in rows for x in row):
            raise ValueError("cohomology dimensions must be nonnegative")
        object.__setattr__(self, "h", rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "CohomologyTable":
        """Build from per-q columns (h[0][q], h[1][q], ...)."""
        return cls(tuple(zip(*columns)))

    @property
    def dim(self) -> int:
        return len(self.h) - 1

    @property
    def rank(self) -> int:
        return len(self.h[0]) - 1

    def euler(self) -> int:
        return sum((-1) ** (p + q) * x for p, row in enumerate(self.h) for q, x in enumerate(row))

    @classmethod
    def parse(cls, text: str) -> "CohomologyTable":
        """One row per p, whitespace/comma separated q-entries; '#' comments."""
        rows = []
        for line in text.splitlines():
            line = line.split("#", 1)[0].replace(",", " ").strip()
            if line:
                rows.append(tuple(int(x) for x in line.split()))
        return cls(tuple(rows))


def ext_via_spectral(table: CohomologyTable) -> tuple[int, ...]:
    """Ext^n = sum_{p+q=n} h[p][q] for the split, flat case."""
    out = [0] * (table.dim + table.rank + 1)
    for p, row in enumerate(table.h):
        for q, x in enumerate(row):
            out[p + q] += x
    return tuple(out)


def k3_fiber_table() -> CohomologyTable:
    """Trivial bundle on a K3 fiber with trivial normal bundle."""
    return CohomologyTable.from_columns([(1, 0, 1), (1, 0, 1)])


def p1_table(split) -> CohomologyTable:
    """Structure sheaf of a rational curve with normal bundle O(a) + O(b)."""
    s = _split(split)
    wedge0 = p1_line_cohomology(0)
    a, b = p1_line_cohomology(s.a), p1_line_cohomology(s.b)
    wedge1 = (a[0] + b[0], a[1] + b[1])
    wedge2 = p1_line_cohomology(s.a + s.b)
    return CohomologyTable.from_columns([wedge0, wedge1, wedge2])


def yoneda_degree(p: int, q: int, max_degree: int | None = None) -> tuple[int, bool]:
    """Degree of Ext^p x Ext^q -> Ext^{p+q}, flagged invalid above max_degree."""
    if p < 0 or q < 0:
        raise ValueError("Ext degrees are nonnegative")
    n = p + q
    return n, max_degree is None or n <= max_degree


@dataclass(frozen=True)
class Arrow:
    name: str
    tail: int
    head: int


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[int, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        for a in self.arrows:
            if a.tail not in self.vertices or a.head not in self.vertices:
                raise LabelError(f"arrow {a.name} joins unknown vertices {a.tail} -> {a.head}")

    def out_arrows(self, v: int) -> list[Arrow]:
        return [a for a in self.arrows if a.tail == v]


def brane_quiver() -> Quiver:
    """D0-D2-D4-D6 chain: a_*, b_*, c_* raise dimension, a^*, b^*, c^* lower it.

    Arrows map to vertices (tail, head); composition is head-to-tail.
    """
    return Quiver(
        (0, 2, 4, 6),
        (Arrow("a_*", 0, 2), Arrow("b_*", 2, 4), Arrow("c_*", 4, 6),
         Arrow("a^*", 2, 0), Arrow("b^*", 4, 2), Arrow("c^*", 6, 4)),
    )


@dataclass(frozen=True)
class Path:
    tail: int
    head: int
    arrows: tuple[Arrow, ...]

    @property
    def name(self) -> str:
        if not self.arrows:
            return f"e_{self.tail}"
        return ".".join(a.name for a in self.arrows)

    def __len__(self):
        return len(self.arrows)


def quiver_paths(q: Quiver, start: int, end: int, max_len: int) -> list[Path]:
    """All composable arrow sequences from start to end of length <= max_len."""
    for v in (start, end):
        if v not in q.vertices:
            raise LabelError(f"unknown vertex {v}")
    found = []
    frontier = [Path(start, start, ())]
    for length in range(max_len + 1):
        found += [p for p in frontier if p.head == end]
        if length == max_len:
            break
        frontier = [Path(start, a.head, p.arrows + (a,)) for p in frontier for a in q.out_arrows(p.head)]
    return found


def quiver_ext_annotation(q: Quiver, assignments: Mapping[int, CohomologyTable],
                          include_trivial: bool = False) -> dict[str, tuple[int, ...]]:
    """Label every arrow with the Ext dimensions of its head-vertex table."""
    out = {}
    for a in q.arrows:
        for v in (a.tail, a.head):
            if v not in assignments:
                raise LabelError(f"vertex {v} of arrow {a.name} has no cohomology table")
        out[a.name] = ext_via_spectral(assignments[a.head])
    if include_trivial:
        for v in q.vertices:
            if v in assignments:
                out[f"e_{v}"] = ext_via_spectral(assignments[v])
    return out
