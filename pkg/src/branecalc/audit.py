"""Side-by-side comparison of computed values with published reference data.

Every comparison returns a `DiscrepancyReport`; ``match`` is only True for
an exact agreement under a documented convention, never by tolerance.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .charges import CONVENTIONS, charge_table
from .cyclic_ring import project_even
from .gepner import (GepnerModel, MarginalInterpretation, ground_intersection,
                     marginal_count)
from .geometry import (FiberMukaiVector, IntersectionRing, charge_to_chern, dirac_check,
                       moduli_dimension)
from .monodromy import ChargeVector

# Reference data as published; row labels m1..m8 carry no M assignment.
PUBLISHED_CHARGES_L1 = (
    (0, 1, 0, -2, 0, 1), (0, 1, 0, -1, 0, 0), (1, -1, -1, 1, 0, 0), (1, 0, 0, 1, -1, -1),
    (0, 1, 0, 1, 0, -2), (1, -1, -1, -2, 2, 1), (2, 1, 1, -1, -3, 0), (2, 1, -1, -2, -1, 1),
)
PUBLISHED_CHARGES_L2 = ((0, 2, -1, 0, 1, -2), (0, 1, -2, 0, 2, -1))

# "9 - 9g" in the six independent periods
PUBLISHED_GROUND_REDUCED = (9, -9, 0, 0, 0, 0)

# (labels, marginal, vacuum)
PUBLISHED_MARGINAL = (
    ((0, 0), 0, 1), ((1, 0), 0, 1), ((2, 0), 2, 1), ((3, 0), 3, 1), ((4, 0), 4, 1),
    ((5, 0), 6, 1), ((6, 0), 6, 2),
    ((0, 0, 0), 0, 1), ((1, 0, 0), 0, 1), ((2, 0, 0), 2, 1), ((3, 0, 0), 3, 1), ((4, 0, 0), 3, 2),
    ((3, 0, 0, 0, 0, 0), 3, 1), ((6, 0, 0, 0, 0, 0), 6, 2),
)

# (row label, charge vector, published (r, c1, ch2, ch3)); c1 "3" is kept verbatim
PUBLISHED_MUKAI = (
    ("|1,0,0,0,0> m1", (0, 1, 0, -2, 0, 1), (0, "E/2", "l", Fraction(8, 3))),
    ("|1,0,0,0,0> m2", (0, 1, 0, -1, 0, 0), (0, "E/2", "0", Fraction(8, 3))),
    ("|2,0,0,0,0> m1", (0, 2, -1, 0, 1, -2), (0, "3", "h - 2l", Fraction(-5, 3))),
)


@dataclass
class DiscrepancyReport:
    item: str
    description: str
    computed: object
    paper: object
    match: bool
    details: dict = field(default_factory=dict)


def _multiset_overlap(a, b) -> int:
    return sum((Counter(a) & Counter(b)).values())


def charge_table_report(model: GepnerModel, L=(1, 0, 0, 0, 0),
                        published=PUBLISHED_CHARGES_L1, full: bool = True) -> DiscrepancyReport:
    """Compare computed rows with the published ones as multisets.

    Every combination of matrix convention and global sign is tried; with
    ``full`` the multisets must be equal, otherwise the published rows must
    be a sub-multiset.
    """
    published = [tuple(p) for p in published]
    best, trials = None, []
    for conv in CONVENTIONS:
        rows = charge_table(model, L, conv)
        for sign in (1, -1):
            vecs = [tuple(sign * x for x in r.charge.as_tuple()) for r in rows]
            overlap = _multiset_overlap(vecs, published)
            ok = Counter(vecs) == Counter(published) if full else overlap == len(published)
            trials.append({"convention": conv, "sign": sign, "overlap": overlap, "match": ok})
            if best is None or (ok, overlap) > (best[0], best[1]):
                best = (ok, overlap, conv, sign, rows)
    ok, overlap, conv, sign, rows = best
    computed = [{"M": r.M, "charge": r.charge, "integral": r.charge.is_integral} for r in rows]
    return DiscrepancyReport(
        item=f"charge-table L={tuple(L)}",
        description="large-radius charge table vs published rows, multiset up to sign and M labelling",
        computed=computed,
        paper=[list(p) for p in published],
        match=ok,
        details={"best_convention": conv, "best_sign": sign, "rows_matched": overlap,
                 "rows_published": len(published), "trials": trials},
    )


def ground_reduction_oracle(model: GepnerModel) -> tuple[int, ...]:
    """prod_j (1 - g^{-w_j}) reduced mod (g^K - 1) and the relation polynomial, via sympy.

    Independent of the ring and lattice code: expands the Laurent product
    symbolically, clears negative powers with g^K, and takes the polynomial
    remainder by the lowest relation generator.
    """
    g = sympy.Symbol("g")
    K = model.K
    expr = sympy.expand(sympy.prod([1 - g ** (K - w) for w in model.weights]))
    folded = sympy.rem(sympy.Poly(expr, g), sympy.Poly(g**K - 1, g))
    rem = sympy.rem(folded, model.require_relations().polynomial())
    coeffs = [int(c) for c in reversed(rem.all_coeffs())]
    rank = model.require_relations().rank
    return tuple(coeffs + [0] * (rank - len(coeffs)))


def ground_intersection_report(model: GepnerModel) -> DiscrepancyReport:
    el = ground_intersection(model)
    computed = model.require_relations().reduce(project_even(el))
    oracle = ground_reduction_oracle(model)
    return DiscrepancyReport(
        item="ground-intersection",
        description="ground-state intersection prod_j(1 - g_j^{-1}) reduced to the six periods",
        computed=list(computed),
        paper=list(PUBLISHED_GROUND_REDUCED),
        match=tuple(computed) == PUBLISHED_GROUND_REDUCED,
        details={"oracle": list(oracle), "oracle_agrees": tuple(oracle) == tuple(computed),
                 "unreduced_g_basis": list(project_even(el)),
                 "value_at_g=1": el.coefficient_sum()},
    )


def _marginal_state(model: GepnerModel, labels):
    """Map a short label tuple onto factors: 2 labels -> weight-1 pair, 3 -> weight-2 triple."""
    n = len(labels)
    if n == 2:
        factors = [j for j, w in enumerate(model.weights) if w == 1][:2]
        full = list(labels) + [0] * 3
        return full, factors
    if n == 3:
        factors = [j for j, w in enumerate(model.weights) if w == 2][:3]
        return [0, 0] + list(labels), factors
    # six labels: the five factor labels followed by a trailing zero
    return list(labels[:5]), None


def marginal_table_report(model: GepnerModel,
                          interpretation=MarginalInterpretation.REDUCED_ABS) -> DiscrepancyReport:
    rows, all_ok = [], True
    for labels, marg, vac in PUBLISHED_MARGINAL:
        full, factors = _marginal_state(model, labels)
        row = {"labels": list(labels), "factors": factors if factors is not None else "all",
               "paper_marginal": marg, "paper_vac": vac}
        try:
            state = model.state(full)
        except ValueError as exc:
            row.update(computed_marginal=None, computed_vac=None, match=False, note=str(exc))
        else:
            m, v = marginal_count(model, state, interpretation, factors)
            row.update(computed_marginal=m, computed_vac=v, match=(m == marg and v == vac))
        all_ok &= row["match"]
        rows.append(row)
    return DiscrepancyReport(
        item="marginal-table",
        description=f"marginal-operator counts under interpretation {MarginalInterpretation(interpretation).value}",
        computed=rows,
        paper=[{"labels": list(a), "marginal": b, "vac": c} for a, b, c in PUBLISHED_MARGINAL],
        match=all_ok,
        details={"rows_matched": sum(r["match"] for r in rows), "rows": len(rows),
                 "label_mapping": "2 labels: weight-1 pair; 3 labels: weight-2 triple; "
                                  "6 labels: first five on all factors"},
    )


def mukai_report(model: GepnerModel) -> DiscrepancyReport:
    ring = IntersectionRing.from_model(model)
    rows, all_ok = [], True
    for label, n, (pr, pc1, pch2, pch3) in PUBLISHED_MUKAI:
        chern = charge_to_chern(ChargeVector.of(n))
        c1_L, c1_E = chern.c1_LE
        c1_str = _le_str(c1_L, c1_E)
        comp = {"r": chern.r == pr, "c1": c1_str == pc1, "ch2": str(chern.ch2) == pch2,
                "ch3": chern.ch3 == pch3}
        all_ok &= all(comp.values())
        fiber = FiberMukaiVector(chern.r, chern.c1, chern.ch3)
        rows.append({
            "state": label, "charge": list(n),
            "computed": {"r": chern.r, "c1": chern.c1, "c1_LE": c1_str, "ch2": chern.ch2,
                         "ch3": chern.ch3},
            "paper": {"r": pr, "c1": pc1, "ch2": pch2, "ch3": pch3},
            "component_match": comp,
            "fiber_moduli_dimension": moduli_dimension(fiber, ring),
            "dirac_n41_n22": dirac_check(n[1], n[5]),
        })
    return DiscrepancyReport(
        item="mukai-dictionary",
        description="charge dictionary outputs vs published Mukai vectors",
        computed=rows,
        paper=[{"state": a, "vector": list(map(str, c))} for a, _, c in PUBLISHED_MUKAI],
        match=all_ok,
        details={"normative": "printed charge dictionary"},
    )


def _le_str(cl: Fraction, ce: Fraction) -> str:
    parts = []
    for coeff, sym in ((cl, "L"), (ce, "E")):
        if not coeff:
            continue
        if coeff == 1:
            parts.append(sym)
        elif coeff == -1:
            parts.append(f"-{sym}")
        elif coeff.denominator != 1 and coeff.numerator == 1:
            parts.append(f"{sym}/{coeff.denominator}")
        else:
            parts.append(f"{coeff}{sym}")
    return " + ".join(parts).replace("+ -", "- ") or "0"


def full_audit(model: GepnerModel) -> list[DiscrepancyReport]:
    return [
        charge_table_report(model, (1, 0, 0, 0, 0), PUBLISHED_CHARGES_L1, full=True),
        charge_table_report(model, (2, 0, 0, 0, 0), PUBLISHED_CHARGES_L2, full=False),
        ground_intersection_report(model),
        marginal_table_report(model),
        mukai_report(model),
    ]
