"""Deterministic JSON / CSV / plain-table serialization of results.

Rationals become ``"p/q"`` strings (integers stay integers). Ring elements
become sparse ``{exponent: coefficient}`` maps with a basis tag: the
g-basis when only even r-slots are occupied, the r-basis otherwise.
"""
from __future__ import annotations

import csv
import dataclasses
import enum
import io
import json
from fractions import Fraction

from .cyclic_ring import RelationLattice, RingElement
from .gepner import GepnerModel
from .geometry import CurveClass, DivisorClass
from .monodromy import CHARGE_FIELDS, ChargeVector

FORMATS = ("json", "csv", "table")


def ring_to_dict(el: RingElement, basis: str = "auto") -> dict:
    if basis == "auto":
        basis = "g" if el.is_even() else "r"
    if basis == "g":
        terms = {str(i // 2): c for i, c in el.terms().items()}
        if not el.is_even():
            raise ValueError("element has odd r-slots; use the r-basis")
        return {"basis": "g", "modulus": el.order // 2, "terms": terms}
    return {"basis": "r", "modulus": el.order, "terms": {str(i): c for i, c in el.terms().items()}}


def to_jsonable(obj):
    """Recursively convert results to JSON-compatible values."""
    from .models import model_to_dict

    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, float):
        return obj
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, RingElement):
        return ring_to_dict(obj)
    if isinstance(obj, ChargeVector):
        return {n: to_jsonable(getattr(obj, n)) for n in CHARGE_FIELDS}
    if isinstance(obj, (DivisorClass, CurveClass)):
        d = {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
        d["class"] = str(obj)
        return d
    if isinstance(obj, GepnerModel):
        return model_to_dict(obj)
    if isinstance(obj, RelationLattice):
        return {"generators": [list(g) for g in obj.generators], "pivots": list(obj.pivots)}
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _flatten(d: dict) -> dict:
    flat = {}
    for k, v in d.items():
        if isinstance(v, dict) and all(not isinstance(x, (dict, list)) for x in v.values()):
            for ik, iv in v.items():
                flat[ik if ik not in d and ik not in flat else f"{k}.{ik}"] = iv
        elif isinstance(v, (dict, list)):
            flat[k] = json.dumps(v, separators=(",", ":"))
        else:
            flat[k] = v
    return flat


def _rows(data) -> list[dict]:
    if isinstance(data, list):
        rows = [x if isinstance(x, dict) else {"value": x} for x in data]
    elif isinstance(data, dict):
        rows = [data]
    else:
        rows = [{"value": data}]
    return [_flatten(r) for r in rows]


def _header(rows):
    header = []
    for r in rows:
        for k in r:
            if k not in header:
                header.append(k)
    return header


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


def emit(result, fmt: str = "json") -> str:
    data = to_jsonable(result)
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")
    rows = _rows(data)
    header = _header(rows)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([_cell(r.get(k)) for k in header])
        return buf.getvalue()
    cells = [header] + [[_cell(r.get(k)) for k in header] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
