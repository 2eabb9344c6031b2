"""Built-in model registry and the flat key/value model-definition format.

A model file looks like::

    # comments start with '#'
    name = p11222-8
    levels = 6, 6, 2, 2, 2
    monodromy = -1, 1, 0, 0, 0, 0, 2, 2, 1/2, ...      # 36 entries, row-major
    relations = 1,0,1,0,1,0,1,0; 0,1,0,1,0,1,0,1       # optional, or 'cyclotomic'
    pivots = 6, 7
    intersection = 8, 4, 56, 24                        # c111, c112, b1, b2
    fiber_lattice = 4, 0, 0                            # H.H, H.L, L.L on the K3 fiber

Files whose first non-blank character is ``{`` are read as the JSON form
produced by ``emit(model, "json")``.
"""
from __future__ import annotations

import json
import math
import os
from fractions import Fraction
from pathlib import Path

from .cyclic_ring import RelationLattice, cyclotomic_relations
from .errors import BranecalcError, ModelError
from .gepner import GepnerModel
from .monodromy import MonodromyMatrix, as_fraction

_h = Fraction(1, 2)
_q = Fraction(1, 4)

P11222_8 = GepnerModel(
    name="p11222-8",
    levels=(6, 6, 2, 2, 2),
    monodromy=MonodromyMatrix((
        (-1, 1, 0, 0, 0, 0),
        (2, 2, _h, _h, _h, _h),
        (1, 0, 1, 0, 0, 0),
        (1, 0, 0, 0, 0, 0),
        (-_h, 0, _q, 0, -_q, 0),
        (_h, _h, -_q, _q, _q, -_q),
    )),
    intersection_coeffs=(8, 4, 56, 24),
    fiber_lattice=(4, 0, 0),
    relations=RelationLattice(8, ((1, 0, 1, 0, 1, 0, 1, 0), (0, 1, 0, 1, 0, 1, 0, 1)), (6, 7)),
    description="P(1,1,2,2,2)[8], Gepner model 6^2 2^3 / Z_8",
)

P11226_12 = GepnerModel(
    name="p11226-12",
    levels=(10, 10, 4, 4, 0),
    monodromy=MonodromyMatrix((
        (-1, 1, 0, 0, 0, 0),
        (3 * _h, 3 * _h, _h, _h, -_h, -_h),
        (1, 0, 1, 0, 0, 0),
        (1, 0, 0, 0, 0, 0),
        (-_h, 0, _h, 0, _h, 0),
        (_h, _h, -_h, _h, -_h, _h),
    )),
    intersection_coeffs=(4, 2, 52, 24),
    fiber_lattice=(2, 0, 0),
    # omega_i + omega_{i+6} = 0: the same cyclotomic rule that yields the Z_8 relations
    relations=cyclotomic_relations(12, (1, 1, 2, 2, 6)),
    description="P(1,1,2,2,6)[12], Gepner model 10^2 4^2 0 / Z_12",
)

BUILTINS: dict[str, GepnerModel] = {m.name: m for m in (P11222_8, P11226_12)}

_REQUIRED = ("name", "levels", "monodromy", "intersection", "fiber_lattice")
_KNOWN = set(_REQUIRED) | {"relations", "pivots", "description"}


def _ints(text: str, line: int, key: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError as exc:
        raise ModelError(f"expected integers: {exc}", line, key) from None


def parse_model_text(text: str, source: str = "<string>") -> GepnerModel:
    if text.lstrip().startswith("{"):
        try:
            return model_from_dict(json.loads(text))
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, BranecalcError):
                raise
            raise ModelError(f"{source}: invalid JSON model: {exc}") from None

    fields: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ModelError("expected 'key = value'", lineno)
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in _KNOWN:
            raise ModelError("unknown key", lineno, key)
        if key in fields:
            raise ModelError("duplicate key", lineno, key)
        fields[key] = (value, lineno)
    for key in _REQUIRED:
        if key not in fields:
            raise ModelError(f"{source}: missing required field", field=key)

    levels = _ints(*fields["levels"], "levels")
    if len(levels) != 5:
        raise ModelError(f"expected 5 levels, got {len(levels)}", fields["levels"][1], "levels")
    if any(k < 0 for k in levels):
        raise ModelError("levels must be nonnegative", fields["levels"][1], "levels")

    mtext, mline = fields["monodromy"]
    try:
        mvals = [as_fraction(x) for x in mtext.replace(",", " ").split()]
    except (ValueError, ZeroDivisionError) as exc:
        raise ModelError(f"bad rational: {exc}", mline, "monodromy") from None
    try:
        monodromy = MonodromyMatrix.from_flat(mvals)
    except ModelError as exc:
        raise ModelError(str(exc).split(": ", 1)[-1], mline, "monodromy") from None

    inter = _ints(*fields["intersection"], "intersection")
    if len(inter) != 4:
        raise ModelError("expected c111, c112, b1, b2", fields["intersection"][1], "intersection")
    fiber = _ints(*fields["fiber_lattice"], "fiber_lattice")
    if len(fiber) != 3:
        raise ModelError("expected H.H, H.L, L.L", fields["fiber_lattice"][1], "fiber_lattice")

    K = _lcm_heights(levels)
    relations = None
    if "relations" in fields:
        rtext, rline = fields["relations"]
        if rtext.strip().lower() == "cyclotomic":
            weights = [K // (k + 2) for k in levels]
            relations = cyclotomic_relations(K, weights)
        else:
            gens = [tuple(_ints(chunk, rline, "relations")) for chunk in rtext.split(";") if chunk.strip()]
            if "pivots" not in fields:
                raise ModelError("relations given without pivots", rline, "pivots")
            pivots = _ints(*fields["pivots"], "pivots")
            try:
                relations = RelationLattice(K, tuple(gens), tuple(pivots))
            except ValueError as exc:
                raise ModelError(str(exc), rline, "relations") from None

    return GepnerModel(
        name=fields["name"][0],
        levels=tuple(levels),
        monodromy=monodromy,
        intersection_coeffs=tuple(inter),
        fiber_lattice=tuple(fiber),
        relations=relations,
        description=fields.get("description", ("", 0))[0],
    )


def _lcm_heights(levels):
    return math.lcm(*(k + 2 for k in levels))


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def dump_model(model: GepnerModel) -> str:
    """Serialize a model in the key/value file format."""
    lines = [
        f"name = {model.name}",
        f"levels = {', '.join(map(str, model.levels))}",
        f"monodromy = {', '.join(_frac_str(x) for x in model.monodromy.flat())}",
        f"intersection = {', '.join(map(str, model.intersection_coeffs))}",
        f"fiber_lattice = {', '.join(map(str, model.fiber_lattice))}",
    ]
    if model.relations is not None:
        gens = "; ".join(",".join(map(str, g)) for g in model.relations.generators)
        lines.append(f"relations = {gens}")
        lines.append(f"pivots = {', '.join(map(str, model.relations.pivots))}")
    if model.description:
        lines.append(f"description = {model.description}")
    return "\n".join(lines) + "\n"


def model_to_dict(model: GepnerModel) -> dict:
    d = {
        "name": model.name,
        "levels": list(model.levels),
        "K": model.K,
        "weights": list(model.weights),
        "monodromy": [[_frac_str(x) for x in row] for row in model.monodromy.entries],
        "intersection": list(model.intersection_coeffs),
        "fiber_lattice": list(model.fiber_lattice),
        "relations": None,
        "description": model.description,
    }
    if model.relations is not None:
        d["relations"] = {
            "generators": [list(g) for g in model.relations.generators],
            "pivots": list(model.relations.pivots),
        }
    return d


def model_from_dict(d: dict) -> GepnerModel:
    rel = d.get("relations")
    levels = tuple(d["levels"])
    if len(levels) != 5:
        raise ModelError(f"expected 5 levels, got {len(levels)}", field="levels")
    relations = None
    if rel is not None:
        relations = RelationLattice(_lcm_heights(levels), tuple(map(tuple, rel["generators"])),
                                    tuple(rel["pivots"]))
    return GepnerModel(
        name=d["name"],
        levels=levels,
        monodromy=MonodromyMatrix(tuple(tuple(as_fraction(x) for x in row) for row in d["monodromy"])),
        intersection_coeffs=tuple(d["intersection"]),
        fiber_lattice=tuple(d["fiber_lattice"]),
        relations=relations,
        description=d.get("description", ""),
    )


def load_model(name_or_path: str | os.PathLike) -> GepnerModel:
    """Resolve a built-in name, a file path, or a name found on BRANECALC_MODEL_PATH."""
    key = str(name_or_path)
    if key in BUILTINS:
        return BUILTINS[key]
    candidates = [Path(key)]
    for d in filter(None, os.environ.get("BRANECALC_MODEL_PATH", "").split(os.pathsep)):
        candidates += [Path(d) / key, Path(d) / f"{key}.model", Path(d) / f"{key}.json"]
    for path in candidates:
        if path.is_file():
            return parse_model_text(path.read_text(), source=str(path))
    raise ModelError(f"unknown model {key!r} (built-ins: {', '.join(BUILTINS)})")
