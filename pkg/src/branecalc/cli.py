"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 the command ran
but its output is a discrepancy report (some comparison did not match).

Values starting with '-' must be attached with '=', e.g. ``--split=-1,-1``.
States are written ``L1,L2,L3,L4,L5[:M[:S]]``.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import audit
from .charges import CONVENTIONS, charge_table, to_large_radius
from .emit import FORMATS, emit
from .errors import BranecalcError
from .ext import (CohomologyTable, brane_quiver, ext_via_spectral, normal_ext, quiver_paths,
                  superpotential_form)
from .gepner import (MarginalInterpretation, boundary_charge_gepner, intersection_direct,
                     intersection_element, marginal_count)
from .geometry import (DivisorClass, IntersectionRing, central_charge, is_slope_semistable,
                       moduli_dimension, mukai_vector, slope)
from .models import BUILTINS, load_model
from .monodromy import ChargeVector

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_DISCREPANCY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(n=None):
    def parse(text):
        try:
            vals = [int(x) for x in text.split(",")]
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
        if n is not None and len(vals) != n:
            raise argparse.ArgumentTypeError(f"expected {n} integers, got {len(vals)}")
        return vals
    return parse


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 3 or -7/3, got {text!r}")


def _rational_list(n):
    def parse(text):
        vals = [_rational(x) for x in text.split(",")]
        if len(vals) != n:
            raise argparse.ArgumentTypeError(f"expected {n} rationals, got {len(vals)}")
        return vals
    return parse


def _state_spec(text):
    parts = text.split(":")
    if not 1 <= len(parts) <= 3:
        raise argparse.ArgumentTypeError(f"state must be L1,..,L5[:M[:S]], got {text!r}")
    L = _int_list(5)(parts[0])
    try:
        M = int(parts[1]) if len(parts) > 1 else 0
        S = int(parts[2]) if len(parts) > 2 else 0
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad M or S in {text!r}")
    return L, M, S


def _sheaf_spec(text):
    """ch0:a,b for the class ch0 with c1 = aH + bL."""
    try:
        ch0, c1 = text.split(":")
        return _rational(ch0), DivisorClass(*_rational_list(2)(c1))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected ch0:a,b, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json")

    p = _Parser(prog="branecalc", description="D-brane charge and Ext-group calculator")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    models = sub.add_parser("models", help="model registry")
    msub = models.add_subparsers(dest="action", required=True, parser_class=_Parser)
    msub.add_parser("list", parents=[common])
    show = msub.add_parser("show", parents=[common])
    show.add_argument("name")

    c = sub.add_parser("charge", parents=[common], help="boundary-state charges")
    c.add_argument("--model", required=True)
    c.add_argument("--L", required=True, type=_int_list(5))
    grp = c.add_mutually_exclusive_group()
    grp.add_argument("--M", type=int)
    grp.add_argument("--all-M", action="store_true")
    c.add_argument("--convention", choices=CONVENTIONS, default="column")

    i = sub.add_parser("intersect", parents=[common], help="intersection generating element")
    i.add_argument("--model", required=True)
    i.add_argument("--state1", required=True, type=_state_spec)
    i.add_argument("--state2", required=True, type=_state_spec)
    i.add_argument("--method", choices=("g", "direct"), default="g")

    m = sub.add_parser("marginal", parents=[common], help="marginal-operator count")
    m.add_argument("--model", required=True)
    m.add_argument("--state", required=True, type=_state_spec)
    m.add_argument("--interpretation", choices=[x.value for x in MarginalInterpretation],
                   default=MarginalInterpretation.REDUCED_ABS.value)
    m.add_argument("--factors", type=_int_list(), help="restrict to these factor indices (0-based)")

    z = sub.add_parser("central-charge", parents=[common])
    z.add_argument("--model", required=True)
    z.add_argument("--n", required=True, type=_rational_list(6))
    z.add_argument("--t1", required=True, type=_rational)
    z.add_argument("--t2", required=True, type=_rational)
    z.add_argument("--const", type=_rational, default=Fraction(0))

    e = sub.add_parser("ext", help="Ext-group dimensions")
    esub = e.add_subparsers(dest="action", required=True, parser_class=_Parser)
    en = esub.add_parser("normal", parents=[common])
    en.add_argument("--split", required=True, type=_int_list(2))
    es = esub.add_parser("spectral", parents=[common])
    es.add_argument("--table", required=True, type=Path)

    mk = sub.add_parser("mukai", parents=[common], help="K3-fiber Mukai vector")
    mk.add_argument("--model", default="p11222-8")
    mk.add_argument("--r", required=True, type=_rational)
    mk.add_argument("--c1", required=True, type=_rational_list(2), help="a,b for aH + bL")
    mk.add_argument("--c2", required=True, type=_rational)

    st = sub.add_parser("stability", parents=[common], help="slope semistability of a subsheaf")
    st.add_argument("--model", default="p11222-8")
    st.add_argument("--sub", required=True, type=_sheaf_spec, help="ch0:a,b")
    st.add_argument("--whole", required=True, type=_sheaf_spec, help="ch0:a,b")
    st.add_argument("--omega", required=True, type=_rational_list(2))
    st.add_argument("--dim", type=int, choices=(2, 3), default=3)

    q = sub.add_parser("quiver", help="D0-D2-D4-D6 quiver")
    qsub = q.add_subparsers(dest="action", required=True, parser_class=_Parser)
    qp = qsub.add_parser("paths", parents=[common])
    qp.add_argument("--from", dest="start", required=True, type=int)
    qp.add_argument("--to", dest="end", required=True, type=int)
    qp.add_argument("--max-len", required=True, type=int)

    a = sub.add_parser("audit", parents=[common], help="compare with published tables")
    a.add_argument("--model", default="p11222-8")
    return p


def _run(args) -> tuple[object, int]:
    cmd = args.command
    if cmd == "models":
        if args.action == "list":
            return [{"name": m.name, "levels": list(m.levels), "K": m.K, "weights": list(m.weights),
                     "relations": m.relations is not None, "description": m.description}
                    for m in BUILTINS.values()], EXIT_OK
        return load_model(args.name), EXIT_OK

    if cmd == "charge":
        model = load_model(args.model)
        if args.M is None and not args.all_M:
            args.all_M = True
        if args.all_M:
            return charge_table(model, args.L, args.convention), EXIT_OK
        s = model.state(args.L, args.M)
        q_G = boundary_charge_gepner(model, s)
        return {"M": s.M, "gepner": list(q_G),
                "charge": to_large_radius(model, q_G, args.convention)}, EXIT_OK

    if cmd == "intersect":
        model = load_model(args.model)
        s1, s2 = model.state(*args.state1), model.state(*args.state2)
        fn = intersection_element if args.method == "g" else intersection_direct
        el = fn(model, s1, s2)
        return {"method": args.method, "element": el, "value_at_g=1": el.coefficient_sum()}, EXIT_OK

    if cmd == "marginal":
        model = load_model(args.model)
        s = model.state(*args.state)
        marg, vac = marginal_count(model, s, args.interpretation, args.factors)
        return {"interpretation": args.interpretation, "marginal": marg, "vac": vac}, EXIT_OK

    if cmd == "central-charge":
        ring = IntersectionRing.from_model(load_model(args.model))
        n = ChargeVector.of(args.n)
        return {"Z": central_charge(ring, n, args.t1, args.t2, args.const)}, EXIT_OK

    if cmd == "ext":
        if args.action == "normal":
            ext1, ext2 = normal_ext(args.split)
            w = superpotential_form(args.split)
            return {"split": args.split, "ext1": ext1, "ext2": ext2, "superpotential": w.form}, EXIT_OK
        table = CohomologyTable.parse(args.table.read_text())
        return {"ext": list(ext_via_spectral(table)), "euler": table.euler()}, EXIT_OK

    if cmd == "mukai":
        ring = IntersectionRing.from_model(load_model(args.model))
        v = mukai_vector(args.r, DivisorClass(*args.c1), args.c2, ring)
        return {"mukai": v, "moduli_dimension": moduli_dimension(v, ring)}, EXIT_OK

    if cmd == "stability":
        ring = IntersectionRing.from_model(load_model(args.model))
        omega = DivisorClass(*args.omega)
        return {"mu_sub": slope(*args.sub, omega, args.dim, ring),
                "mu_whole": slope(*args.whole, omega, args.dim, ring),
                "semistable": is_slope_semistable(args.sub, args.whole, omega, args.dim, ring)}, EXIT_OK

    if cmd == "quiver":
        paths = quiver_paths(brane_quiver(), args.start, args.end, args.max_len)
        return [{"path": p.name, "length": len(p)} for p in paths], EXIT_OK

    if cmd == "audit":
        reports = audit.full_audit(load_model(args.model))
        code = EXIT_OK if all(r.match for r in reports) else EXIT_DISCREPANCY
        if args.format != "json":
            reports = [{"item": r.item, "match": r.match, "description": r.description} for r in reports]
        return reports, code

    raise AssertionError(cmd)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, code = _run(args)
    except (BranecalcError, ValueError, OSError) as exc:
        print(f"branecalc: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(emit(result, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
