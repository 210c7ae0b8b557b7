"""Command-line front end.

Subcommands:
  generate moebius | minimal3k --k K | tube-complex --k K   -> complex file
  analyze COMPLEX                                            -> JSON report
  census --n N [--strategy a|b] [--verify-thm31 K]           -> census + summary
  realize tube --knot F [--eps E] | complement --knot F | cyclic --k K
                                                             -> OFF/OBJ + certificate
  knot det --knot F                                          -> determinant

Exit codes: 0 success, 1 verification failure, 2 usage error.
Identical arguments and inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import census as census_mod
from .cycles import analysis_report
from .diagrams import knot_determinant
from .errors import PolytorusError
from .generators import minimal_torus_3k, moebius_torus, tube_complex
from .geometry import parse_rational
from .knots import load_stick_knot
from .realization import (
    ExactRadius,
    choose_epsilon,
    complement_construction,
    cyclic_polytope_realization,
    export_mesh,
    tube_construction,
    verify_embedding,
)
from .surfaces import format_complex, load_complex


def _write(text: str, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_generate(args) -> int:
    if args.kind == "moebius":
        T = moebius_torus()
    elif args.kind == "minimal3k":
        T = minimal_torus_3k(args.k)
    else:
        T = tube_complex(args.k)
    _write(format_complex(T), args.output)
    return 0


def _cmd_analyze(args) -> int:
    T = load_complex(args.complex)
    report = analysis_report(T)
    _write(json.dumps(report, indent=2, sort_keys=True) + "\n", args.output)
    return 0 if report["bound_satisfied"] and not report["layer_report"]["violated"] else 1


def _cmd_census(args) -> int:
    budget = float(os.environ[census_mod.TIME_BUDGET_ENV]) \
        if census_mod.TIME_BUDGET_ENV in os.environ else None
    records = census_mod.enumerate_tori(args.n, args.strategy, budget)
    lines = []
    by_type: dict[str, int] = {}
    for rec in records:
        lines.append(" ".join(f"{a},{b},{c}" for a, b, c in rec.canonical_faces))
        by_type[rec.type_str] = by_type.get(rec.type_str, 0) + 1
    summary = {
        "schema": 1,
        "n": args.n,
        "count": len(records),
        "by_type": dict(sorted(by_type.items())),
    }
    out = "\n".join(lines) + ("\n" if lines else "")
    out += json.dumps(summary, sort_keys=True) + "\n"
    code = 0
    if args.verify_thm31 is not None:
        rep = census_mod.census_verify_theorem31(args.verify_thm31, budget)
        out += json.dumps({
            "theorem31_k": rep.k,
            "below_counts": rep.below_counts,
            "minimal_count": rep.minimal_count,
            "matches_generator": rep.matches_generator,
            "ok": rep.ok,
        }, sort_keys=True) + "\n"
        code = 0 if rep.ok else 1
    _write(out, args.output)
    return code


def _cmd_realize(args) -> int:
    if args.what == "tube":
        K = load_stick_knot(args.knot)
        eps = ExactRadius.from_value(parse_rational(args.eps)) if args.eps \
            else choose_epsilon(K)
        mesh = tube_construction(K, eps)
    elif args.what == "complement":
        K = load_stick_knot(args.knot)
        mesh = complement_construction(K)
    else:
        mesh = cyclic_polytope_realization(args.k)
    report = verify_embedding(mesh)
    cert = {
        "schema": 1,
        "kind": mesh.provenance.get("kind"),
        "vertices": mesh.complex.n_vertices,
        "faces": len(mesh.complex.faces),
        "embedded": report.ok,
    }
    if "knot" in mesh.provenance:
        from .realization import core_curve
        cert["determinant"] = knot_determinant(core_curve(mesh))
    if "core_determinant" in mesh.provenance:
        cert["determinant"] = mesh.provenance["core_determinant"]
    if args.output:
        export_mesh(mesh, args.output, args.format, args.precision)
        cert["output"] = args.output
    sys.stdout.write(json.dumps(cert, sort_keys=True) + "\n")
    return 0 if report.ok else 1


def _cmd_knot(args) -> int:
    K = load_stick_knot(args.knot)
    if args.invariant == "det":
        det = knot_determinant(K)
        sys.stdout.write(json.dumps({"schema": 1, "determinant": det}, sort_keys=True) + "\n")
    else:
        from .diagrams import DIRECTION_SEQUENCE, project_diagram
        from .errors import NonGenericDirection
        for d in DIRECTION_SEQUENCE:
            try:
                diagram = project_diagram(K, d)
                break
            except NonGenericDirection:
                continue
        else:
            raise NonGenericDirection("no generic direction found")
        sys.stdout.write(" ".join(str(x) for x in diagram.gauss_code) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polytorus", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--threads", type=int, default=0,
                   help="worker cap for census and embedding checks "
                        "(accepted for compatibility; runs single-process)")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a named triangulation")
    g.add_argument("kind", choices=["moebius", "minimal3k", "tube-complex"])
    g.add_argument("--k", type=int, default=3)
    g.add_argument("-o", "--output", default="-")
    g.set_defaults(func=_cmd_generate)

    a = sub.add_parser("analyze", help="type, stick number, bound and layer report")
    a.add_argument("complex")
    a.add_argument("-o", "--output", default="-")
    a.set_defaults(func=_cmd_analyze)

    c = sub.add_parser("census", help="enumerate all n-vertex torus triangulations")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--strategy", choices=["a", "b"], default="a")
    c.add_argument("--verify-thm31", type=int, default=None, metavar="K")
    c.add_argument("-o", "--output", default="-")
    c.set_defaults(func=_cmd_census)

    r = sub.add_parser("realize", help="build an exact geometric realization")
    r.add_argument("what", choices=["tube", "complement", "cyclic"])
    r.add_argument("--knot", help="stick knot file (tube, complement)")
    r.add_argument("--k", type=int, default=3, help="parameter for cyclic")
    r.add_argument("--eps", help="tube radius override (rational)")
    r.add_argument("-o", "--output", help="mesh output file")
    r.add_argument("--format", choices=["off", "obj"], default="off")
    r.add_argument("--precision", type=int, default=12)
    r.set_defaults(func=_cmd_realize)

    k = sub.add_parser("knot", help="knot invariants")
    k.add_argument("invariant", choices=["det", "gauss"])
    k.add_argument("--knot", required=True)
    k.set_defaults(func=_cmd_knot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "realize" and args.what in ("tube", "complement") and not args.knot:
        parser.error("realize tube/complement requires --knot")
    try:
        return args.func(args)
    except PolytorusError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except OSError as exc:
        sys.stderr.write(f"io error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
