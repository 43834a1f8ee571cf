"""Command-line interface.

Every command prints a human summary by default and a deterministic JSON
report with --json (sorted keys; the wall_time_ms field is the only part
that varies between identical runs). Exit codes: 0 success, 1 domain error
or failed cross-check, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from math import factorial, prod

from . import __version__, chow_ring, schubert, verify
from .bounds import BoundQuery, bound, enumerate_types
from .errors import ArclineError
from .ff_search import FFConfig, count_lines_ff, count_lines_through_point_ff, \
    line_space_size
from .line_locus import CIType, contact_class, count_lines, line_locus_class, \
    lines_through_point, swept_degree
from .polycore import parse_poly
from .prolongation import arc_ideal


def _type_arg(text: str) -> tuple[int, ...]:
    try:
        degrees = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}")
    if not degrees:
        raise argparse.ArgumentTypeError("degree list is empty")
    return degrees


def _coords_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}")


def _class_monomials(c: chow_ring.ChowClass) -> list[list[int]]:
    return [[a, b, c.coeffs[(a, b)]] for a, b in sorted(c.coeffs)]


def _run_lines(args) -> tuple[dict, str, bool]:
    t = CIType(args.ambient, args.type)
    res = count_lines(t)
    result = {"ambient": t.n, "type": list(t.degrees), "count": res.value,
              "class": str(res.certificate)}
    lines = [f"type {t.label()}: {res.value} lines on a generic member",
             f"certificate: {res.certificate}"]
    ok = True
    if args.oracle:
        other = schubert.oracle_count_lines(t)
        result["oracle_count"] = other
        result["agrees"] = other == res.value
        ok = other == res.value
        lines.append(f"independent Grassmannian count: {other} "
                     f"({'agrees' if ok else 'DISAGREES'})")
    return result, "\n".join(lines), ok


def _run_point_lines(args) -> tuple[dict, str, bool]:
    t = CIType(args.ambient, args.type)
    res = lines_through_point(t)
    result = {"ambient": t.n, "type": list(t.degrees), "count": res.value,
              "class": str(res.certificate)}
    lines = [f"type {t.label()}: {res.value} lines through a general point",
             f"certificate: {res.certificate}"]
    ok = True
    if args.oracle:
        other = prod(factorial(d) for d in t.degrees)
        result["oracle_count"] = other
        result["agrees"] = other == res.value
        ok = other == res.value
        lines.append(f"factorial closed form: {other} "
                     f"({'agrees' if ok else 'DISAGREES'})")
    return result, "\n".join(lines), ok


def _run_locus(args) -> tuple[dict, str, bool]:
    t = CIType(args.ambient, args.type)
    c = line_locus_class(t)
    result = {"ambient": t.n, "type": list(t.degrees), "class": str(c),
              "monomials": _class_monomials(c)}
    return result, f"line-locus class for type {t.label()}:\n  {c}", True


def _run_contact(args) -> tuple[dict, str, bool]:
    c = contact_class(args.ambient, args.degree, args.order)
    result = {"ambient": args.ambient, "degree": args.degree,
              "order": args.order, "class": str(c),
              "monomials": _class_monomials(c)}
    lines = [f"contact order >= {args.order} with a degree-{args.degree} "
             f"hypersurface in P^{args.ambient}:", f"  {c}"]
    if args.sweep is not None:
        deg = swept_degree(c, args.sweep)
        result["sweep_codim"] = args.sweep
        result["swept_degree"] = deg
        lines.append(f"swept locus degree at fiber codimension {args.sweep}: {deg}")
    return result, "\n".join(lines), True


def _run_bound(args) -> tuple[dict, str, bool]:
    q = BoundQuery(dim=args.dim, codim=args.codim, min_degree=args.min_degree)
    value = bound(q)
    types = enumerate_types(q)
    witness, _ = types[0]
    result = {"dim": q.dim, "codim": q.codim, "min_degree": q.min_degree,
              "bound": value,
              "witness": {"type": list(witness),
                          "ambient": q.dim + len(witness)}}
    lines = [f"dimension {q.dim}: at most {value} lines through a general "
             f"point, realized by type ({','.join(map(str, witness))}) "
             f"in P^{q.dim + len(witness)}"]
    if args.table:
        result["table"] = [{"type": list(degs), "ambient": q.dim + len(degs),
                            "count": cnt} for degs, cnt in types]
        for degs, cnt in types:
            lines.append(f"  ({','.join(map(str, degs))}) in "
                         f"P^{q.dim + len(degs)}: {cnt}")
    return result, "\n".join(lines), True


def _run_oracle(args) -> tuple[dict, str, bool]:
    t = CIType(args.ambient, args.type)
    if args.fano:
        k = schubert.expected_family_dim(t)
        deg = schubert.fano_degree(t)
        result = {"ambient": t.n, "type": list(t.degrees),
                  "expected_family_dim": k, "plucker_degree": deg}
        human = (f"type {t.label()}: family of lines has expected dimension "
                 f"{k} and Pluecker degree {deg}")
    else:
        count = schubert.oracle_count_lines(t)
        result = {"ambient": t.n, "type": list(t.degrees), "count": count}
        human = f"type {t.label()}: {count} lines (Grassmannian count)"
    return result, human, True


def _run_arc_ideal(args) -> tuple[dict, str, bool]:
    f = parse_poly(args.poly, args.ambient)
    system = arc_ideal(f, args.order)
    result = {"poly": str(f), "order": system.order, "degree": system.degree,
              "coefficients": [str(g) for g in system.coefficients]}
    lines = [f"jet equations of {f} to order {system.order}:"]
    lines += [f"  t^{i}: {g}" for i, g in enumerate(system.coefficients)]
    return result, "\n".join(lines), True


def _run_ff_lines(args) -> tuple[dict, str, bool]:
    gens = tuple(parse_poly(s, args.ambient) for s in args.poly or [])
    cfg = FFConfig(p=args.prime, n=args.ambient, generators=gens)
    result = {"prime": cfg.p, "ambient": cfg.n,
              "generators": [str(g) for g in cfg.generators],
              "line_space": line_space_size(cfg.n, cfg.p)}
    where = (f"V({', '.join(str(g) for g in cfg.generators)})"
             if cfg.generators else f"P^{cfg.n}")
    if args.through is not None:
        count = count_lines_through_point_ff(cfg, args.through)
        result["through"] = list(args.through)
        result["count"] = count
        human = (f"{count} F_{cfg.p}-rational lines through "
                 f"[{':'.join(map(str, args.through))}] on {where}")
    else:
        count = count_lines_ff(cfg)
        result["count"] = count
        human = f"{count} F_{cfg.p}-rational lines on {where} in P^{cfg.n}"
    return result, human + "\n(rational count; the geometric count over a " \
                           "larger field can be bigger)", True


def _run_verify(args) -> tuple[dict, str, bool]:
    results = verify.run_verify(max_ambient=args.max_ambient)
    ok = all(r.passed for r in results)
    result = {"max_ambient": max(args.max_ambient, 3),
              "checks": [{"name": r.name, "passed": r.passed,
                          "cases": r.cases, "detail": r.detail}
                         for r in results],
              "passed": ok}
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        detail = f" [{r.detail}]" if r.detail else ""
        lines.append(f"{status} {r.name}: {r.cases} case(s){detail}")
    lines.append(f"{'all checks passed' if ok else 'SOME CHECKS FAILED'}")
    return result, "\n".join(lines), ok


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arcline",
        description="Exact line counts on generic complete intersections, "
                    "with independent cross-checks.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, run, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(run=run)
        p.add_argument("--json", action="store_true",
                       help="emit a JSON report instead of text")
        return p

    p = add("lines", _run_lines, "count lines on a generic complete intersection")
    p.add_argument("--ambient", type=int, required=True, metavar="N")
    p.add_argument("--type", type=_type_arg, required=True, metavar="D1,D2,...")
    p.add_argument("--oracle", action="store_true",
                   help="also run the independent Grassmannian count")

    p = add("point-lines", _run_point_lines,
            "count lines through a general point")
    p.add_argument("--ambient", type=int, required=True, metavar="N")
    p.add_argument("--type", type=_type_arg, required=True, metavar="D1,D2,...")
    p.add_argument("--oracle", action="store_true",
                   help="also compare against the factorial closed form")

    p = add("locus", _run_locus, "print the line-locus class")
    p.add_argument("--ambient", type=int, required=True, metavar="N")
    p.add_argument("--type", type=_type_arg, required=True, metavar="D1,D2,...")

    p = add("contact", _run_contact, "contact-order class of a hypersurface")
    p.add_argument("--ambient", type=int, required=True, metavar="N")
    p.add_argument("--degree", type=int, required=True, metavar="D")
    p.add_argument("--order", type=int, required=True, metavar="K")
    p.add_argument("--sweep", type=int, metavar="CODIM",
                   help="also report the degree of the swept locus")

    p = add("bound", _run_bound, "sharp bound on lines through a point")
    p.add_argument("--dim", type=int, required=True, metavar="M")
    p.add_argument("--codim", type=int, metavar="R")
    p.add_argument("--min-degree", type=int, default=2, metavar="DMIN")
    p.add_argument("--table", action="store_true",
                   help="list every admissible type with its count")

    p = add("oracle", _run_oracle, "Grassmannian-side counts")
    p.add_argument("--ambient", type=int, required=True, metavar="N")
    p.add_argument("--type", type=_type_arg, required=True, metavar="D1,D2,...")
    p.add_argument("--fano", action="store_true",
                   help="report expected dimension and Pluecker degree of the "
                        "family of lines instead of a count")

    p = add("arc-ideal", _run_arc_ideal, "jet equations of a polynomial")
    p.add_argument("--poly", required=True, metavar="EXPR")
    p.add_argument("--order", type=int, required=True, metavar="M")
    p.add_argument("--ambient", type=int, metavar="N",
                   help="bound the allowed coordinate indices")

    p = add("ff-lines", _run_ff_lines, "brute-force rational lines over F_p")
    p.add_argument("--prime", type=int, required=True, metavar="P")
    p.add_argument("--ambient", type=int, required=True, metavar="N")
    p.add_argument("--poly", action="append", metavar="EXPR",
                   help="generator; repeat for a complete intersection")
    p.add_argument("--through", type=_coords_arg, metavar="C0,C1,...",
                   help="count only lines through this point")

    p = add("verify", _run_verify, "run the bundled cross-check suite")
    p.add_argument("--max-ambient", type=int, default=6, metavar="N",
                   help="largest ambient dimension for the count sweeps")

    return parser


def dispatch(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already printed its message
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        result, human, ok = args.run(args)
    except ArclineError as err:
        wall = round((time.perf_counter() - start) * 1000, 3)
        if args.json:
            print(json.dumps({"command": args.command, "error": err.payload(),
                              "wall_time_ms": wall}, sort_keys=True))
        else:
            print(f"error: {err}", file=sys.stderr)
        return 1
    wall = round((time.perf_counter() - start) * 1000, 3)
    if args.json:
        print(json.dumps({"command": args.command, "result": result,
                          "wall_time_ms": wall}, sort_keys=True))
    else:
        print(human)
    return 0 if ok else 1


def main() -> None:
    sys.exit(dispatch())
