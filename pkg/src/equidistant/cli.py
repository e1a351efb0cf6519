"""Command-line entry point: ``equidistant <subcommand> ...``.

JSON goes to stdout, a short human summary to stderr.  Exit codes: 0 ok,
2 invalid input, 3 search budget exhausted, 4 internal inconsistency.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .bounds import best_bound
from .codes import DEGENERATE, Code, distance_profile, is_equidistant
from .constructions import (
    family_as_code, kernel_sunflower_code, projective_plane_family, simplex_linear_code,
    sunflower_code,
)
from .delta import (
    SetFamily, deza_q_threshold, detect_delta_q, find_kernel, qary_family_parameters,
)
from .embeddings import gram_exact, rank_argument_report, theta_embed
from .errors import EquidistantError
from .search import max_equidistant

EXIT_OK, EXIT_INVALID, EXIT_BUDGET, EXIT_INTERNAL = 0, 2, 3, 4


class Inconsistent(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read_code(path: str) -> Code:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
        return Code.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise EquidistantError(f"cannot read code from {path}: {exc}") from None


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise EquidistantError(f"{args.kind} needs {' '.join(missing)}")


def cmd_construct(args) -> int:
    if args.kind == "simplex":
        _need(args, "q", "k")
        code = simplex_linear_code(args.q, args.k)
    elif args.kind == "sunflower":
        _need(args, "n", "d", "q")
        code = sunflower_code(args.n, args.d, args.q)
    elif args.kind == "kernel-sunflower":
        _need(args, "n", "d", "q")
        code = kernel_sunflower_code(args.n, args.d, args.q)
    else:
        _need(args, "q")
        code = family_as_code(projective_plane_family(args.q))
    d = is_equidistant(code)
    if d is None:
        raise Inconsistent(f"{args.kind} construction is not equidistant")
    text = code.dumps()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    _say(f"{args.kind}: n={code.n} q={code.q} |C|={len(code)} d={d}")
    return EXIT_OK


def cmd_verify(args) -> int:
    code = _read_code(args.file)
    d = is_equidistant(code)
    prof = distance_profile(code)
    out = {
        "n": code.n, "q": code.q, "size": len(code),
        "equidistant": d is not None,
        "d": d if isinstance(d, int) else None,
        "degenerate": d == DEGENERATE,
        "distances": list(prof.distinct_distances),
        "s": prof.s,
        "within_bound": None,
    }
    if isinstance(d, int):
        bb = best_bound(code.n, code.q, d)
        out["best_bound"] = bb.minimum
        out["within_bound"] = len(code) <= bb.minimum
        if not out["within_bound"]:
            raise Inconsistent(f"code of size {len(code)} beats the bound {bb.minimum}")
    _emit(out)
    _say(f"|C|={len(code)} equidistant={out['equidistant']} distances={out['distances']}")
    return EXIT_OK


def cmd_bound(args) -> int:
    bb = best_bound(args.n, args.q, args.d)
    if args.output == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["name", "value", "applicable", "condition", "large_n"])
        for r in bb.reports:
            w.writerow([r.name, r.value, r.applicable, r.condition, "" if r.large_n is None else r.large_n])
        sys.stdout.write(buf.getvalue())
    else:
        _emit(bb.to_json())
    _say(f"minimum applicable bound: {bb.minimum}")
    return EXIT_OK


def cmd_search(args) -> int:
    res = max_equidistant(args.n, args.q, args.d, args.budget, canonical=args.canonical,
                          use_bounds=not args.no_bound_prune)
    if args.emit_witness:
        with open(args.emit_witness, "w") as fh:
            fh.write(res.witness.dumps() + "\n")
    _emit(res.to_json())
    status = "proven optimal" if res.proven_optimal else "budget exhausted"
    _say(f"({args.n},{args.q},{args.d}): {res.optimum} ({status}, {res.explored_nodes} nodes)")
    return EXIT_OK if res.proven_optimal else EXIT_BUDGET


def cmd_embed(args) -> int:
    code = _read_code(args.file)
    report = rank_argument_report(code)
    out = {"gram": gram_exact(code).to_strings(), "rank_argument": report.to_json()}
    if args.points:
        out["points"] = theta_embed(code).points.tolist()
    if not report.consistent:
        raise Inconsistent("Gram determinant checks disagree")
    _emit(out)
    _say(f"m={report.m} det={report.det_bareiss} at_trivial_bound={report.at_trivial_bound}")
    return EXIT_OK


def cmd_delta(args) -> int:
    code = _read_code(args.file)
    if args.drop_zero:
        code = Code([w for w in code if any(w.symbols)], code.q, code.n)
    k, l2 = qary_family_parameters(code)
    cert = detect_delta_q(code)
    if code.q == 2:
        bcert = find_kernel(SetFamily.from_code(code))
        binary_kernel = sorted(bcert.kernel) if bcert else None
    else:
        binary_kernel = sorted(cert.binary_kernel) if cert and cert.binary_kernel is not None else None
    out = {
        "family": {"k": k, "l2": l2},
        "binary_kernel": binary_kernel,
        "qary_kernel": sorted(cert.kernel) if cert else None,
        "is_delta_q": cert is not None,
        "threshold": deza_q_threshold(k, l2, code.q) if l2 < 2 * k else None,
    }
    _emit(out)
    _say(f"|C|={len(code)} k={k} 2l={l2} delta_q={out['is_delta_q']}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="equidistant", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a known code")
    c.add_argument("--kind", required=True, choices=["simplex", "sunflower", "kernel-sunflower", "pg-plane"])
    for name in ("q", "k", "n", "d"):
        c.add_argument(f"--{name}", type=int)
    c.add_argument("-o", "--output", help="write the code here instead of stdout")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a code file")
    v.add_argument("file", help="code JSON, or - for stdin")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bound", help="evaluate all upper bounds")
    for name in ("n", "q", "d"):
        b.add_argument(f"--{name}", type=int, required=True)
    b.add_argument("--output", choices=["json", "csv"], default="json")
    b.set_defaults(func=cmd_bound)

    s = sub.add_parser("search", help="exhaustive maximum equidistant code")
    for name in ("n", "q", "d"):
        s.add_argument(f"--{name}", type=int, required=True)
    s.add_argument("--budget", type=int, help="node limit")
    s.add_argument("--canonical", action="store_true", help="lexicographically least optimal witness")
    s.add_argument("--emit-witness", metavar="FILE")
    s.add_argument("--no-bound-prune", action="store_true", help="do not stop at best_bound")
    s.set_defaults(func=cmd_search)

    e = sub.add_parser("embed", help="exact Gram matrix and rank argument")
    e.add_argument("file")
    e.add_argument("--points", action="store_true", help="also emit float sphere points")
    e.set_defaults(func=cmd_embed)

    dl = sub.add_parser("delta", help="sunflower detection")
    dl.add_argument("file")
    dl.add_argument("--drop-zero", action="store_true", help="ignore the all-zero word")
    dl.set_defaults(func=cmd_delta)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        return args.func(args)
    except Inconsistent as exc:
        _say(f"internal inconsistency: {exc}")
        return EXIT_INTERNAL
    except (EquidistantError, ValueError) as exc:
        _say(f"error: {exc}")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
