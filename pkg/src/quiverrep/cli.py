"""Command-line interface.

Subcommands: classify, roots, indec, ext, verify-udr.  Exit codes: 0 success,
1 parse error, 2 infinite representation type, 3 not a positive root,
4 quiver/field mismatch, 5 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .deform import UDRVerdict, udr_report
from .errors import (
    InfiniteTypeError,
    InternalInvariantError,
    MismatchError,
    NotARootError,
    ParseError,
)
from .formats import (
    field_token,
    parse_field,
    parse_quiver_file,
    parse_rep_file,
    rep_file_text,
    report_json,
)
from .indec import all_indecomposables, construct_indecomposable
from .quiver import classify, euler_form
from .rep import hom_ext_dims
from .roots import positive_roots

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INFINITE = 2
EXIT_NOT_ROOT = 3
EXIT_MISMATCH = 4
EXIT_INTERNAL = 5


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _load_quiver(path: str):
    return parse_quiver_file(_read(path))


def _fmt_root(root) -> str:
    return ",".join(str(c) for c in root)


def _cmd_classify(args) -> int:
    Q = _load_quiver(args.quiverfile)
    verdict = classify(Q)
    if verdict.finite:
        result = {"finite": True, "components": [str(t) for t in verdict.components]}
    else:
        result = {"finite": False, "witness": verdict.witness}
    if args.format == "json":
        sys.stdout.write(report_json("classify", Q.name, None, result))
    else:
        print(f"quiver: {Q.name}")
        if verdict.finite:
            print("verdict: finite representation type")
            print("components: " + " ".join(str(t) for t in verdict.components))
        else:
            print("verdict: infinite representation type")
            print(f"reason: {verdict.witness}")
    return EXIT_OK if verdict.finite else EXIT_INFINITE


def _cmd_roots(args) -> int:
    Q = _load_quiver(args.quiverfile)
    roots = positive_roots(Q)
    result = {"count": len(roots), "roots": [list(r) for r in roots]}
    if args.format == "json":
        sys.stdout.write(report_json("roots", Q.name, None, result))
    else:
        print(f"quiver: {Q.name}")
        print(f"positive roots ({len(roots)}):")
        for r in roots:
            print(_fmt_root(r))
    return EXIT_OK


def _parse_dim(text: str, expected: int):
    try:
        coords = tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad dimension vector {text!r}: {exc}") from exc
    if len(coords) != expected:
        raise ParseError(f"dimension vector needs {expected} coordinates, got {len(coords)}")
    return coords


def _cmd_indec(args) -> int:
    Q = _load_quiver(args.quiverfile)
    field = parse_field(args.field)
    d = _parse_dim(args.dim, Q.vertex_count)
    rep = construct_indecomposable(Q, d, field)
    name = "indec_" + "_".join(str(c) for c in d)
    sys.stdout.write(rep_file_text(rep, name))
    return EXIT_OK


def _cmd_ext(args) -> int:
    Q = _load_quiver(args.quiverfile)
    _, src = parse_rep_file(_read(args.src), Q)
    _, dst = parse_rep_file(_read(args.dst), Q)
    if src.field != dst.field:
        raise MismatchError(f"field mismatch: {field_token(src.field)} vs {field_token(dst.field)}")
    hom, ext = hom_ext_dims(src, dst)
    euler = euler_form(Q, src.dims, dst.dims)
    if hom - ext != euler:
        raise InternalInvariantError(
            f"Euler identity failed: {hom} - {ext} != {euler}"
        )
    result = {"hom_dim": hom, "ext_dim": ext, "euler_form": euler}
    if args.format == "json":
        sys.stdout.write(report_json("ext", Q.name, src.field, result))
    else:
        print(f"quiver: {Q.name}")
        print(f"field: {field_token(src.field)}")
        print(f"dim Hom = {hom}")
        print(f"dim Ext1 = {ext}")
        print(f"euler form = {euler}")
    return EXIT_OK


def _cmd_verify_udr(args) -> int:
    Q = _load_quiver(args.quiverfile)
    field = parse_field(args.field)
    if args.dim is not None:
        d = _parse_dim(args.dim, Q.vertex_count)
        rep = construct_indecomposable(Q, d, field)
        report = udr_report(Q, rep)
        result = {
            "root": list(d),
            "end_dim": report.end_dim,
            "ext_dim": report.ext_dim,
            "verdict": report.verdict.value,
        }
        if args.format == "json":
            sys.stdout.write(report_json("verify-udr", Q.name, field, result))
        else:
            print(f"quiver: {Q.name} over {field_token(field)}")
            print(
                f"root {_fmt_root(d)}: end={report.end_dim} ext={report.ext_dim} {report.describe()}"
            )
        ok = report.verdict is UDRVerdict.ISOMORPHIC_TO_K
        return EXIT_OK if ok else EXIT_INTERNAL
    catalog = all_indecomposables(Q, field)
    entries = []
    verified = 0
    for root, rep in catalog.entries:
        report = udr_report(Q, rep)
        good = report.verdict is UDRVerdict.ISOMORPHIC_TO_K
        verified += good
        entries.append((root, report, good))
    total = len(entries)
    if args.format == "json":
        result = {
            "entries": [
                {
                    "root": list(root),
                    "end_dim": rep.end_dim,
                    "ext_dim": rep.ext_dim,
                    "verdict": rep.verdict.value,
                }
                for root, rep, _ in entries
            ],
            "total": total,
            "verified": verified,
            "theorem_holds": verified == total,
        }
        sys.stdout.write(report_json("verify-udr", Q.name, field, result))
    else:
        print(f"quiver: {Q.name} over {field_token(field)}")
        for root, report, _ in entries:
            print(
                f"root {_fmt_root(root)}: end={report.end_dim} ext={report.ext_dim} {report.describe()}"
            )
        print(f"THEOREM VERIFIED: {verified}/{total} indecomposables have R(kQ,M) ≅ k")
    if verified != total:
        print(
            f"error: {total - verified} indecomposable(s) violate the theorem",
            file=sys.stderr,
        )
        return EXIT_INTERNAL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverrep",
        description="Exact computation with quiver representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats=True):
        if formats:
            p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized cross-checks")

    p = sub.add_parser("classify", help="finite/infinite type with Dynkin components")
    p.add_argument("quiverfile")
    add_common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("roots", help="list the positive roots of a finite-type quiver")
    p.add_argument("quiverfile")
    add_common(p)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("indec", help="emit the indecomposable with a given dimension vector")
    p.add_argument("quiverfile")
    p.add_argument("--dim", required=True, help="comma-separated coordinates in vertex order")
    p.add_argument("--field", required=True, help="Q or F<p>")
    add_common(p, formats=False)
    p.set_defaults(func=_cmd_indec)

    p = sub.add_parser("ext", help="dim Hom, dim Ext1, and the Euler form for two representations")
    p.add_argument("quiverfile")
    p.add_argument("--from", dest="src", required=True, metavar="REPFILE")
    p.add_argument("--to", dest="dst", required=True, metavar="REPFILE")
    add_common(p)
    p.set_defaults(func=_cmd_ext)

    p = sub.add_parser("verify-udr", help="verify the deformation-ring theorem over a catalog")
    p.add_argument("quiverfile")
    p.add_argument("--field", required=True, help="Q or F<p>")
    p.add_argument("--dim", help="restrict to a single root")
    add_common(p)
    p.set_defaults(func=_cmd_verify_udr)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InfiniteTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFINITE
    except NotARootError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_ROOT
    except MismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except InternalInvariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entry() -> None:
    sys.exit(main())
