"""Command line interface.

    taumatch tau <module>            --workspace FILE [--json OUT]
    taumatch check-rigid <module>    --workspace FILE [--json OUT]
    taumatch check-pair <pair>       --workspace FILE [--json OUT]
    taumatch bijection <left> <right> --workspace FILE [--all] [--drop c|d] [--json OUT]
    taumatch report                  --workspace FILE [--json OUT]

Exit codes: 0 success, 2 workspace parse error, 3 verification failure or
unresolved name, 4 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .bijection import NoPerfectMatchingError, VerificationError, build_report
from .reports import (
    SCHEMA_VERSION,
    bijection_report_dict,
    morphism_dict,
    pair_report_dict,
    render_bijection_report,
    render_pair_report,
    render_representation,
    representation_dict,
)
from .tau import is_tau_rigid, tau, verify_support_pair
from .workspace import WorkspaceError, parse_workspace

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VERIFICATION = 3
EXIT_INTERNAL = 4


class _NameError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="taumatch",
        description="verify support tau-tilting pairs and match their summands")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--workspace", required=True, help="workspace JSON file")
        p.add_argument("--json", dest="json_out", metavar="OUT",
                       help="also write a machine-readable report to OUT")
        p.add_argument("--max-path-length", type=int, default=None,
                       help="raise the path-length cutoff of the algebra build")

    p = sub.add_parser("tau", help="print the translate of a named module")
    p.add_argument("module")
    common(p)

    p = sub.add_parser("check-rigid", help="tau-rigidity verdict with witness")
    p.add_argument("module")
    common(p)

    p = sub.add_parser("check-pair", help="run the support pair check chain")
    p.add_argument("pair")
    common(p)

    p = sub.add_parser("bijection", help="match the summands of two pairs")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--all", action="store_true", dest="enumerate_all",
                   help="enumerate every valid permutation")
    p.add_argument("--drop", action="append", choices=["c", "d"], default=[],
                   help="also report candidate sets without this condition")
    common(p)

    p = sub.add_parser("report", help="verify every pair in the workspace")
    common(p)
    return parser


def _lookup(table: dict, kind: str, name: str):
    if name not in table:
        known = ", ".join(sorted(table)) or "none defined"
        raise _NameError(f"unknown {kind} {name!r} (known: {known})")
    return table[name]


def _emit(text: str, doc: dict, json_out: Optional[str]):
    print(text)
    if json_out:
        with open(json_out, "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")


def _run_tau(ws, args) -> int:
    module = _lookup(ws.modules, "module", args.module)
    translate = tau(module).translate
    doc = {"schema": SCHEMA_VERSION, "command": "tau", "module": args.module,
           "translate": representation_dict(translate)}
    _emit(f"tau({args.module}):\n" + render_representation(translate), doc, args.json_out)
    return EXIT_OK


def _run_check_rigid(ws, args) -> int:
    module = _lookup(ws.modules, "module", args.module)
    verdict = is_tau_rigid(module)
    doc = {"schema": SCHEMA_VERSION, "command": "check-rigid", "module": args.module,
           "rigid": verdict.holds,
           "witness": morphism_dict(verdict.witness) if verdict.witness else None}
    if verdict:
        _emit(f"{args.module} is tau-rigid", doc, args.json_out)
        return EXIT_OK
    _emit(f"{args.module} is not tau-rigid: a nonzero morphism into the translate exists",
          doc, args.json_out)
    return EXIT_VERIFICATION


def _run_check_pair(ws, args) -> int:
    pair = _lookup(ws.pairs, "pair", args.pair)
    report = pair.report or verify_support_pair(pair)
    doc = pair_report_dict(pair, report)
    _emit(render_pair_report(pair, report), doc, args.json_out)
    return EXIT_OK if report.status == "support tau-tilting" else EXIT_VERIFICATION


def _run_bijection(ws, args) -> int:
    left = _lookup(ws.pairs, "pair", args.left)
    right = _lookup(ws.pairs, "pair", args.right)
    report = build_report(left, right, enumerate_all=args.enumerate_all,
                          drop=set(args.drop))
    doc = bijection_report_dict(report)
    _emit(render_bijection_report(report), doc, args.json_out)
    return EXIT_OK


def _run_report(ws, args) -> int:
    blocks = []
    texts = []
    all_ok = True
    for name in sorted(ws.pairs):
        pair = ws.pairs[name]
        report = pair.report or verify_support_pair(pair)
        blocks.append(pair_report_dict(pair, report))
        texts.append(render_pair_report(pair, report))
        all_ok = all_ok and report.status == "support tau-tilting"
    doc = {"schema": SCHEMA_VERSION, "command": "report", "pairs": blocks}
    _emit("\n".join(texts) if texts else "no pairs defined", doc, args.json_out)
    return EXIT_OK if all_ok else EXIT_VERIFICATION


_DISPATCH = {
    "tau": _run_tau,
    "check-rigid": _run_check_rigid,
    "check-pair": _run_check_pair,
    "bijection": _run_bijection,
    "report": _run_report,
}


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        ws = parse_workspace(args.workspace, max_path_length=args.max_path_length)
    except WorkspaceError as exc:
        print(f"workspace error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return _DISPATCH[args.command](ws, args)
    except (_NameError, VerificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (AssertionError, NoPerfectMatchingError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
