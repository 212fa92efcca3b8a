"""Command-line interface.

Verbs: verify, build, check, invariants, orbit, export.  Factorization
inputs come from a file, stdin (``-``), or ``--standard d``.  Exit codes:
0 all checks pass, 1 a mathematical check failed, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .diagram import (
    DiagramError,
    TorusDiagram,
    assemble,
    bridge_params,
    check_transverse,
    mini_stabilize,
    pairwise_links,
    verify_trivial,
)
from .documents import (
    DocumentError,
    parse_diagram,
    parse_factorization,
    serialize_diagram,
    serialize_factorization,
)
from .factorization import (
    Factorization,
    factorization_key,
    hurwitz_orbit,
    standard_factorization,
    validate,
)
from .invariants import make_ledger
from .svg import export_svg
from .words import BraidError


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_factorization(args: argparse.Namespace) -> Factorization:
    if args.standard is not None:
        return standard_factorization(args.standard)
    if args.input is None:
        raise DocumentError("no input: give a factorization file or --standard d")
    return parse_factorization(_read_text(args.input))


def _emit(args: argparse.Namespace, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _cmd_verify(args: argparse.Namespace) -> int:
    f = _load_factorization(args)
    report = validate(f)
    payload = dataclasses.asdict(report)
    payload["valid"] = report.valid
    lines = [
        f"strands          d = {report.strands}",
        f"factors          n = {report.factor_count}"
        + (f" (expected {report.strands**2 - report.strands})" if report.smooth else ""),
        f"exponent sum       = {report.exponent_total}"
        f" (expected {report.strands * (report.strands - 1)})",
        f"product = full twist: {'ok' if report.product_ok else 'FAIL'}",
        f"exponent sum check:   {'ok' if report.sum_ok else 'FAIL'}",
    ]
    if report.count_ok is not None:
        lines.append(f"factor count check:   {'ok' if report.count_ok else 'FAIL'}")
    lines.append(f"result: {'valid' if report.valid else 'INVALID'}")
    _emit(args, payload, lines)
    return 0 if report.valid else 1


def _cmd_build(args: argparse.Namespace) -> int:
    f = _load_factorization(args)
    diag = mini_stabilize(assemble(f))
    _write_text(args.output, serialize_diagram(diag, source=f))
    return 0


def _load_diagram(args: argparse.Namespace) -> tuple[TorusDiagram, Factorization | None]:
    diag, source = parse_diagram(_read_text(args.input))
    if getattr(args, "fact", None):
        source = parse_factorization(_read_text(args.fact))
    return diag, source


def _cmd_check(args: argparse.Namespace) -> int:
    diag, source = _load_diagram(args)
    trans = check_transverse(diag)
    payload: dict = {"transverse": trans.ok}
    lines = [f"transversality: {'ok' if trans.ok else 'FAIL'}"]
    for v in trans.violations:
        lines.append(
            f"  arc {v.arc_index} ({v.color}) segment {v.segment_index}: "
            f"{v.reason} [{v.start} -> {v.end}]"
        )
    ok = trans.ok
    try:
        params = bridge_params(diag)
    except DiagramError as exc:
        payload["params"] = None
        lines.append(f"bridge parameters: unavailable ({exc})")
        ok = False
    else:
        payload["params"] = {
            "b": params.b,
            "c1": params.c1,
            "c2": params.c2,
            "c3": params.c3,
            "s": params.s,
        }
        lines.append(
            f"parameters: (b; c1, c2, c3) = "
            f"({params.b}; {params.c1}, {params.c2}, {params.c3}), s = {params.s}"
        )
    if source is not None:
        links = pairwise_links(diag, source)
        triv = verify_trivial(links, source)
        payload["trivial"] = {
            "L1": triv.l1_ok,
            "L2": triv.l2_ok,
            "L3": triv.l3_ok,
        }
        for name, flag in (("L1", triv.l1_ok), ("L2", triv.l2_ok), ("L3", triv.l3_ok)):
            lines.append(f"triviality {name}: {'ok' if flag else 'FAIL'}")
        ok = ok and triv.ok
    else:
        lines.append("triviality: skipped (no source factorization)")
    payload["ok"] = ok
    lines.append(f"result: {'pass' if ok else 'FAIL'}")
    _emit(args, payload, lines)
    return 0 if ok else 1


def _cmd_invariants(args: argparse.Namespace) -> int:
    diag, source = _load_diagram(args)
    params = bridge_params(diag)
    links = pairwise_links(diag, source) if source is not None else None
    smooth = source.is_smooth_quasipositive() if source is not None else True
    ledger = make_ledger(params, diag.strands, links, smooth=smooth)
    payload = {
        "degree": ledger.degree,
        "genus_expected": ledger.genus_expected,
        "euler_expected": ledger.euler_expected,
        "params": {
            "b": params.b,
            "c1": params.c1,
            "c2": params.c2,
            "c3": params.c3,
            "s": params.s,
        },
        "sl": list(ledger.sl),
        "checks": ledger.checks,
        "ok": ledger.all_ok,
    }
    lines = [
        f"degree  d     = {ledger.degree}",
        f"genus         = {ledger.genus_expected}",
        f"euler char    = {ledger.euler_expected}",
        f"params        = ({params.b}; {params.c1}, {params.c2}, {params.c3}), s = {params.s}",
        f"self-linking  = {ledger.sl}",
    ]
    for name, flag in sorted(ledger.checks.items()):
        lines.append(f"check {name}: {'ok' if flag else 'FAIL'}")
    lines.append(f"result: {'pass' if ledger.all_ok else 'FAIL'}")
    _emit(args, payload, lines)
    return 0 if ledger.all_ok else 1


def _cmd_orbit(args: argparse.Namespace) -> int:
    f = _load_factorization(args)
    orbit = hurwitz_orbit(f, args.budget)
    payload = {
        "size": orbit.size,
        "truncated": orbit.truncated,
        "keys": [repr(factorization_key(e)) for e in orbit.elements],
    }
    lines = [
        f"orbit size: {orbit.size}" + (" (truncated at budget)" if orbit.truncated else ""),
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_export(args: argparse.Namespace) -> int:
    diag, _source = _load_diagram(args)
    _write_text(args.output, export_svg(diag))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidshadow",
        description="Quasipositive factorizations of the full twist and their torus shadow diagrams.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def fact_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", help="factorization file ('-' for stdin)")
        p.add_argument("--standard", type=int, metavar="d",
                       help="use the standard factorization on d strands")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    def diag_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", help="diagram file ('-' for stdin)")
        p.add_argument("--fact", help="factorization file for triviality checks")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    fact_input(sub.add_parser("verify", help="validate a factorization against the full twist"))

    p = sub.add_parser("build", help="assemble and stabilize a torus diagram")
    fact_input(p)
    p.add_argument("-o", "--output", help="diagram file ('-' or omit for stdout)")

    diag_input(sub.add_parser("check", help="transversality, parameters and triviality"))
    diag_input(sub.add_parser("invariants", help="numerical invariant ledger"))

    p = sub.add_parser("orbit", help="enumerate the Hurwitz orbit")
    fact_input(p)
    p.add_argument("--budget", type=int, default=1000, help="node budget (default 1000)")

    p = sub.add_parser("export", help="render a diagram to SVG")
    diag_input(p)
    p.add_argument("-o", "--output", help="SVG file ('-' or omit for stdout)")
    return parser


_COMMANDS = {
    "verify": _cmd_verify,
    "build": _cmd_build,
    "check": _cmd_check,
    "invariants": _cmd_invariants,
    "orbit": _cmd_orbit,
    "export": _cmd_export,
}


def run_cli(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.verb](args)
    except (DocumentError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BraidError, DiagramError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
