"""Command-line entry point.

Exit codes: 0 success (or verdicts match the expected table), 1 verification
failure, 2 usage error.  ``CROSSBRAID_VERBOSITY`` (0-2) only controls how much
progress is logged to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .braiding import EXPECTED_VERDICTS, braidability_report
from .crossed import (
    PRESET_NAMES,
    preset,
    testset,
    validate_datum,
    verify_associator_morphisms,
    verify_pentagon,
    verify_unit_coherence,
)
from .hopf_core import (
    enumerate_characters,
    enumerate_grouplikes,
    verify_antipode,
    verify_antipode_antimultiplicative,
    verify_bialgebra_axioms,
    verify_cqt,
    verify_qt,
)
from .morphisms import enumerate_bigalois_isos
from .reports import Report
from .supergroup import build_iota, build_supergroup, standard_r_form, standard_r_matrix

log = logging.getLogger("crossbraid")

VERBOSITY_ENV = "CROSSBRAID_VERBOSITY"
EXPECTED_TABLE_VERSION = 1


class UsageError(Exception):
    pass


def _configure_logging() -> None:
    raw = os.environ.get(VERBOSITY_ENV, "0")
    try:
        level = int(raw)
    except ValueError:
        level = 0
    logging.basicConfig(
        stream=sys.stderr,
        format="%(levelname)s %(message)s",
        level={0: logging.WARNING, 1: logging.INFO}.get(level, logging.DEBUG),
    )


def _emit(args, text: str, doc) -> None:
    out = json.dumps(doc, indent=2, ensure_ascii=False) + "\n" if args.format == "json" else text.rstrip("\n") + "\n"
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)


def _supergroup(args):
    if args.n < 1:
        raise UsageError(f"--n must be at least 1, got {args.n}")
    return build_supergroup(args.n)


def _render_reports(reports: list[Report]) -> str:
    return "\n".join(r.render_text() for r in reports)


# ---------------------------------------------------------------------------
# commands


def cmd_verify_hopf(args) -> int:
    h = _supergroup(args)
    log.info("verifying H(%d), dimension %d", args.n, h.dim)
    reports = [
        verify_bialgebra_axioms(h),
        verify_antipode(h),
        verify_antipode_antimultiplicative(h),
        verify_qt(h, standard_r_matrix(args.n)),
        verify_cqt(h, standard_r_form(args.n)),
    ]
    ok = all(r.ok for r in reports)
    _emit(args, _render_reports(reports), {"n": args.n, "dim": h.dim, "ok": ok, "reports": [r.to_dict() for r in reports]})
    return 0 if ok else 1


def cmd_verify_category(args) -> int:
    _supergroup(args)
    p = preset(args.preset_name, args.n)
    d = p.datum
    reports = [validate_datum(d)]
    if not p.instantiable:
        msg = f"{p.name}: biGalois object at grade u is U0, not H; tensor products cannot be instantiated"
        _emit(args, _render_reports(reports) + f"\nrefused: {msg}\n",
              {"preset": p.name, "ok": False, "refused": msg, "reports": [r.to_dict() for r in reports]})
        return 1
    objs = testset(d, args.testset)
    log.info("pentagon on %d objects", len(objs))
    reports.append(verify_pentagon(d, objs, args.parse))
    reports.append(verify_associator_morphisms(d, objs, args.parse))
    reports.append(verify_unit_coherence(d, objs))
    ok = all(r.ok for r in reports)
    _emit(args, _render_reports(reports),
          {"preset": p.name, "testset": args.testset, "parse": args.parse, "ok": ok, "reports": [r.to_dict() for r in reports]})
    return 0 if ok else 1


def _verdict_line(v) -> str:
    expected = EXPECTED_VERDICTS[v.preset]
    cert = v.certificate
    if "violation" in cert:
        viol = cert["violation"]
        wit = viol["witness"]
        where = wit["at"] if "at" in wit else ", ".join(f"{k}={v}" for k, v in wit.items())
        why = f"{viol['condition']} at {where}"
    else:
        why = f"candidate {cert['candidate']['label']}, hexagons ok"
    mark = "" if v.verdict == expected else f"  (expected {expected})"
    return f"{v.preset:<16} {v.verdict:<14} {why}{mark}"


def cmd_report(args) -> int:
    names = args.preset or list(PRESET_NAMES)
    _supergroup(args)
    verdicts = []
    for name in names:
        log.info("braidability report for %s", name)
        verdicts.append(braidability_report(name, args.testset, exploratory=not args.no_exploratory, n=args.n))
    mismatches = [v.preset for v in verdicts if v.verdict != EXPECTED_VERDICTS[v.preset]]
    doc = {
        "expected_table_version": EXPECTED_TABLE_VERSION,
        "testset": args.testset,
        "verdicts": [v.to_dict() for v in verdicts],
        "matches_expected": not mismatches,
        "mismatches": mismatches,
    }
    lines = [_verdict_line(v) for v in verdicts]
    lines.append("all verdicts match the expected table" if not mismatches else f"mismatch: {', '.join(mismatches)}")
    _emit(args, "\n".join(lines), doc)
    return 0 if not mismatches else 1


def _label_of(n: int):
    iota = build_iota(n)

    def label(m):
        if m.is_identity():
            return "id"
        if m == iota:
            return "ι"
        return ""

    return label


def cmd_enumerate_isos(args) -> int:
    h = _supergroup(args)
    try:
        g = {h.index(args.twist): 1}
    except (KeyError, ValueError):
        raise UsageError(f"unknown grouplike label {args.twist!r}") from None
    if not any(gl == g for gl in enumerate_grouplikes(h)):
        raise UsageError(f"{args.twist!r} is not a grouplike of H({args.n})")
    maps = enumerate_bigalois_isos(h, g, _label_of(args.n))
    lines = [f"bicomodule algebra isomorphisms H^{args.twist} -> H: {len(maps)}"]
    for m in maps:
        images = ", ".join(f"{h.labels[i]} -> {h.format_element(m.matrix.column(i))}" for i in range(h.dim))
        lines.append(f"  {m.label or '?'}: {images}")
    _emit(args, "\n".join(lines), {"twist": args.twist, "count": len(maps), "maps": [m.to_dict() for m in maps]})
    return 0


def cmd_enumerate_grouplikes(args) -> int:
    h = _supergroup(args)
    gls = [h.format_element(g) for g in enumerate_grouplikes(h)]
    chars = [[str(v) for v in c] for c in enumerate_characters(h)]
    lines = ["grouplikes: " + ", ".join(gls), f"characters: {len(chars)}"]
    lines += ["  " + ", ".join(f"{h.labels[i]}:{v}" for i, v in enumerate(c) if v != "0") for c in chars]
    _emit(args, "\n".join(lines), {"n": args.n, "grouplikes": gls, "characters": chars})
    return 0


def cmd_export_hopf(args) -> int:
    h = _supergroup(args)
    Path(args.path).write_text(h.to_json() + "\n", encoding="utf-8")
    _emit(args, f"wrote H({args.n}) to {args.path}", {"n": args.n, "path": args.path})
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="number of exterior generators (default 2)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", help="write to this file instead of stdout")
    common.add_argument("--testset", choices=("default", "minimal", "extended"), default="default")

    parser = argparse.ArgumentParser(prog="crossbraid", description="Verify crossed-product categories over H(n).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-hopf", parents=[common], help="Hopf, QT and CQT axioms of H(n)")
    p.set_defaults(func=cmd_verify_hopf)

    p = sub.add_parser("verify-category", parents=[common], help="datum, pentagon and associator checks for a preset")
    p.add_argument("preset_name", choices=PRESET_NAMES, metavar="preset")
    p.add_argument("--parse", choices=("coherent", "literal", "no-parity"), default="coherent")
    p.set_defaults(func=cmd_verify_category)

    p = sub.add_parser("braidability-report", parents=[common], help="braidability verdicts for the presets")
    p.add_argument("--preset", action="append", choices=PRESET_NAMES, help="restrict to this preset (repeatable)")
    p.add_argument("--no-exploratory", action="store_true", help="skip the exploratory section")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("enumerate-isos", parents=[common], help="bicomodule algebra isomorphisms H^g -> H")
    p.add_argument("--twist", default="1", help="grouplike label g (default 1)")
    p.set_defaults(func=cmd_enumerate_isos)

    p = sub.add_parser("enumerate-grouplikes", parents=[common], help="grouplikes and characters of H(n)")
    p.set_defaults(func=cmd_enumerate_grouplikes)

    p = sub.add_parser("export-hopf", parents=[common], help="write the HopfData JSON of H(n)")
    p.add_argument("path")
    p.set_defaults(func=cmd_export_hopf)
    return parser


def main(argv=None) -> int:
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"crossbraid: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
