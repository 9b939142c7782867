"""Command-line entry point: ``hecke-clifford {tableaux,psi,verify}``.

Exit codes: 0 when everything checked passes, 1 when a check fails, 2 for
usage errors (bad shape, unknown suite, desk-scale bound exceeded).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from .fusion import PsiCache, cache_filename, psi_summary, psi_tableau
from .suites import DESK_BOUND, SUITES, run_suite
from .tableaux import (
    ShiftedTableau,
    StrictPartition,
    column_tableau,
    enumerate_standard,
    enumerate_strict_partitions,
    reduced_words,
    row_tableau,
    standard_count,
    w_of,
)

CACHE_ENV = "HECKE_CLIFFORD_CACHE"
DEFAULT_CACHE = Path.home() / ".cache" / "hecke-clifford"


class UsageError(Exception):
    pass


def _shape(text: str) -> StrictPartition:
    try:
        return StrictPartition.parse(text)
    except ValueError as exc:
        raise UsageError(f"invalid shape {text!r}: {exc}") from None


def _select(shape: StrictPartition, which: str) -> list[ShiftedTableau]:
    if which == "row":
        return [row_tableau(shape)]
    if which == "column":
        return [column_tableau(shape)]
    tabs = list(enumerate_standard(shape))
    if which == "all":
        return tabs
    try:
        i = int(which)
    except ValueError:
        raise UsageError(f"--which must be row, column, all or an index, got {which!r}") from None
    if not 0 <= i < len(tabs):
        raise UsageError(f"tableau index {i} out of range 0..{len(tabs) - 1}")
    return [tabs[i]]


def _guard(n: int, force: bool) -> None:
    if n > DESK_BOUND and not force:
        raise UsageError(f"n = {n} exceeds the desk-scale bound {DESK_BOUND}; pass --force to run anyway")


def _word(w: Sequence[int]) -> str:
    return "".join(map(str, w)) or "e"


def _tableau_record(tab: ShiftedTableau) -> dict:
    ww, sw = reduced_words(tab)
    return {**tab.to_json(), "w": list(w_of(tab)), "w_word": list(ww), "s_word": list(sw)}


def cmd_tableaux(args: argparse.Namespace) -> int:
    if (args.n is None) == (args.shape is None):
        raise UsageError("give exactly one of --n or --shape")
    shapes = enumerate_strict_partitions(args.n) if args.n is not None else [_shape(args.shape)]
    records = []
    for shape in shapes:
        tabs = _select(shape, args.which)
        records.append({"shape": list(shape.parts), "m": standard_count(shape), "tableaux": [_tableau_record(t) for t in tabs]})
    if args.format == "json":
        print(json.dumps(records, indent=2))
        return 0
    for rec, shape in zip(records, shapes):
        print(f"shape {shape}  m = {rec['m']}")
        for t, r in zip(_select(shape, args.which), rec["tableaux"]):
            print("  " + str(t).replace("\n", "\n  "))
            print(f"    w = {_word(r['w'])}  reduced word {_word(r['w_word'])}  s-word {_word(r['s_word'])}")
    return 0


def _cache_dir(args: argparse.Namespace) -> Path:
    if args.cache_dir:
        return Path(args.cache_dir)
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else DEFAULT_CACHE


def cmd_psi(args: argparse.Namespace) -> int:
    shape = _shape(args.shape)
    _guard(shape.n, args.force)
    cache = None if args.no_cache else PsiCache(_cache_dir(args), verify=not args.no_verify)
    ok = True
    out = []
    for tab in _select(shape, args.which):
        if cache is None:
            psi, cached = psi_tableau(tab), False
        else:
            psi, cached = cache.get(tab)
        summary = psi_summary(tab, psi)
        summary["cached"] = cached
        if cache is not None:
            summary["file"] = str(cache.path(tab))
        ok &= summary["leading_ok"]
        if args.format == "json":
            summary["element"] = json.loads(psi.dumps())
            out.append(summary)
            continue
        print(str(tab))
        if psi.is_scalar():
            print(f"  the element {psi.scalar_value()}")
        else:
            print(f"  terms: {summary['terms']}")
            print(f"  leading term: T_{_word(summary['leading_permutation'])} with coefficient {summary['leading_coefficient']}")
        if cache is not None:
            print(f"  {'read from' if cached else 'written to'} {cache_filename(tab)}")
    if args.format == "json":
        print(json.dumps(out, indent=2))
    return 0 if ok else 1


def cmd_verify(args: argparse.Namespace) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    suite = SUITES[args.suite]
    if args.n < 1:
        raise UsageError("n must be positive")
    if suite.heavy:
        _guard(args.n, args.force)
    report = run_suite(args.suite, args.n, args.seed)
    data = report.to_json()
    if args.output:
        Path(args.output).write_text(json.dumps(data, indent=2) + "\n")
    if args.format == "json":
        print(json.dumps(data, indent=2))
    else:
        print(f"suite {report.suite}  n = {report.n}  seed = {report.seed}")
        for c in report.checks:
            print(f"  [{c.status:>8}] {c.label}  {c.detail}".rstrip())
        tag = "informational" if report.informational else ("PASS" if report.passed else "FAIL")
        print(f"{tag}  ({report.timings['total_seconds']:.2f} s)")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hecke-clifford", description="Exact computations in the Hecke-Clifford superalgebra.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tableaux", help="list strict partitions and shifted tableaux")
    t.add_argument("--n", type=int)
    t.add_argument("--shape", help="comma separated strict partition, e.g. 4,3,1")
    t.add_argument("--which", default="all", help="row, column, all, or an index into the standard tableaux")
    t.add_argument("--format", choices=("text", "json"), default="text")
    t.set_defaults(func=cmd_tableaux)

    s = sub.add_parser("psi", help="compute (and cache) the fused element for a tableau")
    s.add_argument("--shape", required=True)
    s.add_argument("--which", default="row", help="row, column, all, or an index")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--cache-dir", help=f"cache directory (default ${CACHE_ENV} or {DEFAULT_CACHE})")
    s.add_argument("--no-cache", action="store_true")
    s.add_argument("--no-verify", action="store_true", help="skip the numeric cross-check before caching")
    s.add_argument("--force", action="store_true", help=f"allow n > {DESK_BOUND}")
    s.set_defaults(func=cmd_psi)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, help=", ".join(SUITES))
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--output", help="also write the JSON report here")
    v.add_argument("--force", action="store_true", help=f"allow n > {DESK_BOUND}")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
