"""Command-line interface.

Subcommands: generate, graph, invariants, verify, perfect.
Exit codes: 0 all good / all match, 1 mismatch or certificate found,
2 usage or parse error, 3 search budget made the result inconclusive.
The verify report path writes a PNG figure next to the CSV unless told
not to; EPG_SIZE_CAP overrides the group-order cap.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .epg import enhanced_power_graph, group_graph_dot, power_graph
from .errors import (
    BudgetExceededError,
    EpgraphError,
    SpecParseError,
)
from .graphs import load_edge_list, save_edge_list
from .groups import DEFAULT_SIZE_CAP, build_group, parse_spec, save_cayley_text
from .harness import (
    CHECK_NAMES,
    SWEEP_FAMILIES,
    SweepConfig,
    abelian_sweep_specs,
    formula_report,
    oracle_report,
    run_sweep,
    verify_spec,
)
from .invariants import (
    DEFAULT_HOLE_MAX_LEN,
    DEFAULT_NODE_BUDGET,
    find_odd_antihole,
    find_odd_hole,
)
from .report import VERDICT_MATCH, VERDICT_MISMATCH, rows_to_csv

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


def _size_cap() -> int:
    raw = os.environ.get("EPG_SIZE_CAP")
    if not raw:
        return DEFAULT_SIZE_CAP
    try:
        return int(raw)
    except ValueError as exc:
        raise SpecParseError(f"EPG_SIZE_CAP must be an integer, got {raw!r}") from exc


def _write_out(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise SpecParseError(f"range must look like 'lo..hi', got {text!r}")
    try:
        return range(int(lo), int(hi) + 1)
    except ValueError as exc:
        raise SpecParseError(f"range bounds must be integers, got {text!r}") from exc


def _parse_checks(text: str | None) -> tuple[str, ...]:
    if not text:
        return CHECK_NAMES
    names = tuple(t.strip() for t in text.split(",") if t.strip())
    bad = set(names) - set(CHECK_NAMES)
    if bad:
        raise SpecParseError(f"unknown checks {sorted(bad)}; valid: {', '.join(CHECK_NAMES)}")
    return names


def cmd_generate(args) -> int:
    group = build_group(parse_spec(args.spec), size_cap=_size_cap())
    import io

    buf = io.StringIO()
    save_cayley_text(group, buf)
    _write_out(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_graph(args) -> int:
    group = build_group(parse_spec(args.spec), size_cap=_size_cap())
    lg = enhanced_power_graph(group) if args.kind == "enhanced" else power_graph(group)
    if args.format == "edges":
        import io

        buf = io.StringIO()
        save_edge_list(lg.graph, buf)
        _write_out(buf.getvalue(), args.out)
    elif args.format == "dot":
        _write_out(group_graph_dot(lg), args.out)
    else:  # png
        if args.out is None:
            raise SpecParseError("--format png needs --out")
        from .plotting import save_graph_figure

        save_graph_figure(lg.graph, args.out, labels=group.elem_names,
                          title=f"{lg.kind} power graph of {group.label}")
    return EXIT_OK


def cmd_invariants(args) -> int:
    spec = parse_spec(args.spec)
    checks = _parse_checks(args.checks)
    pieces = []
    code = EXIT_OK
    if args.source in ("formula", "both"):
        pieces.append(formula_report(spec).to_kv_text())
    if args.source in ("oracle", "both"):
        rep = oracle_report(spec, checks=checks, budget=args.budget,
                            size_cap=_size_cap(), with_clique=True,
                            with_perfect=True, max_len=args.max_len)
        pieces.append(rep.to_kv_text())
    if args.source == "both":
        rows = verify_spec(spec, checks=checks, budget=args.budget, size_cap=_size_cap())
        pieces.append(rows_to_csv(rows))
        if any(r.verdict == VERDICT_MISMATCH for r in rows):
            code = EXIT_MISMATCH
        elif any(r.verdict not in (VERDICT_MATCH, VERDICT_MISMATCH) for r in rows):
            code = EXIT_INCONCLUSIVE
    _write_out("\n".join(pieces), args.out)
    return code


def cmd_verify(args) -> int:
    family = {"genq": "gen_quaternion"}.get(args.spec, args.spec)
    if family not in SWEEP_FAMILIES:
        raise SpecParseError(
            f"verify sweeps need a family tag from {SWEEP_FAMILIES}, got {args.spec!r}")
    rng = _parse_range(args.range)
    if family == "abelian":
        params = abelian_sweep_specs(rng.stop - 1, min_order=rng.start)
    else:
        params = list(rng)
    cfg = SweepConfig(family=family, params=params, checks=_parse_checks(args.checks),
                      max_len=args.max_len, budget=args.budget, out=args.out,
                      jobs=args.jobs, size_cap=_size_cap())
    rows = run_sweep(cfg)
    csv_text = rows_to_csv(rows)
    _write_out(csv_text, args.out)
    if args.out and not args.no_figure:
        from .plotting import save_verification_figure

        fig_path = str(Path(args.out).with_suffix(".png"))
        save_verification_figure(rows, fig_path, title=f"{args.spec} {args.range}")
    mismatches = sum(r.verdict == VERDICT_MISMATCH for r in rows)
    skipped = sum(r.verdict not in (VERDICT_MATCH, VERDICT_MISMATCH) for r in rows)
    print(f"{len(rows)} rows, {mismatches} mismatches, {skipped} skipped", file=sys.stderr)
    if mismatches:
        return EXIT_MISMATCH
    return EXIT_INCONCLUSIVE if skipped else EXIT_OK


def cmd_perfect(args) -> int:
    if (args.spec is None) == (args.edges is None):
        raise SpecParseError("perfect needs exactly one of --spec or --edges")
    if args.spec:
        group = build_group(parse_spec(args.spec), size_cap=_size_cap())
        graph = enhanced_power_graph(group).graph
        label = group.label
    else:
        with open(args.edges) as fh:
            graph = load_edge_list(fh)
        label = args.edges
    inconclusive = False
    try:
        hole = find_odd_hole(graph, max_len=args.max_len, budget=args.budget)
    except BudgetExceededError:
        hole, inconclusive = None, True
    if hole:
        print(f"{label}: odd-hole-found length={len(hole)} vertices={hole}")
        return EXIT_MISMATCH
    try:
        antihole = find_odd_antihole(graph, max_len=args.max_len, budget=args.budget)
    except BudgetExceededError:
        antihole, inconclusive = None, True
    if antihole:
        print(f"{label}: odd-antihole-found length={len(antihole)} vertices={antihole}")
        return EXIT_MISMATCH
    if inconclusive:
        print(f"{label}: inconclusive (budget exceeded before exhausting length {args.max_len})")
        return EXIT_INCONCLUSIVE
    print(f"{label}: perfect-up-to-bound max_len={args.max_len}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="epgraph",
        description="Enhanced power graphs of finite groups: construction, "
                    "exact invariants, and formula verification.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a Cayley table for a group spec")
    p.add_argument("--spec", required=True, help="e.g. dihedral:3 or abelian:2^2,2")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("graph", help="export the power / enhanced power graph")
    p.add_argument("--spec", required=True)
    p.add_argument("--kind", choices=("power", "enhanced"), default="enhanced")
    p.add_argument("--format", choices=("edges", "dot", "png"), default="edges")
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("invariants", help="invariant report for one group")
    p.add_argument("--spec", required=True)
    p.add_argument("--source", choices=("oracle", "formula", "both"), default="both")
    p.add_argument("--checks", help="comma-separated subset of " + ",".join(CHECK_NAMES))
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--max-len", type=int, default=DEFAULT_HOLE_MAX_LEN)
    p.add_argument("--out")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="sweep a family and diff formulas vs oracles")
    p.add_argument("--spec", required=True,
                   help="family tag: cyclic|dihedral|semidihedral|u6n|genq|abelian")
    p.add_argument("--range", required=True, help="inclusive parameter range lo..hi "
                   "(group order range for abelian)")
    p.add_argument("--checks")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--max-len", type=int, default=DEFAULT_HOLE_MAX_LEN)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="CSV path; a PNG summary lands beside it")
    p.add_argument("--no-figure", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("perfect", help="bounded odd hole / antihole search")
    p.add_argument("--spec")
    p.add_argument("--edges", help="edge-list file to scan instead of a group spec")
    p.add_argument("--max-len", type=int, default=DEFAULT_HOLE_MAX_LEN)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_perfect)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except EpgraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
