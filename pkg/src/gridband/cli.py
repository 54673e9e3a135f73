"""Command-line interface: ``gridband <subcommand> ...``.

Exit codes: 0 success, 1 invalid input or configuration, 2 replay mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bands import BandMove, apply_band, enumerate_bands
from .grid import GridDiagram, crossing_count, parse, serialize
from .knots import UNKNOWN, UnknownName, default_table, identify
from .scramble import ScramblePolicy, SimplifyPolicy, histogram_csv, scramble, simplify, size_stats
from .explore import (
    EXPLORE_SCRAMBLE,
    AdjacencyReport,
    ExploreConfig,
    Witness,
    adjacency_csv,
    cosmetic_stats,
    cosmetic_table_text,
    explore,
    read_witnesses,
    replay,
    resolve_jobs,
)

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2


class _Fail(Exception):
    pass


def _read_grid(args) -> GridDiagram:
    if getattr(args, "knot", None):
        return default_table()[args.knot].seed
    if not args.infile:
        raise _Fail("give --in FILE (or - for stdin) or --knot NAME")
    text = sys.stdin.read() if args.infile == "-" else Path(args.infile).read_text()
    return parse(text)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _weights(text: str | None) -> dict:
    if not text:
        return ScramblePolicy().weights
    return {k: float(v) for k, v in (kv.split("=") for kv in text.split(","))}


def cmd_scramble(args) -> int:
    g = _read_grid(args)
    p = ScramblePolicy(moves=args.moves, max_size=args.cap, weights=_weights(args.weights),
                       rng_seed=args.seed)
    _emit(serialize(scramble(g, p)) + "\n", args.out)
    return EXIT_OK


def cmd_simplify(args) -> int:
    g = _read_grid(args)
    p = SimplifyPolicy(rounds=args.rounds, shuffle_moves=args.shuffle, patience=args.patience)
    h = simplify(g, p, rng=args.seed)
    print(f"size {g.n} -> {h.n}", file=sys.stderr)
    _emit(serialize(h) + "\n", args.out)
    return EXIT_OK


def cmd_identify(args) -> int:
    print(identify(_read_grid(args), rng=args.seed))
    return EXIT_OK


def cmd_bands(args) -> int:
    g = _read_grid(args)
    if args.apply:
        m = BandMove.from_dict(json.loads(args.apply))
        _emit(serialize(apply_band(g, m)) + "\n", args.out)
        return EXIT_OK
    moves = enumerate_bands(g, args.kind)
    _emit("".join(m.to_json() + "\n" for m in moves), args.out)
    return EXIT_OK


def cmd_explore(args) -> int:
    table = default_table()
    policy = ScramblePolicy(max_size=args.cap, weights=_weights(args.weights))
    c = ExploreConfig(classes=tuple(args.knot or ()), scrambles_per_seed=args.scrambles,
                      moves_per_scramble=args.moves, scramble_policy=policy,
                      jobs=resolve_jobs(args.jobs), base_seed=args.seed)
    sink = open(args.witnesses, "w") if args.witnesses else None
    try:
        report = explore(c, table, on_witness=(lambda w: sink.write(w.to_json() + "\n")) if sink else None)
    finally:
        if sink:
            sink.close()
    _emit(report.to_json(table), args.out)
    if args.csv:
        Path(args.csv).write_text(adjacency_csv(report))
    if args.out:
        print(f"{sum(report.samples.values())} bands, {len(report.pairs())} pairs, "
              f"{report.unknown_events} unknown", file=sys.stderr)
    return EXIT_OK


def cmd_stats(args) -> int:
    if args.report:
        report = AdjacencyReport.from_dict(json.loads(Path(args.report).read_text()))
        if args.csv:
            _emit(adjacency_csv(report), args.out)
        else:
            _emit(cosmetic_table_text(cosmetic_stats(report)), args.out)
        return EXIT_OK
    if not args.knot:
        raise _Fail("stats needs --report FILE or --knot NAME")
    seed = default_table()[args.knot].seed
    p = ScramblePolicy(moves=args.moves, max_size=args.cap)
    grids = [scramble(seed, ScramblePolicy(**{**p.to_dict(), "rng_seed": args.seed ^ k}))
             for k in range(args.scrambles)]
    _emit(histogram_csv(size_stats(grids)), args.out)
    return EXIT_OK


def cmd_replay(args) -> int:
    table = default_table()
    bad = 0
    witnesses = read_witnesses(args.witness)
    for k, w in enumerate(witnesses):
        res = replay(w, table)
        if res.verified:
            print(f"{k}: verified {w.src} -> {w.dst}")
        else:
            bad += 1
            print(f"{k}: mismatch {res.detail}")
    print(f"{len(witnesses) - bad} verified, {bad} mismatched")
    return EXIT_MISMATCH if bad else EXIT_OK


def _grid_input(p):
    p.add_argument("--in", dest="infile", help="grid JSON file, or - for stdin")
    p.add_argument("--knot", help="use the table seed grid of this class")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gridband", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("scramble", help="random Cromwell moves")
    _grid_input(p)
    p.add_argument("--moves", type=int, default=1000)
    p.add_argument("--cap", type=int, default=ScramblePolicy().max_size)
    p.add_argument("--weights", help="e.g. translate=.35,commute=.35,stabilize=.2,destabilize=.1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_scramble)

    p = sub.add_parser("simplify", help="heuristic grid-size reduction")
    _grid_input(p)
    d = SimplifyPolicy()
    p.add_argument("--rounds", type=int, default=d.rounds)
    p.add_argument("--shuffle", type=int, default=d.shuffle_moves)
    p.add_argument("--patience", type=int, default=d.patience)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_simplify)

    p = sub.add_parser("identify", help=f"print the knot class or {UNKNOWN!r}")
    _grid_input(p)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_identify)

    p = sub.add_parser("bands", help="list band moves, or apply one with --apply")
    _grid_input(p)
    p.add_argument("--kind", choices=["coherent", "noncoherent", "all"], default="noncoherent")
    p.add_argument("--apply", help='move JSON, e.g. {"axis": "row", "i": 0, "variant": "ncA"}')
    p.add_argument("--out")
    p.set_defaults(fn=cmd_bands)

    p = sub.add_parser("explore", help="H(2)-adjacency search")
    p.add_argument("--knot", action="append", help="source class (repeatable; default all)")
    p.add_argument("--scrambles", type=int, default=400)
    p.add_argument("--moves", type=int, default=1000)
    p.add_argument("--cap", type=int, default=EXPLORE_SCRAMBLE.max_size)
    p.add_argument("--weights")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="report.json (default stdout)")
    p.add_argument("--witnesses", help="witness JSON Lines output")
    p.add_argument("--csv", help="adjacency CSV output")
    p.set_defaults(fn=cmd_explore)

    p = sub.add_parser("stats", help="cosmetic table or adjacency CSV from a report; size histogram")
    p.add_argument("--report")
    p.add_argument("--csv", action="store_true", help="with --report: adjacency CSV instead")
    p.add_argument("--knot", help="histogram of scrambled sizes for this seed")
    p.add_argument("--scrambles", type=int, default=400)
    p.add_argument("--moves", type=int, default=1000)
    p.add_argument("--cap", type=int, default=ScramblePolicy().max_size)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(fn=cmd_stats)

    p = sub.add_parser("replay", help="verify witnesses")
    p.add_argument("--witness", required=True)
    p.set_defaults(fn=cmd_replay)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (_Fail, ValueError, UnknownName, OSError, KeyError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
