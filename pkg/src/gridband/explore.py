"""H(2)-adjacency search: scramble seeds, apply every non-coherent band, identify.

Work is split into one task per scrambled grid.  Task ``k`` uses the seed
``base_seed ^ k``, so results never depend on how tasks are spread over
worker processes, and the aggregated report is a pure function of the
configuration.
"""

from __future__ import annotations

import csv
import io
import json
import os
import re
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .bands import BandMove, apply_band, enumerate_bands
from .grid import GridDiagram, from_dict, to_dict
from .invariants import CROSSING_CAP
from .knots import DEFAULT_EFFORT, UNKNOWN, KnotTable, data_path, default_table, identify
from .scramble import ScramblePolicy, SimplifyPolicy, scramble

JOBS_ENV = "GRIDBAND_JOBS"

# Cap 20 keeps scrambled grids near n = 20, about 80 non-coherent bands each.
EXPLORE_SCRAMBLE = ScramblePolicy(max_size=20)


def knot_sort_key(name: str):
    """Order names as KnotInfo does: by crossing number, index, then mirror."""
    out = []
    for f in name.split("#"):
        m = re.fullmatch(r"(\d+)_(\d+)(m?)", f)
        out.append((int(m[1]), int(m[2]), m[3]) if m else (10**6, 0, f))
    return (len(out), out) if name != UNKNOWN else (10**6, [])


def _unordered(a: str, b: str) -> tuple[str, str]:
    return (a, b) if knot_sort_key(a) <= knot_sort_key(b) else (b, a)


@dataclass(frozen=True)
class ExploreConfig:
    """Search budget.  An empty ``classes`` means every class of the table."""

    classes: tuple[str, ...] = ()
    scrambles_per_seed: int = 400
    moves_per_scramble: int = 1000
    scramble_policy: ScramblePolicy = EXPLORE_SCRAMBLE
    effort: tuple[SimplifyPolicy, ...] = DEFAULT_EFFORT
    max_crossings: int = CROSSING_CAP
    jobs: int = 1
    base_seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))
        object.__setattr__(self, "effort", tuple(self.effort))
        if self.scrambles_per_seed <= 0 or self.moves_per_scramble <= 0:
            raise ValueError("scramble counts must be positive")
        if self.jobs <= 0:
            raise ValueError("jobs must be positive")
        if self.max_crossings <= 0 or not self.effort:
            raise ValueError("identification effort must be non-empty with a positive crossing cap")
        if not 0 <= self.base_seed < 2**64:
            raise ValueError("base_seed must be a 64-bit unsigned integer")

    def resolve(self, table: KnotTable) -> tuple[str, ...]:
        if not self.classes:
            return tuple(table.names)
        missing = [c for c in self.classes if c not in table]
        if missing:
            raise ValueError(f"unknown classes {missing}")
        return self.classes

    def meta(self, table: KnotTable) -> dict:
        """Configuration as recorded in a report.  ``jobs`` is left out on purpose."""
        from . import __version__
        p = self.scramble_policy
        return {
            "classes": list(self.resolve(table)),
            "scrambles_per_seed": self.scrambles_per_seed,
            "moves_per_scramble": self.moves_per_scramble,
            "scramble": {"max_size": p.max_size, "weights": dict(p.weights)},
            "effort": [e.to_dict() for e in self.effort],
            "max_crossings": self.max_crossings,
            "seed": self.base_seed,
            "versions": {"gridband": __version__},
        }


@dataclass(frozen=True)
class Witness:
    src: str
    grid: GridDiagram
    move: BandMove
    dst: str
    seed: int
    task: int

    def to_dict(self) -> dict:
        return {"src": self.src, "grid": to_dict(self.grid), "move": self.move.to_dict(),
                "dst": self.dst, "seed": self.seed, "task": self.task}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "Witness":
        return cls(str(d["src"]), from_dict(d["grid"]), BandMove.from_dict(d["move"]),
                   str(d["dst"]), int(d["seed"]), int(d["task"]))

    @classmethod
    def from_json(cls, line: str) -> "Witness":
        return cls.from_dict(json.loads(line))


@dataclass
class AdjacencyReport:
    targets: dict[str, Counter] = field(default_factory=dict)
    samples: Counter = field(default_factory=Counter)
    unknown: Counter = field(default_factory=Counter)
    meta: dict = field(default_factory=dict)

    def add(self, src: str, dst: str) -> None:
        self.samples[src] += 1
        if dst == UNKNOWN:
            self.unknown[src] += 1
        else:
            self.targets.setdefault(src, Counter())[dst] += 1

    @property
    def unknown_events(self) -> int:
        return sum(self.unknown.values())

    def pairs(self) -> list[tuple[str, str, int]]:
        """Unordered distance-one pairs with event counts, (a, b) and (b, a) merged."""
        acc: Counter = Counter()
        for src, cnt in self.targets.items():
            for dst, k in cnt.items():
                acc[_unordered(src, dst)] += k
        return [(a, b, acc[(a, b)])
                for a, b in sorted(acc, key=lambda p: (knot_sort_key(p[0]), knot_sort_key(p[1])))]

    def neighbours(self, name: str) -> set[str]:
        return {b if a == name else a for a, b, _ in self.pairs() if name in (a, b)}

    def to_dict(self, table: KnotTable | None = None) -> dict:
        table = table or default_table()
        srcs = sorted(self.samples, key=knot_sort_key)
        return {
            "meta": self.meta,
            "pairs": [{"a": a, "b": b, "count": k} for a, b, k in self.pairs()],
            "cosmetic": [{"class": r.name, "occ": r.occurrences, "sample": r.sample}
                         for r in cosmetic_stats(self, table)],
            "unknown_events": self.unknown_events,
            "sources": {s: {"sample": self.samples[s], "unknown": self.unknown[s],
                            "targets": {d: self.targets.get(s, Counter())[d]
                                        for d in sorted(self.targets.get(s, {}), key=knot_sort_key)}}
                        for s in srcs},
        }

    def to_json(self, table: KnotTable | None = None) -> str:
        return json.dumps(self.to_dict(table), indent=1) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "AdjacencyReport":
        r = cls(meta=d.get("meta", {}))
        for src, rec in d.get("sources", {}).items():
            r.samples[src] = rec["sample"]
            if rec.get("unknown"):
                r.unknown[src] = rec["unknown"]
            if rec["targets"]:
                r.targets[src] = Counter(rec["targets"])
        return r


@dataclass(frozen=True)
class CosmeticRow:
    name: str
    probability: float
    occurrences: int
    sample: int

    @property
    def rounded(self) -> float:
        return round_probability(self.probability)


def round_probability(p: float) -> float:
    """Three decimals, or two significant figures when that would round to zero."""
    if p == 0:
        return 0.0
    r = round(p, 3)
    if r:
        return r
    return float(f"{p:.2g}")


def cosmetic_stats(r: AdjacencyReport, table: KnotTable | None = None) -> list[CosmeticRow]:
    """Chirally cosmetic band frequency for every chiral source class of ``r``."""
    table = table or default_table()
    rows = []
    for src in sorted(r.samples, key=knot_sort_key):
        if table[src].amphichiral:
            continue
        occ = r.targets.get(src, Counter())[table.mirror_of(src)]
        n = r.samples[src]
        rows.append(CosmeticRow(src, occ / n if n else 0.0, occ, n))
    return rows


def cosmetic_table_text(rows: Sequence[CosmeticRow]) -> str:
    lines = ["class,probability,occurrences,sample"]
    lines += [f"{c.name},{c.rounded},{c.occurrences},{c.sample}" for c in rows]
    return "\n".join(lines) + "\n"


def adjacency_csv(r: AdjacencyReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["class_a", "class_b", "count"])
    w.writerows(r.pairs())
    return buf.getvalue()


@dataclass(frozen=True)
class _Task:
    src: str
    seed_grid: GridDiagram
    index: int
    seed: int
    policy: ScramblePolicy
    effort: tuple
    max_crossings: int


@dataclass(frozen=True)
class _TaskResult:
    src: str
    index: int
    seed: int
    grid: GridDiagram
    events: tuple  # (BandMove, target name)


_worker_table: KnotTable | None = None


def _init_worker(table):
    global _worker_table
    _worker_table = table


def _run_task(t: _Task) -> _TaskResult:
    table = _worker_table or default_table()
    g = scramble(t.seed_grid, t.policy)
    events = []
    for m in enumerate_bands(g, "noncoherent"):
        dst = identify(apply_band(g, m), table, effort=t.effort, rng=0,
                       max_crossings=t.max_crossings)
        events.append((m, dst))
    return _TaskResult(t.src, t.index, t.seed, g, tuple(events))


def _tasks(c: ExploreConfig, table: KnotTable) -> Iterator[_Task]:
    p = c.scramble_policy
    index = 0
    for name in c.resolve(table):
        seed_grid = table[name].seed
        for _ in range(c.scrambles_per_seed):
            seed = c.base_seed ^ index
            policy = ScramblePolicy(moves=c.moves_per_scramble, max_size=p.max_size,
                                    weights=dict(p.weights), rng_seed=seed)
            yield _Task(name, seed_grid, index, seed, policy, c.effort, c.max_crossings)
            index += 1


def explore(c: ExploreConfig, table: KnotTable | None = None,
            on_witness: Callable[[Witness], None] | None = None) -> AdjacencyReport:
    """Run the search.  ``on_witness`` receives every identified band event.

    Results are merged in task order by this (single) caller, so the report
    and the witness stream are identical for every ``jobs`` value.
    """
    table = table or default_table()
    report = AdjacencyReport(meta=c.meta(table))
    tasks = list(_tasks(c, table))
    if c.jobs == 1:
        _init_worker(table)
        try:
            results: Iterable[_TaskResult] = map(_run_task, tasks)
            _merge(report, results, on_witness)
        finally:
            _init_worker(None)
    else:
        with ProcessPoolExecutor(c.jobs, initializer=_init_worker, initargs=(table,)) as ex:
            _merge(report, ex.map(_run_task, tasks, chunksize=1), on_witness)
    return report


def _merge(report, results, on_witness):
    for res in results:
        for m, dst in res.events:
            report.add(res.src, dst)
            if dst != UNKNOWN and on_witness is not None:
                on_witness(Witness(res.src, res.grid, m, dst, res.seed, res.index))


def resolve_jobs(requested: int) -> int:
    env = os.environ.get(JOBS_ENV)
    if env:
        try:
            jobs = int(env)
        except ValueError:
            raise ValueError(f"{JOBS_ENV} must be an integer, got {env!r}") from None
        if jobs <= 0:
            raise ValueError(f"{JOBS_ENV} must be positive")
        return jobs
    return requested


@dataclass(frozen=True)
class ReplayResult:
    verified: bool
    source: str
    target: str
    detail: str = ""


def replay(w: Witness, table: KnotTable | None = None,
           effort: Sequence[SimplifyPolicy] = DEFAULT_EFFORT,
           max_crossings: int = CROSSING_CAP) -> ReplayResult:
    """Re-run a witness: identify its grid, apply its band, identify the result."""
    table = table or default_table()
    src = identify(w.grid, table, effort=effort, rng=0, max_crossings=max_crossings)
    dst = identify(apply_band(w.grid, w.move), table, effort=effort, rng=0,
                   max_crossings=max_crossings)
    problems = []
    if src != w.src:
        problems.append(f"source identifies as {src}, witness says {w.src}")
    if dst != w.dst:
        problems.append(f"target identifies as {dst}, witness says {w.dst}")
    return ReplayResult(not problems, src, dst, "; ".join(problems))


def read_witnesses(path) -> list[Witness]:
    with open(path) as fh:
        return [Witness.from_json(line) for line in fh if line.strip()]


def load_published_adjacency() -> dict:
    with open(data_path("h2_adjacency.json")) as fh:
        return json.load(fh)


def published_neighbours(name: str, table: KnotTable | None = None) -> set[str]:
    """Published distance-one neighbours of ``name``.

    Rows of mirror classes are derived by mirroring every entry.  An
    amphichiral knot's row is closed under mirroring, since the mirror of a
    band from it is again a band from it.
    """
    table = table or default_table()
    rows = load_published_adjacency()["rows"]
    if name in rows:
        out = set(rows[name])
    elif table.mirror_of(name) in rows:
        out = {table.mirror_of(x) for x in rows[table.mirror_of(name)]}
    else:
        raise KeyError(f"no published row for {name}")
    if table[name].amphichiral:
        out |= {table.mirror_of(x) for x in out}
    return out
