"""Random scrambling and heuristic simplification of grid diagrams.

Both walks use only knot-type preserving moves.  Simplification alternates
greedy destabilization with random commutations; it never increases the grid
size but is not guaranteed to reach the grid number.  All randomness comes
from an explicitly seeded :class:`random.Random`.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .grid import GridDiagram, crossing_count
from .moves import CORNERS, commutable, destab_arrays, destab_sites, destab_sites_at, stab_arrays


@dataclass(frozen=True)
class ScramblePolicy:
    moves: int = 1000
    max_size: int = 30
    weights: dict = field(default_factory=lambda: {
        "translate": 0.35, "commute": 0.35, "stabilize": 0.2, "destabilize": 0.1})
    rng_seed: int = 0

    def __post_init__(self):
        unknown = set(self.weights) - {"translate", "commute", "stabilize", "destabilize"}
        if unknown:
            raise ValueError(f"unknown move kinds {sorted(unknown)}")
        if any(w < 0 for w in self.weights.values()) or not any(self.weights.values()):
            raise ValueError("weights must be non-negative and not all zero")
        if self.moves < 0:
            raise ValueError("moves must be non-negative")

    def to_dict(self) -> dict:
        return {"moves": self.moves, "max_size": self.max_size,
                "weights": dict(self.weights), "rng_seed": self.rng_seed}

    @classmethod
    def from_dict(cls, data: dict) -> "ScramblePolicy":
        return cls(**data)


@dataclass(frozen=True)
class SimplifyPolicy:
    rounds: int = 200
    shuffle_moves: int = 50
    patience: int = 20

    def __post_init__(self):
        if min(self.rounds, self.shuffle_moves, self.patience) <= 0:
            raise ValueError("simplify policy fields must be positive")

    def to_dict(self) -> dict:
        return {"rounds": self.rounds, "shuffle_moves": self.shuffle_moves, "patience": self.patience}

    @classmethod
    def from_dict(cls, data: dict) -> "SimplifyPolicy":
        return cls(**data)


def make_rng(seed: int | random.Random | None) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(seed & 0xFFFFFFFFFFFFFFFF if seed is not None else None)


class _Work:
    """Mutable grid state for the inner loops (lists plus inverse permutations)."""

    __slots__ = ("n", "xs", "os", "xr", "orow")

    def __init__(self, xs, os):
        self.load(list(xs), list(os))

    def load(self, xs, os):
        self.n = len(xs)
        self.xs, self.os = xs, os
        self.xr = [0] * self.n
        self.orow = [0] * self.n
        for r in range(self.n):
            self.xr[xs[r]] = r
            self.orow[os[r]] = r

    def grid(self) -> GridDiagram:
        return GridDiagram._unchecked(self.xs, self.os)

    def translate(self, axis, k):
        n = self.n
        if axis:
            self.load([(c + k) % n for c in self.xs], [(c + k) % n for c in self.os])
        else:
            self.load(self.xs[-k:] + self.xs[:-k], self.os[-k:] + self.os[:-k])

    def try_commute(self, axis, i) -> bool:
        """Exchange lines ``i, i+1`` if legal; returns whether it happened."""
        n = self.n
        j = i + 1 if i + 1 < n else 0
        if axis == 0:
            xs, os = self.xs, self.os
            if not commutable(xs[i], os[i], xs[j], os[j]):
                return False
            xs[i], xs[j] = xs[j], xs[i]
            os[i], os[j] = os[j], os[i]
            self.xr[xs[i]] = i
            self.xr[xs[j]] = j
            self.orow[os[i]] = i
            self.orow[os[j]] = j
        else:
            xr, orow = self.xr, self.orow
            if not commutable(xr[i], orow[i], xr[j], orow[j]):
                return False
            xr[i], xr[j] = xr[j], xr[i]
            orow[i], orow[j] = orow[j], orow[i]
            self.xs[xr[i]] = i
            self.xs[xr[j]] = j
            self.os[orow[i]] = i
            self.os[orow[j]] = j
        return True

    def sites(self):
        return destab_sites(self.xs, self.os, self.xr, self.orow)

    def sites_near(self, axis, i):
        """Destabilization sites that a commutation at ``(axis, i)`` may have created."""
        n = self.n
        if axis == 0:
            rows = {(i - 1) % n, i, (i + 1) % n, (i + 2) % n}
            for r in (i, (i + 1) % n):
                rows.add(self.orow[self.xs[r]])
                rows.add(self.xr[self.os[r]])
        else:
            rows = set()
            for c in ((i - 1) % n, i, (i + 1) % n, (i + 2) % n):
                rows.add(self.xr[c])
                rows.add(self.orow[c])
        out = []
        for r in rows:
            out.extend(destab_sites_at(self.xs, self.os, self.xr, self.orow, r))
        return out

    def destabilize(self, site):
        self.load(*destab_arrays(self.xs, self.os, site))

    def stabilize(self, row, kind, corner):
        self.load(*stab_arrays(self.xs, self.os, row, kind, corner))

    def greedy_destabilize(self) -> int:
        done = 0
        while self.n > 2:
            s = self.sites()
            if not s:
                break
            self.destabilize(s[0])
            done += 1
        return done


def scramble(g: GridDiagram, p: ScramblePolicy, rng: random.Random | None = None) -> GridDiagram:
    """Random walk of ``p.moves`` Cromwell moves, never exceeding ``p.max_size``."""
    rng = make_rng(p.rng_seed if rng is None else rng)
    w = _Work(g.xs, g.os)
    kinds = [k for k in ("translate", "commute", "stabilize", "destabilize") if p.weights.get(k, 0) > 0]
    cum = []
    total = 0.0
    for k in kinds:
        total += p.weights[k]
        cum.append(total)
    cap = max(p.max_size, g.n)
    done = 0
    attempts = 0
    while done < p.moves and attempts < 50 * p.moves + 100:
        attempts += 1
        u = rng.random() * total
        kind = kinds[-1]
        for k, c in zip(kinds, cum):
            if u < c:
                kind = k
                break
        if kind == "translate":
            w.translate(rng.randrange(2), rng.randrange(1, w.n))
        elif kind == "commute":
            if not w.try_commute(rng.randrange(2), rng.randrange(w.n)):
                continue
        elif kind == "stabilize":
            if w.n >= cap:
                continue
            w.stabilize(rng.randrange(w.n), rng.choice("XO"), rng.choice(CORNERS))
        else:
            sites = w.sites() if w.n > 2 else []
            if not sites:
                continue
            w.destabilize(rng.choice(sites))
        done += 1
    return w.grid()


def simplify(g: GridDiagram, p: SimplifyPolicy = SimplifyPolicy(),
             rng: random.Random | int | None = 0, trace: list | None = None) -> GridDiagram:
    """Greedy destabilization interleaved with random commutations.

    ``trace``, if given, receives the grid size after every round.
    """
    rng = make_rng(rng)
    w = _Work(g.xs, g.os)
    w.greedy_destabilize()
    stale = 0
    for _ in range(p.rounds):
        if w.n == 2:
            break
        before = w.n
        for _ in range(p.shuffle_moves):
            if w.n == 2:
                break
            axis = rng.randrange(2)
            i = rng.randrange(w.n)
            if rng.random() < 0.05:
                w.translate(axis, i or 1)
                continue
            if not w.try_commute(axis, i):
                continue
            s = w.sites_near(axis, i)
            if s:
                w.destabilize(s[0])
                w.greedy_destabilize()
        if trace is not None:
            trace.append(w.n)
        if w.n < before:
            stale = 0
        else:
            stale += 1
            if stale >= p.patience:
                break
    return w.grid()


def size_stats(grids: Iterable[GridDiagram]) -> Counter:
    """Histogram ``{(grid_size, crossing_count): count}``."""
    return Counter((g.n, crossing_count(g)) for g in grids)


def histogram_csv(hist: Counter) -> str:
    lines = ["grid_size,crossing_count,count"]
    for (n, c), k in sorted(hist.items()):
        lines.append(f"{n},{c},{k}")
    return "\n".join(lines) + "\n"
