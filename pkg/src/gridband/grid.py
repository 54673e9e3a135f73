"""Grid diagrams and their link-level semantics.

A grid of size ``n`` is stored as two permutations: ``xs[r]`` is the column of
the X marking in row ``r`` and ``os[r]`` the column of the O marking.  Row 0 is
the bottom row, column 0 the leftmost column.

Conventions used everywhere in the package:

* horizontal segments are oriented from O to X,
* vertical segments are oriented from X to O,
* at every crossing the vertical strand passes over the horizontal one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple, Sequence


class GridError(ValueError):
    """Base class for invalid grid data."""


class NotAPermutation(GridError):
    pass


class SquareCollision(GridError):
    pass


class TooSmall(GridError):
    pass


class NotAKnot(GridError):
    pass


class MultiComponent(GridError):
    """An unoriented trace did not visit every marking in one cycle."""


@dataclass(frozen=True)
class GridDiagram:
    xs: tuple[int, ...]
    os: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "xs", tuple(int(v) for v in self.xs))
        object.__setattr__(self, "os", tuple(int(v) for v in self.os))
        _check(self.xs, self.os)

    @classmethod
    def _unchecked(cls, xs, os) -> "GridDiagram":
        g = object.__new__(cls)
        object.__setattr__(g, "xs", tuple(xs))
        object.__setattr__(g, "os", tuple(os))
        return g

    @property
    def n(self) -> int:
        return len(self.xs)

    def x_rows(self) -> list[int]:
        """Inverse permutation: row of the X marking in each column."""
        return _inverse(self.xs)

    def o_rows(self) -> list[int]:
        return _inverse(self.os)

    def markers(self) -> list[tuple[int, int, str]]:
        """All markings as ``(row, col, kind)`` triples."""
        return [(r, c, "X") for r, c in enumerate(self.xs)] + [
            (r, c, "O") for r, c in enumerate(self.os)
        ]

    def __str__(self):
        rows = []
        for r in reversed(range(self.n)):
            line = ["."] * self.n
            line[self.xs[r]] = "X"
            line[self.os[r]] = "O"
            rows.append("".join(line))
        return "\n".join(rows)


def _inverse(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for i, v in enumerate(perm):
        inv[v] = i
    return inv


def _check(xs: Sequence[int], os: Sequence[int]) -> None:
    if len(xs) != len(os):
        raise GridError(f"x and o have different lengths ({len(xs)} != {len(os)})")
    n = len(xs)
    if n < 2:
        raise TooSmall(f"grid size {n} < 2")
    for name, perm in (("x", xs), ("o", os)):
        if sorted(perm) != list(range(n)):
            raise NotAPermutation(f"{name} markings {list(perm)} are not a permutation of 0..{n - 1}")
    for r in range(n):
        if xs[r] == os[r]:
            raise SquareCollision(f"X and O share square (row {r}, col {xs[r]})")


def validate(xs: Sequence[int], os: Sequence[int], n: int | None = None) -> GridDiagram:
    """Build a :class:`GridDiagram`, raising a :class:`GridError` subclass if invalid."""
    if n is not None and (len(xs) != n or len(os) != n):
        raise GridError(f"declared size {n} does not match arrays of length {len(xs)}, {len(os)}")
    return GridDiagram(tuple(xs), tuple(os))


UNKNOT = GridDiagram((0, 1), (1, 0))


def components(g: GridDiagram) -> int:
    """Number of link components: cycles of ``r -> o_rows[xs[r]]``."""
    succ = [0] * g.n
    o_row = g.o_rows()
    for r in range(g.n):
        succ[r] = o_row[g.xs[r]]
    seen = [False] * g.n
    count = 0
    for start in range(g.n):
        if seen[start]:
            continue
        count += 1
        r = start
        while not seen[r]:
            seen[r] = True
            r = succ[r]
    return count


def mirror(g: GridDiagram) -> GridDiagram:
    """Reflect the grid left-to-right; represents the mirror image."""
    n1 = g.n - 1
    return GridDiagram._unchecked([n1 - c for c in g.xs], [n1 - c for c in g.os])


def transpose(g: GridDiagram) -> GridDiagram:
    """Swap the roles of rows and columns (markings keep their kind)."""
    return GridDiagram._unchecked(g.x_rows(), g.o_rows())


def crossing_count(g: GridDiagram) -> int:
    n = g.n
    x_row, o_row = g.x_rows(), g.o_rows()
    count = 0
    for r in range(n):
        lo, hi = sorted((g.xs[r], g.os[r]))
        for c in range(lo + 1, hi):
            a, b = x_row[c], o_row[c]
            if (a < r < b) or (b < r < a):
                count += 1
    return count


def min_crossing_translate(g: GridDiagram) -> GridDiagram:
    """Cyclic translate of ``g`` whose drawn diagram has the fewest crossings."""
    n = g.n
    best, best_count = g, crossing_count(g)
    for dr in range(n):
        xs_r = [0] * n
        os_r = [0] * n
        for r in range(n):
            xs_r[(r + dr) % n] = g.xs[r]
            os_r[(r + dr) % n] = g.os[r]
        for dc in range(n):
            if dr == 0 and dc == 0:
                continue
            cand = GridDiagram._unchecked(
                [(c + dc) % n for c in xs_r], [(c + dc) % n for c in os_r]
            )
            k = crossing_count(cand)
            if k < best_count:
                best, best_count = cand, k
    return best


# ---------------------------------------------------------------------------
# planar diagrams


class Crossing(NamedTuple):
    """A crossing in PD form.

    ``a`` is the incoming under edge and ``a, b, c, d`` run counterclockwise,
    so ``c`` is the outgoing under edge.  ``sign`` is +1 for a right-handed
    crossing.  ``row``/``col`` locate the crossing on the source grid.
    """

    a: int
    b: int
    c: int
    d: int
    sign: int
    row: int = -1
    col: int = -1

    @property
    def over_in(self) -> int:
        return self.d if self.sign > 0 else self.b

    @property
    def over_out(self) -> int:
        return self.b if self.sign > 0 else self.d


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[Crossing, ...]
    n_edges: int
    components: int
    free_loops: int = 0  # components meeting no crossing

    @property
    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    def mirror(self) -> "PlanarDiagram":
        """Switch every crossing; PD order is re-rooted at the new under edge."""
        out = []
        for x in self.crossings:
            # new under strand is the old over strand, entering at over_in
            if x.sign > 0:
                out.append(Crossing(x.d, x.a, x.b, x.c, -1, x.row, x.col))
            else:
                out.append(Crossing(x.b, x.c, x.d, x.a, 1, x.row, x.col))
        return PlanarDiagram(tuple(out), self.n_edges, self.components, self.free_loops)


def to_planar(g: GridDiagram) -> PlanarDiagram:
    """Draw ``g`` as an oriented planar diagram with vertical strands over."""
    n = g.n
    xs, os = g.xs, g.os
    x_row, o_row = g.x_rows(), g.o_rows()

    def v_spans(c, r):
        a, b = x_row[c], o_row[c]
        return (a < r < b) or (b < r < a)

    def h_spans(r, c):
        a, b = xs[r], os[r]
        return (a < c < b) or (b < c < a)

    # passes[(row, col)] = [under_in, under_out, over_in, over_out]
    passes: dict[tuple[int, int], list[int]] = {}
    seen = [False] * n
    edge = 0
    n_comp = 0
    free = 0
    for start in range(n):
        if seen[start]:
            continue
        n_comp += 1
        seq: list[tuple[tuple[int, int], int]] = []  # (crossing, 0=under / 2=over)
        r = start
        while not seen[r]:
            seen[r] = True
            o, x = os[r], xs[r]
            step = 1 if x > o else -1
            for c in range(o + step, x, step):
                if v_spans(c, r):
                    seq.append(((r, c), 0))
            r2 = o_row[x]
            step = 1 if r2 > r else -1
            for rr in range(r + step, r2, step):
                if h_spans(rr, x):
                    seq.append(((rr, x), 2))
            r = r2
        k = len(seq)
        if k == 0:
            free += 1
            continue
        for j, (key, slot) in enumerate(seq):
            slots = passes.setdefault(key, [0, 0, 0, 0])
            slots[slot] = edge + (j - 1) % k
            slots[slot + 1] = edge + j
        edge += k

    crossings = []
    for (r, c), (u_in, u_out, v_in, v_out) in sorted(passes.items()):
        dh = 1 if xs[r] > os[r] else -1
        dv = 1 if o_row[c] > x_row[c] else -1
        sign = -dh * dv
        if sign > 0:
            crossings.append(Crossing(u_in, v_out, u_out, v_in, 1, r, c))
        else:
            crossings.append(Crossing(u_in, v_in, u_out, v_out, -1, r, c))
    return PlanarDiagram(tuple(crossings), edge, n_comp, free)


# ---------------------------------------------------------------------------
# unoriented grids


@dataclass(frozen=True)
class UnorientedGrid:
    """A grid whose markings have lost their X/O type.

    ``rows[r]`` holds the two columns marked in row ``r``.
    """

    rows: tuple[tuple[int, int], ...]

    def __post_init__(self):
        rows = tuple(tuple(sorted(p)) for p in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        counts = [0] * n
        for a, b in rows:
            if a == b:
                raise SquareCollision(f"two markings in one square (column {a})")
            if not (0 <= a < n and 0 <= b < n):
                raise GridError(f"column out of range in row pair {(a, b)}")
            counts[a] += 1
            counts[b] += 1
        if any(k != 2 for k in counts):
            raise NotAPermutation("every column must hold exactly two markings")

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def from_grid(cls, g: GridDiagram) -> "UnorientedGrid":
        return cls(tuple((g.xs[r], g.os[r]) for r in range(g.n)))

    def orient(self, reverse: bool = False) -> GridDiagram:
        """Re-decorate along the traced curve: O at the tail, X at the head of each row.

        Raises :class:`MultiComponent` when the curve has more than one cycle.
        """
        n = self.n
        col_rows: list[list[int]] = [[] for _ in range(n)]
        for r, (a, b) in enumerate(self.rows):
            col_rows[a].append(r)
            col_rows[b].append(r)
        xs = [-1] * n
        os = [-1] * n
        r = 0
        a, b = self.rows[0]
        tail, head = (b, a) if reverse else (a, b)
        visited = 0
        while xs[r] < 0:
            os[r], xs[r] = tail, head
            visited += 1
            r1, r2 = col_rows[head]
            r = r2 if r1 == r else r1
            p, q = self.rows[r]
            tail = head
            head = q if p == head else p
        if visited != n:
            raise MultiComponent(f"trace closed after {visited} of {n} rows")
        return GridDiagram._unchecked(xs, os)


# ---------------------------------------------------------------------------
# connected sum


def _translate_cols(xs, os, k, n):
    return [(c + k) % n for c in xs], [(c + k) % n for c in os]


def connect_sum(a: GridDiagram, b: GridDiagram) -> GridDiagram:
    """Connected sum; ``b`` sits above-right of ``a`` sharing one row and column."""
    if components(a) != 1 or components(b) != 1:
        raise NotAKnot("connected sum needs two knots")
    na, nb = a.n, b.n
    # put a's top-row X in a's last column and b's bottom-row O in b's first
    ax, ao = _translate_cols(a.xs, a.os, na - 1 - a.xs[na - 1], na)
    bx, bo = _translate_cols(b.xs, b.os, -b.os[0], nb)
    N = na + nb - 1
    off = na - 1
    xs = ax[:]  # rows 0..na-1 from a
    os = ao[:]
    # merged row off: keep a's O and b's X, drop the shared-cell pair
    xs[off] = bx[0] + off
    for r in range(1, nb):
        xs.append(bx[r] + off)
        os.append(bo[r] + off)
    assert len(xs) == N
    return GridDiagram(xs, os)


# ---------------------------------------------------------------------------
# serialization


def to_dict(g: GridDiagram) -> dict:
    return {"n": g.n, "x": list(g.xs), "o": list(g.os)}


def from_dict(data: dict) -> GridDiagram:
    try:
        n, xs, os = data["n"], data["x"], data["o"]
    except (KeyError, TypeError) as exc:
        raise GridError(f"grid record needs keys n, x, o: {data!r}") from exc
    if not isinstance(n, int) or not all(isinstance(v, int) for v in list(xs) + list(os)):
        raise GridError("grid entries must be integers")
    return validate(xs, os, n)


def serialize(g: GridDiagram) -> str:
    return json.dumps(to_dict(g))


def parse(text: str) -> GridDiagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GridError(f"not valid JSON: {exc}") from exc
    return from_dict(data)
