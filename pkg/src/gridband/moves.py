"""Cromwell moves on grid diagrams and the interleaved-row crossing change.

Adjacency is cyclic: the pair ``(n - 1, 0)`` counts as adjacent, i.e. the grid
is treated as lying on a torus.  Column versions of every move are obtained
by transposing, applying the row move and transposing back.
"""

from __future__ import annotations

import enum
from typing import NamedTuple, Sequence

from .grid import GridDiagram, GridError, transpose


class IllegalCommutation(GridError):
    pass


class NotInterleaved(GridError):
    pass


class InvalidPosition(GridError):
    pass


class Interleaving(enum.Enum):
    DISJOINT = "disjoint"
    NESTED = "nested"
    INTERLEAVED = "interleaved"
    SHARED_COLUMN = "shared_column"


ROW = "row"
COL = "col"


def _check_axis(axis: str) -> str:
    if axis in ("row", "rows"):
        return ROW
    if axis in ("col", "column", "cols", "columns"):
        return COL
    raise ValueError(f"unknown axis {axis!r}")


def classify_pair(x1: int, o1: int, x2: int, o2: int) -> Interleaving:
    """Classify two rows given by their marker columns."""
    if x1 == x2 or x1 == o2 or o1 == x2 or o1 == o2:
        return Interleaving.SHARED_COLUMN
    lo1, hi1 = (x1, o1) if x1 < o1 else (o1, x1)
    lo2, hi2 = (x2, o2) if x2 < o2 else (o2, x2)
    inside = (lo1 < lo2 < hi1) + (lo1 < hi2 < hi1)
    if inside == 1:
        return Interleaving.INTERLEAVED
    if inside == 2 or (lo2 < lo1 and hi1 < hi2):
        return Interleaving.NESTED
    return Interleaving.DISJOINT


def commutable(x1: int, o1: int, x2: int, o2: int) -> bool:
    return classify_pair(x1, o1, x2, o2) in (Interleaving.DISJOINT, Interleaving.NESTED)


# ---------------------------------------------------------------------------
# translation and row exchanges


def translate(g: GridDiagram, axis: str, k: int) -> GridDiagram:
    n = g.n
    k %= n
    if _check_axis(axis) == COL:
        return GridDiagram._unchecked([(c + k) % n for c in g.xs], [(c + k) % n for c in g.os])
    xs = [0] * n
    os = [0] * n
    for r in range(n):
        xs[(r + k) % n] = g.xs[r]
        os[(r + k) % n] = g.os[r]
    return GridDiagram._unchecked(xs, os)


def interleaving(g: GridDiagram, axis: str, i: int) -> Interleaving:
    if _check_axis(axis) == COL:
        g = transpose(g)
    i %= g.n
    j = (i + 1) % g.n
    return classify_pair(g.xs[i], g.os[i], g.xs[j], g.os[j])


def _swap_rows(g: GridDiagram, i: int) -> GridDiagram:
    n = g.n
    i %= n
    j = (i + 1) % n
    xs, os = list(g.xs), list(g.os)
    xs[i], xs[j] = xs[j], xs[i]
    os[i], os[j] = os[j], os[i]
    return GridDiagram._unchecked(xs, os)


def _on_axis(g: GridDiagram, axis: str, fn, *args) -> GridDiagram:
    if _check_axis(axis) == COL:
        return transpose(fn(transpose(g), *args))
    return fn(g, *args)


def commute(g: GridDiagram, axis: str, i: int) -> GridDiagram:
    """Exchange two adjacent non-interleaved lines (a planar isotopy)."""
    kind = interleaving(g, axis, i)
    if kind not in (Interleaving.DISJOINT, Interleaving.NESTED):
        raise IllegalCommutation(f"{axis} pair {i} is {kind.value}")
    return _on_axis(g, axis, _swap_rows, i)


def cross_exchange(g: GridDiagram, axis: str, i: int) -> GridDiagram:
    """Exchange two adjacent interleaved lines; changes one crossing."""
    kind = interleaving(g, axis, i)
    if kind is not Interleaving.INTERLEAVED:
        raise NotInterleaved(f"{axis} pair {i} is {kind.value}")
    return _on_axis(g, axis, _swap_rows, i)


# ---------------------------------------------------------------------------
# (de)stabilization


class DestabPosition(NamedTuple):
    """A 2x2 block holding three markings.

    The corner marking at ``(corner_row, corner_col)`` shares its row and its
    column with the other two; ``(empty_row, empty_col)`` is the vacant square.
    """

    corner_row: int
    corner_col: int
    empty_row: int
    empty_col: int


class StabSpec(NamedTuple):
    """Stabilize the marking of ``kind`` in ``row``.

    ``corner`` names where the new row and column go relative to it:
    ``"NE"`` inserts a row above and a column to the right, and so on.
    """

    row: int
    kind: str
    corner: str


CORNERS = ("NE", "NW", "SE", "SW")


def _adjacent(a: int, b: int, n: int) -> bool:
    d = (a - b) % n
    return d == 1 or d == n - 1


def destab_sites_at(xs: Sequence[int], os: Sequence[int], x_row: Sequence[int],
                    o_row: Sequence[int], r: int) -> list[DestabPosition]:
    """Destabilization blocks whose full row is ``r``."""
    n = len(xs)
    if n < 3:
        return []
    x, o = xs[r], os[r]
    if not _adjacent(x, o, n):
        return []
    out = []
    # corner X at (r, x): column x's other marking is its O
    re = o_row[x]
    if _adjacent(re, r, n) and xs[re] != o:
        out.append(DestabPosition(r, x, re, o))
    re = x_row[o]
    if _adjacent(re, r, n) and os[re] != x:
        out.append(DestabPosition(r, o, re, x))
    return out


def destab_sites(xs: Sequence[int], os: Sequence[int],
                 x_row: Sequence[int], o_row: Sequence[int]) -> list[DestabPosition]:
    out = []
    for r in range(len(xs)):
        out.extend(destab_sites_at(xs, os, x_row, o_row, r))
    return out


def destab_arrays(xs: Sequence[int], os: Sequence[int], p: DestabPosition) -> tuple[list[int], list[int]]:
    """Collapse the block ``p``; returns new ``(xs, os)`` lists of size ``n - 1``."""
    rd, cd, re, ce = p
    xs = list(xs)
    os = list(os)
    if xs[rd] == cd:
        # corner is an X; the two O's at (rd, ce), (re, cd) merge into (re, ce)
        os[re] = ce
    else:
        xs[re] = ce
    del xs[rd], os[rd]
    xs = [c - (c > cd) for c in xs]
    os = [c - (c > cd) for c in os]
    return xs, os


def stab_arrays(xs: Sequence[int], os: Sequence[int], row: int, kind: str,
                corner: str) -> tuple[list[int], list[int]]:
    n = len(xs)
    if kind not in ("X", "O") or corner not in CORNERS:
        raise ValueError(f"bad stabilization {kind}:{corner}")
    c = xs[row] if kind == "X" else os[row]
    new_r = row + 1 if corner[0] == "N" else row
    new_c = c + 1 if corner[1] == "E" else c
    orig_r = row if corner[0] == "N" else row + 1
    orig_c = c if corner[1] == "E" else c + 1

    def shift(col):
        return col + (col >= new_c)

    xs2 = [shift(v) for v in xs]
    os2 = [shift(v) for v in os]
    # the stabilized marking leaves its square; the block gets T' at
    # (orig_r, new_c) and (new_r, orig_c), and the corner T at (new_r, new_c)
    if kind == "X":
        xs2[row] = new_c
        xs2.insert(new_r, orig_c)
        os2.insert(new_r, new_c)
    else:
        os2[row] = new_c
        os2.insert(new_r, orig_c)
        xs2.insert(new_r, new_c)
    return xs2, os2


def destabilizations(g: GridDiagram) -> list[DestabPosition]:
    return destab_sites(g.xs, g.os, g.x_rows(), g.o_rows())


def destabilize(g: GridDiagram, position: DestabPosition) -> GridDiagram:
    position = DestabPosition(*position)
    if position not in destab_sites_at(g.xs, g.os, g.x_rows(), g.o_rows(), position.corner_row % g.n):
        raise InvalidPosition(f"{position} is not a destabilization of this grid")
    xs, os = destab_arrays(g.xs, g.os, position)
    return GridDiagram(xs, os)


def stabilize(g: GridDiagram, spec: StabSpec) -> GridDiagram:
    spec = StabSpec(*spec)
    if not 0 <= spec.row < g.n:
        raise InvalidPosition(f"row {spec.row} out of range")
    xs, os = stab_arrays(g.xs, g.os, spec.row, spec.kind, spec.corner)
    return GridDiagram(xs, os)


def stab_created_site(g: GridDiagram, spec: StabSpec) -> DestabPosition:
    """The destabilization block created by ``stabilize(g, spec)``."""
    spec = StabSpec(*spec)
    c = g.xs[spec.row] if spec.kind == "X" else g.os[spec.row]
    new_r = spec.row + 1 if spec.corner[0] == "N" else spec.row
    new_c = c + 1 if spec.corner[1] == "E" else c
    orig_r = spec.row if spec.corner[0] == "N" else spec.row + 1
    orig_c = c if spec.corner[1] == "E" else c + 1
    return DestabPosition(new_r, new_c, orig_r, orig_c)
