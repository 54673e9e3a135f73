"""Band attachments (H(2)-moves) realised as marking swaps between adjacent lines.

Four rewrites act on a cyclically adjacent pair of rows ``(i, i + 1)`` (or
columns, via transposition):

``cO`` / ``cX``
    exchange the two O's (two X's) between the rows; each row still holds one
    marking of each kind, and the move is a coherent band.
``ncA``
    the X of line ``i`` and the O of line ``i + 1`` trade lines, keeping their
    columns.
``ncB``
    the O of line ``i`` and the X of line ``i + 1`` trade lines.

The non-coherent swaps leave two markings of one kind in each of the two
lines, so the result is re-decorated along its traced curve.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass

from .grid import (
    GridDiagram,
    MultiComponent,
    SquareCollision,
    UnorientedGrid,
    components,
    transpose,
)
from .moves import COL, ROW, _check_axis


class Variant(enum.Enum):
    COHERENT_O = "cO"
    COHERENT_X = "cX"
    NONCOHERENT_A = "ncA"
    NONCOHERENT_B = "ncB"

    @property
    def coherent(self) -> bool:
        return self in (Variant.COHERENT_O, Variant.COHERENT_X)


COHERENT = (Variant.COHERENT_O, Variant.COHERENT_X)
NONCOHERENT = (Variant.NONCOHERENT_A, Variant.NONCOHERENT_B)


@dataclass(frozen=True)
class BandMove:
    axis: str
    i: int
    variant: Variant

    def __post_init__(self):
        object.__setattr__(self, "axis", _check_axis(self.axis))
        object.__setattr__(self, "variant", Variant(self.variant))

    def to_dict(self) -> dict:
        return {"axis": self.axis, "i": self.i, "variant": self.variant.value}

    @classmethod
    def from_dict(cls, data: dict) -> "BandMove":
        return cls(data["axis"], int(data["i"]), Variant(data["variant"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _rows_swap(xs, os, i, variant, reverse=False):
    """Apply a row band to arrays; returns a GridDiagram or raises."""
    n = len(xs)
    j = (i + 1) % n
    if variant is Variant.COHERENT_O:
        if os[j] == xs[i] or os[i] == xs[j]:
            raise SquareCollision(f"cO at rows {i},{j} lands on an X")
        os = list(os)
        os[i], os[j] = os[j], os[i]
        return GridDiagram._unchecked(xs, os)
    if variant is Variant.COHERENT_X:
        if xs[j] == os[i] or xs[i] == os[j]:
            raise SquareCollision(f"cX at rows {i},{j} lands on an O")
        xs = list(xs)
        xs[i], xs[j] = xs[j], xs[i]
        return GridDiagram._unchecked(xs, os)
    rows = [(xs[r], os[r]) for r in range(n)]
    if variant is Variant.NONCOHERENT_A:
        moving_down, moving_up = os[j], xs[i]  # O of j goes down, X of i goes up
    else:
        moving_down, moving_up = xs[j], os[i]
    stay_i = os[i] if variant is Variant.NONCOHERENT_A else xs[i]
    stay_j = xs[j] if variant is Variant.NONCOHERENT_A else os[j]
    if moving_down == stay_i or moving_up == stay_j:
        raise SquareCollision(f"{variant.value} at rows {i},{j} collides")
    rows[i] = (stay_i, moving_down)
    rows[j] = (stay_j, moving_up)
    return UnorientedGrid(tuple(rows)).orient(reverse=reverse)


def apply_band(g: GridDiagram, m: BandMove, reverse: bool = False) -> GridDiagram:
    """Apply ``m`` to ``g``.

    ``reverse`` picks the opposite traversal direction when re-decorating a
    non-coherent result; it has no effect on coherent moves.
    Raises :class:`SquareCollision` or :class:`MultiComponent`.
    """
    if m.axis == COL:
        t = transpose(g)
        out = _rows_swap(t.xs, t.os, m.i % g.n, m.variant, reverse)
        return transpose(out)
    return _rows_swap(g.xs, g.os, m.i % g.n, m.variant, reverse)


def enumerate_bands(g: GridDiagram, kind: str = "all") -> list[BandMove]:
    """All applicable band moves of ``kind`` (``coherent``, ``noncoherent`` or ``all``)."""
    variants = {"coherent": COHERENT, "noncoherent": NONCOHERENT, "all": COHERENT + NONCOHERENT}[kind]
    n = g.n
    pairs = range(n) if n > 2 else range(1)
    out = []
    for axis in (ROW, COL):
        for i in pairs:
            for v in variants:
                m = BandMove(axis, i, v)
                try:
                    apply_band(g, m)
                except (SquareCollision, MultiComponent):
                    continue
                out.append(m)
    return out


def classify_band(g: GridDiagram, m: BandMove) -> tuple[str, int]:
    """``("coherent" | "noncoherent", component delta)`` judged by component count."""
    delta = components(apply_band(g, m)) - components(g)
    return ("noncoherent" if delta == 0 else "coherent"), delta


def inverse_band(g: GridDiagram, m: BandMove) -> BandMove:
    """A band on ``apply_band(g, m)`` that undoes ``m`` (same lines, same swap kind)."""
    if m.variant.coherent:
        return m
    h = apply_band(g, m)
    for v in NONCOHERENT:
        cand = BandMove(m.axis, m.i, v)
        try:
            back = apply_band(h, cand)
        except (SquareCollision, MultiComponent):
            continue
        if UnorientedGrid.from_grid(back) == UnorientedGrid.from_grid(g):
            return cand
    raise ValueError("no inverse band found")
