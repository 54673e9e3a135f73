"""Reference table of knots up to 8 crossings and identification against it.

Class names follow KnotInfo: ``7_3`` and its mirror ``7_3m``; connected sums
are written ``3_1#5_1m``.  The table is built from two data files, seed grids
and reference polynomials, and the build refuses to finish if a seed's
computed invariants disagree with its reference or if two classes share an
invariant key.
"""

from __future__ import annotations

import functools
import json
import random
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

from .grid import GridDiagram, NotAKnot, components, from_dict, mirror
from .invariants import (
    CROSSING_CAP,
    InvariantKey,
    alexander,
    jones,
    key,
    planar_for_key,
)
from .polynomial import LaurentPolynomial
from .scramble import SimplifyPolicy, make_rng, simplify

UNKNOWN = "unknown"

DEFAULT_EFFORT = (
    SimplifyPolicy(),
    SimplifyPolicy(rounds=800, shuffle_moves=100, patience=80),
)


class SeedMismatch(ValueError):
    def __init__(self, name: str, detail: str = ""):
        super().__init__(f"{name}: {detail}" if detail else name)
        self.name = name


class KeyCollision(ValueError):
    def __init__(self, names: Sequence[str]):
        super().__init__("classes share an invariant key: " + ", ".join(names))
        self.names = list(names)


class UnknownName(KeyError):
    pass


def _split_factors(name: str) -> list[str]:
    return name.split("#")


def mirror_name(name: str, amphichiral: bool = False,
                amphichiral_factors: frozenset | set = frozenset({"0_1", "4_1"})) -> str:
    """KnotInfo-style mirror label.

    Connected sums are mirrored factor by factor, leaving amphichiral
    factors (``amphichiral_factors``) without a suffix.
    """
    if amphichiral:
        return name
    parts = []
    for f in _split_factors(name):
        if f in amphichiral_factors:
            parts.append(f)
        else:
            parts.append(f[:-1] if f.endswith("m") else f + "m")
    return "#".join(parts)


@dataclass(frozen=True)
class KnotClass:
    name: str
    amphichiral: bool
    seed: GridDiagram
    key: InvariantKey
    mirror_name: str = ""

    def __post_init__(self):
        if not self.mirror_name:
            object.__setattr__(self, "mirror_name", mirror_name(self.name, self.amphichiral))


class KnotTable:
    def __init__(self, classes: Sequence[KnotClass]):
        self.classes = {c.name: c for c in classes}
        index: dict[InvariantKey, list[str]] = {}
        for c in classes:
            index.setdefault(c.key, []).append(c.name)
        clashes = [names for names in index.values() if len(names) > 1]
        if clashes:
            raise KeyCollision(sorted(n for names in clashes for n in names))
        self.index = {k: names[0] for k, names in index.items()}
        self.by_jones: dict[LaurentPolynomial, list[InvariantKey]] = {}
        for k in self.index:
            self.by_jones.setdefault(k.jones, []).append(k)
        for c in classes:
            if c.mirror_name not in self.classes:
                raise ValueError(f"mirror class {c.mirror_name} of {c.name} missing")

    def __len__(self):
        return len(self.classes)

    def __contains__(self, name):
        return name in self.classes

    def __getitem__(self, name) -> KnotClass:
        try:
            return self.classes[name]
        except KeyError:
            raise UnknownName(name) from None

    @property
    def names(self) -> list[str]:
        return list(self.classes)

    def lookup(self, k: InvariantKey) -> str:
        return self.index.get(k, UNKNOWN)

    def mirror_of(self, name: str) -> str:
        return self[name].mirror_name

    def is_cosmetic_pair(self, a: str, b: str) -> bool:
        """True iff ``b`` is the mirror of ``a`` (for amphichiral ``a``: iff ``a == b``)."""
        self[b]
        return self[a].mirror_name == b


def _load_json(source) -> list:
    if isinstance(source, (str, Path)):
        with open(source) as fh:
            return json.load(fh)
    return list(source)


def build_table(seeds, references) -> KnotTable:
    """Build and verify the table.

    ``seeds`` and ``references`` are file paths or already-loaded record lists.
    Seeds are given for one chirality; mirrors are generated.
    """
    seed_rows = _load_json(seeds)
    refs = {}
    for r in _load_json(references):
        refs[r["name"]] = InvariantKey(LaurentPolynomial.parse(r["jones"]),
                                       LaurentPolynomial.parse(r["alexander"]))
    amph_names = frozenset(r["name"] for r in seed_rows if r.get("amphichiral"))
    classes = []
    for row in seed_rows:
        name = row["name"]
        g = from_dict(row["grid"])
        amph = bool(row.get("amphichiral", False))
        if name not in refs:
            raise SeedMismatch(name, "no reference polynomials")
        if components(g) != 1:
            raise SeedMismatch(name, "seed is not a knot")
        computed = key(g, max_crossings=None)
        if computed != refs[name]:
            raise SeedMismatch(name, "computed invariants differ from reference")
        if amph and computed.mirror() != computed:
            raise SeedMismatch(name, "declared amphichiral but key is not mirror-symmetric")
        if amph:
            classes.append(KnotClass(name, True, g, computed, name))
        else:
            m = mirror(g)
            mname = mirror_name(name, False, amph_names)
            classes.append(KnotClass(name, False, g, computed, mname))
            mkey = key(m, max_crossings=None)
            expected = refs.get(mname, refs[name].mirror())
            if mkey != expected:
                raise SeedMismatch(mname, "mirror seed disagrees with mirrored reference")
            classes.append(KnotClass(mname, False, m, mkey, name))
    return KnotTable(classes)


def data_path(name: str) -> Path:
    return Path(str(resources.files("gridband") / "data" / name))


@functools.lru_cache(maxsize=1)
def default_table() -> KnotTable:
    return build_table(data_path("seeds.json"), data_path("references.json"))


def _lookup_planar(d, table: KnotTable) -> str:
    j = jones(d, None)
    cands = table.by_jones.get(j)
    if not cands:
        return UNKNOWN
    return table.lookup(InvariantKey(j, alexander(d)))


def identify(g: GridDiagram, table: KnotTable | None = None,
             effort: Sequence[SimplifyPolicy] = DEFAULT_EFFORT,
             rng: random.Random | int | None = 0,
             max_crossings: int = CROSSING_CAP) -> str:
    """Name of the table class of ``g``, or :data:`UNKNOWN`.

    The grid is simplified with each policy of ``effort`` in turn until its
    drawn diagram has at most ``max_crossings`` crossings.  A key missing
    from the table is final: invariants do not depend on how far the grid
    was simplified.
    """
    if table is None:
        table = default_table()
    if components(g) != 1:
        raise NotAKnot(f"identify needs a knot, got {components(g)} components")
    rng = make_rng(rng)
    h = g
    d = planar_for_key(h) if h.n <= 12 else None
    if d is not None and len(d.crossings) <= max_crossings:
        return _lookup_planar(d, table)
    for policy in effort:
        h = simplify(h, policy, rng)
        d = planar_for_key(h)
        if len(d.crossings) <= max_crossings:
            return _lookup_planar(d, table)
    return UNKNOWN
