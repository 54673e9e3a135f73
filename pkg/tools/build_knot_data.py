"""Regenerate ``src/gridband/data/{seeds,references}.json`` from KnotInfo.

Needs the ``database_knotinfo`` package (not a runtime dependency)::

    pip install database_knotinfo
    python tools/build_knot_data.py

Reference polynomials are copied from KnotInfo's ``jones_polynomial`` and
``alexander_polynomial`` columns (composites: products of the factors).  Seed
grids come from KnotInfo's ``grid_notation`` (an unoriented arc presentation),
re-decorated and, when our drawing convention yields the mirror, reflected so
that the computed Jones polynomial equals the reference.  Composite seeds are
connected sums of prime seeds, shrunk by destabilization.
"""

from __future__ import annotations

import json
import re
import sys
from fractions import Fraction
from pathlib import Path

from gridband.grid import UnorientedGrid, connect_sum, mirror, to_dict
from gridband.invariants import alexander, jones, jones_from_t, to_planar
from gridband.polynomial import LaurentPolynomial
from gridband.scramble import SimplifyPolicy, simplify

DATA = Path(__file__).resolve().parents[1] / "src" / "gridband" / "data"

PRIMES = ["3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"] + [f"7_{i}" for i in range(1, 8)] + [
    f"8_{i}" for i in range(1, 22)]
COMPOSITES = [("3_1", "3_1"), ("3_1", "3_1m"), ("3_1", "4_1"), ("4_1", "4_1"),
              ("3_1", "5_1"), ("3_1", "5_1m"), ("3_1", "5_2"), ("3_1", "5_2m")]

_TERM = re.compile(r"([+-]?)\s*(\d*)\*?(t?)(?:\^\(?(-?\d+)\)?)?")


def parse_t_poly(text: str) -> dict[Fraction, int]:
    """Parse KnotInfo's ``t+ t^3-t^4`` style polynomial strings."""
    text = text.replace(" ", "")
    out: dict[Fraction, int] = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at {pos}")
        sign, digits, var, exp = m.groups()
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        e = Fraction(int(exp)) if exp else Fraction(1 if var else 0)
        if not var:
            e = Fraction(0)
        out[e] = out.get(e, 0) + coeff
        pos = m.end()
    return out


def symmetrize(terms: dict) -> LaurentPolynomial:
    p = LaurentPolynomial({int(e): c for e, c in terms.items()})
    span = p.max_exp - p.min_exp
    p = p.shift(-p.min_exp - span // 2)
    return -p if p.at_one() < 0 else p


def main() -> int:
    from database_knotinfo import link_list

    rows = {r["name"]: r for r in link_list()[1:]}
    amph = {n for n in PRIMES if "amphicheiral" in rows[n]["symmetry_type"]}

    refs: dict[str, tuple[LaurentPolynomial, LaurentPolynomial]] = {
        "0_1": (LaurentPolynomial({0: 1}), LaurentPolynomial({0: 1}))}
    seeds = {"0_1": None}
    for name in PRIMES:
        r = rows[name]
        jones_ref = jones_from_t(parse_t_poly(r["jones_polynomial"]))
        alex_ref = symmetrize(parse_t_poly(r["alexander_polynomial"]))
        refs[name] = (jones_ref, alex_ref)
        pairs = json.loads(r["grid_notation"])
        n = len(pairs) // 2
        cols_by_row: list[list[int]] = [[] for _ in range(n)]
        for col, row in pairs:
            cols_by_row[row - 1].append(col - 1)
        g = UnorientedGrid(tuple(tuple(c) for c in cols_by_row)).orient()
        d = to_planar(g)
        j = jones(d, None)
        if j == jones_ref.substitute_power(-1) and j != jones_ref:
            g = mirror(g)
            j = jones(to_planar(g), None)
        if j != jones_ref or alexander(to_planar(g)) != alex_ref:
            print(f"{name}: grid notation does not match reference polynomials", file=sys.stderr)
            return 1
        seeds[name] = g

    def ref_of(label):
        base = label.rstrip("m")
        j, a = refs[base]
        return (j.substitute_power(-1), a) if label.endswith("m") else (j, a)

    def seed_of(label):
        g = seeds[label.rstrip("m")]
        return mirror(g) if label.endswith("m") else g

    for a, b in COMPOSITES:
        name = f"{a}#{b}"
        ja, aa = ref_of(a)
        jb, ab = ref_of(b)
        refs[name] = (ja * jb, aa * ab)
        g = connect_sum(seed_of(a), seed_of(b))
        target = seed_of(a).n + seed_of(b).n - 2
        for s in range(200):
            h = simplify(g, SimplifyPolicy(rounds=400, patience=60), rng=s)
            if h.n <= target:
                g = h
                break
        seeds[name] = g

    amph |= {"0_1", "3_1#3_1m", "4_1#4_1"}
    DATA.mkdir(parents=True, exist_ok=True)
    seed_rows = []
    ref_rows = []
    for name in ["0_1"] + PRIMES + [f"{a}#{b}" for a, b in COMPOSITES]:
        g = seeds[name]
        if g is not None:
            seed_rows.append({"name": name, "amphichiral": name in amph, "grid": to_dict(g)})
        j, a = refs[name]
        ref_rows.append({"name": name, "jones": str(j), "alexander": str(a)})
    seed_rows.insert(0, {"name": "0_1", "amphichiral": True, "grid": {"n": 2, "x": [0, 1], "o": [1, 0]}})

    def dump(rows_, path):
        with open(path, "w") as fh:
            fh.write("[\n")
            fh.write(",\n".join("  " + json.dumps(r) for r in rows_))
            fh.write("\n]\n")

    dump(seed_rows, DATA / "seeds.json")
    dump(ref_rows, DATA / "references.json")
    print(f"wrote {len(seed_rows)} seeds, {len(ref_rows)} references; amphichiral: {sorted(amph)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
