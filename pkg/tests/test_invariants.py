import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from gridband.grid import Crossing, PlanarDiagram, connect_sum, mirror, to_planar
from gridband.invariants import (
    TooManyCrossings,
    alexander,
    bracket_state_sum,
    jones,
    jones_from_t,
    jones_to_t,
    kauffman_bracket,
    key,
    planar_for_key,
)
from gridband.polynomial import LaurentPolynomial as P
from gridband.scramble import ScramblePolicy, scramble

from conftest import grids


def from_pd(code):
    """PlanarDiagram from a 1-based KnotTheory-style PD list of a knot."""
    n = 2 * len(code)
    xs = []
    for a, b, c, d in code:
        a, b, c, d = a - 1, b - 1, c - 1, d - 1
        sign = 1 if (b - d) % n == 1 else -1
        xs.append(Crossing(a, b, c, d, sign))
    return PlanarDiagram(tuple(xs), n, 1)


TREFOIL_PD = [(1, 5, 2, 4), (3, 1, 4, 6), (5, 3, 6, 2)]
FIGURE_EIGHT_PD = [(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)]


def t_poly(d):
    return {Fraction(e): c for e, c in d.items()}


def test_trefoil_from_pd():
    d = from_pd(TREFOIL_PD)
    j = jones_to_t(jones(d))
    assert j in (t_poly({1: 1, 3: 1, 4: -1}), t_poly({-1: 1, -3: 1, -4: -1}))
    assert alexander(d) == P({-1: 1, 0: -1, 1: 1})


def test_figure_eight_from_pd():
    d = from_pd(FIGURE_EIGHT_PD)
    assert jones_to_t(jones(d)) == t_poly({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})
    assert alexander(d) == P({-1: -1, 0: 3, 1: -1})


def test_seed_values_match_knotinfo(table):
    assert jones_to_t(key(table["3_1"].seed).jones) == t_poly({1: 1, 3: 1, 4: -1})
    assert jones_to_t(key(table["5_1"].seed).jones) == t_poly({2: 1, 4: 1, 5: -1, 6: 1, 7: -1})


def test_t_conversion_round_trip(table):
    for c in table.classes.values():
        assert jones_from_t(jones_to_t(c.key.jones)) == c.key.jones


def test_unknot_bracket():
    from gridband.grid import UNKNOT
    d = to_planar(UNKNOT)
    assert kauffman_bracket(d) == bracket_state_sum(d) == P({0: 1})
    assert jones(d) == P({0: 1})


def small_diagrams(table, limit=12, per_seed=3):
    out = []
    for c in table.classes.values():
        out.append(to_planar(c.seed))
        for s in range(per_seed):
            g = scramble(c.seed, ScramblePolicy(moves=40, max_size=c.seed.n + 3, rng_seed=s))
            out.append(planar_for_key(g))
    return [d for d in out if len(d.crossings) <= limit]


def test_sweep_equals_state_sum(table):
    ds = small_diagrams(table)
    assert len(ds) > 100
    for d in ds:
        assert kauffman_bracket(d) == bracket_state_sum(d)


@given(grids(max_n=7))
def test_sweep_equals_state_sum_on_links(g):
    d = to_planar(g)
    if len(d.crossings) <= 12:
        assert kauffman_bracket(d) == bracket_state_sum(d)


@given(grids(knots_only=True, max_n=8))
def test_jones_mirror_law_and_alexander_shape(g):
    k, km = key(g), key(mirror(g))
    assert km.jones == k.jones.substitute_power(-1)
    assert km.alexander == k.alexander
    assert k.alexander.is_palindromic() and k.alexander.at_one() == 1
    # V(1) = 1 for knots
    assert k.jones.at_one() == 1


def test_multiplicative_under_connected_sum(table):
    names = ["3_1", "3_1m", "4_1", "5_2", "6_1", "7_4m"]
    for a in names:
        for b in names:
            ka, kb = table[a].key, table[b].key
            ks = key(connect_sum(table[a].seed, table[b].seed), None)
            assert ks.jones == ka.jones * kb.jones
            assert ks.alexander == ka.alexander * kb.alexander


def test_caps():
    rng = random.Random(0)
    from conftest import random_knot_grid
    while True:
        d = to_planar(random_knot_grid(rng, 12))
        if len(d.crossings) > 10:
            break
    with pytest.raises(TooManyCrossings):
        jones(d, max_crossings=5)
    with pytest.raises(TooManyCrossings):
        bracket_state_sum(d, max_crossings=5)
