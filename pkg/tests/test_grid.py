import itertools
import json
import random
from pathlib import Path

import pytest
from hypothesis import given

from gridband.grid import (
    UNKNOT,
    GridDiagram,
    GridError,
    MultiComponent,
    NotAKnot,
    NotAPermutation,
    SquareCollision,
    TooSmall,
    UnorientedGrid,
    components,
    connect_sum,
    crossing_count,
    from_dict,
    min_crossing_translate,
    mirror,
    parse,
    serialize,
    to_dict,
    to_planar,
    transpose,
    validate,
)

from conftest import grids

GOLDEN = Path(__file__).parent / "golden"


def components_by_union_find(g: GridDiagram) -> int:
    # markings are nodes; each row and each column joins its two markings
    n = g.n
    parent = list(range(2 * n))  # X of row r is r, O of row r is n + r

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def join(a, b):
        parent[find(a)] = find(b)

    for r in range(n):
        join(r, n + r)
    for c in range(n):
        join(g.xs.index(c), n + g.os.index(c))
    return len({find(a) for a in range(2 * n)})


def all_grids(n):
    for xs in itertools.permutations(range(n)):
        for os in itertools.permutations(range(n)):
            if all(x != o for x, o in zip(xs, os)):
                yield GridDiagram(xs, os)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_components_exhaustive(n):
    for g in all_grids(n):
        assert components(g) == components_by_union_find(g)
        assert to_planar(g).components == components(g)


@pytest.mark.parametrize("xs, os, exc", [
    ([0], [0], TooSmall),
    ([0, 0], [1, 0], NotAPermutation),
    ([0, 1], [0, 1], SquareCollision),
    ([0, 1, 2], [1, 2], GridError),
    ([0, 5], [1, 0], NotAPermutation),
])
def test_validation_errors(xs, os, exc):
    with pytest.raises(exc):
        validate(xs, os)


def test_declared_size_checked():
    with pytest.raises(GridError):
        validate([0, 1], [1, 0], n=3)


def test_unknot_basics():
    assert components(UNKNOT) == 1
    assert crossing_count(UNKNOT) == 0
    d = to_planar(UNKNOT)
    assert d.crossings == () and d.free_loops == 1


@given(grids())
def test_involutions(g):
    assert mirror(mirror(g)) == g
    assert transpose(transpose(g)) == g
    assert components(transpose(g)) == components(g) == components(mirror(g))


@given(grids())
def test_planar_diagram_shape(g):
    d = to_planar(g)
    assert len(d.crossings) == crossing_count(g)
    seen = [0] * d.n_edges
    for x in d.crossings:
        for e in (x.a, x.b, x.c, x.d):
            seen[e] += 1
    assert all(k == 2 for k in seen)
    assert d.mirror().writhe == -d.writhe
    assert to_planar(mirror(g)).writhe == -d.writhe


@given(grids())
def test_min_crossing_translate_is_minimal_and_same_size(g):
    h = min_crossing_translate(g)
    assert h.n == g.n and components(h) == components(g)
    assert crossing_count(h) <= crossing_count(g)


def test_serialization_golden():
    text = (GOLDEN / "trefoil_grid.json").read_text()
    g = parse(text)
    assert g.n == 5 and components(g) == 1
    assert serialize(g) == text.strip()
    assert from_dict(json.loads(text)) == g
    assert from_dict(to_dict(g)) == g


@pytest.mark.parametrize("text", ["[1,2]", "{}", '{"n": 2, "x": [0, 1], "o": [0, 1]}', "nope",
                                  '{"n": 2, "x": [0, 1.5], "o": [1, 0]}'])
def test_parse_rejects(text):
    with pytest.raises(GridError):
        parse(text)


def test_unoriented_orient_round_trip():
    rng = random.Random(3)
    from conftest import random_knot_grid
    for _ in range(50):
        g = random_knot_grid(rng, rng.randrange(2, 10))
        u = UnorientedGrid.from_grid(g)
        h = u.orient()
        assert UnorientedGrid.from_grid(h) == u
        assert h in (g, GridDiagram(g.os, g.xs))  # same curve, possibly reversed
        assert u.orient(reverse=True) == GridDiagram(h.os, h.xs)


def test_orient_rejects_links():
    link = GridDiagram((1, 0, 3, 2), (0, 1, 2, 3))
    assert components(link) == 2
    with pytest.raises(MultiComponent):
        UnorientedGrid.from_grid(link).orient()


def test_connect_sum_shape(table):
    a, b = table["3_1"].seed, table["4_1"].seed
    s = connect_sum(a, b)
    assert s.n == a.n + b.n - 1 and components(s) == 1
    with pytest.raises(NotAKnot):
        connect_sum(a, GridDiagram((1, 0, 3, 2), (0, 1, 2, 3)))
