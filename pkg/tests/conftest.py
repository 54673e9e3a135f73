import random

import pytest
from hypothesis import strategies as st

from gridband.grid import GridDiagram, components
from gridband.knots import default_table


@pytest.fixture(scope="session")
def table():
    return default_table()


def random_grid(rng: random.Random, n: int) -> GridDiagram:
    """Uniform-ish random grid: two permutations with no shared square."""
    xs = list(range(n))
    rng.shuffle(xs)
    while True:
        os = list(range(n))
        rng.shuffle(os)
        if all(x != o for x, o in zip(xs, os)):
            return GridDiagram(xs, os)


def random_knot_grid(rng: random.Random, n: int) -> GridDiagram:
    while True:
        g = random_grid(rng, n)
        if components(g) == 1:
            return g


@st.composite
def grids(draw, min_n=2, max_n=8, knots_only=False):
    n = draw(st.integers(min_n, max_n))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    return random_knot_grid(rng, n) if knots_only else random_grid(rng, n)
