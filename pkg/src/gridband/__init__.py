"""Grid-diagram knots, band moves, and H(2)-adjacency search."""

from .bands import BandMove, Variant, apply_band, classify_band, enumerate_bands
from .grid import (
    UNKNOT,
    GridDiagram,
    GridError,
    MultiComponent,
    NotAKnot,
    NotAPermutation,
    PlanarDiagram,
    SquareCollision,
    TooSmall,
    UnorientedGrid,
    components,
    connect_sum,
    crossing_count,
    mirror,
    to_planar,
    transpose,
)
from .invariants import InvariantKey, alexander, jones, kauffman_bracket, key
from .knots import UNKNOWN, KnotTable, build_table, default_table, identify
from .polynomial import LaurentPolynomial
from .scramble import ScramblePolicy, SimplifyPolicy, scramble, simplify

__version__ = "0.1.0"

__all__ = [
    "BandMove", "Variant", "apply_band", "classify_band", "enumerate_bands",
    "UNKNOT", "GridDiagram", "GridError", "MultiComponent", "NotAKnot", "NotAPermutation",
    "PlanarDiagram", "SquareCollision", "TooSmall", "UnorientedGrid", "components",
    "connect_sum", "crossing_count", "mirror", "to_planar", "transpose",
    "InvariantKey", "alexander", "jones", "kauffman_bracket", "key",
    "UNKNOWN", "KnotTable", "build_table", "default_table", "identify",
    "LaurentPolynomial", "ScramblePolicy", "SimplifyPolicy", "scramble", "simplify",
]
