"""Kauffman bracket, Jones and Alexander polynomials of planar diagrams.

Everything is exact integer arithmetic.  The Jones polynomial is kept in the
bracket variable ``A`` as ``f(A) = (-A^3)^(-w) <D>``; the usual ``V(t)`` is
recovered by ``t = A^-4``.  Mirroring is the substitution ``A -> A^-1``.

Two bracket evaluators are provided.  :func:`bracket_state_sum` enumerates
all ``2^c`` states and serves as the reference; :func:`kauffman_bracket`
sweeps the crossings one at a time, keeping for each partial state only the
pairing of its dangling edges, so its cost grows with the width of the
sweep front rather than with ``2^c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .grid import GridDiagram, NotAKnot, PlanarDiagram, min_crossing_translate, to_planar
from .polynomial import LOOP, ONE, LaurentPolynomial

CROSSING_CAP = 25
STATE_SUM_CAP = 25


class TooManyCrossings(ValueError):
    pass


def _check_cap(d: PlanarDiagram, cap: int | None) -> None:
    if cap is not None and len(d.crossings) > cap:
        raise TooManyCrossings(f"{len(d.crossings)} crossings exceed the cap of {cap}")


# ---------------------------------------------------------------------------
# reference state sum


def bracket_state_sum(d: PlanarDiagram, max_crossings: int | None = STATE_SUM_CAP) -> LaurentPolynomial:
    """Kauffman bracket by summing over all ``2^c`` smoothings."""
    _check_cap(d, max_crossings)
    xs = d.crossings
    c = len(xs)
    if c == 0:
        return LOOP ** (d.free_loops - 1) if d.free_loops else ONE
    # each crossing corner is an edge end; edge e has ends 2e (tail) and 2e+1 (head)
    # end of edge e at the crossing it enters is 2e+1, where it leaves is 2e
    ends = []
    for x in xs:
        a, b, cc, dd = x.a, x.b, x.c, x.d
        b_in = x.sign < 0  # negative crossing: over strand enters at b
        ends.append((2 * a + 1, 2 * b + (1 if b_in else 0), 2 * cc, 2 * dd + (0 if b_in else 1)))
    n_nodes = 2 * d.n_edges
    acc: dict[int, int] = {}
    for state in range(1 << c):
        parent = list(range(n_nodes))

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        def union(u, v):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv

        for e in range(d.n_edges):
            union(2 * e, 2 * e + 1)
        n_a = 0
        for k, (ea, eb, ec, ed) in enumerate(ends):
            if (state >> k) & 1:
                union(ea, ed)
                union(eb, ec)
            else:
                n_a += 1
                union(ea, eb)
                union(ec, ed)
        loops = len({find(u) for u in range(n_nodes)}) + d.free_loops
        # A^(#A - #B) * delta^(loops - 1)
        term = LOOP ** (loops - 1)
        shift = n_a - (c - n_a)
        for e, coef in term.terms:
            acc[e + shift] = acc.get(e + shift, 0) + coef
    return LaurentPolynomial(acc)


# ---------------------------------------------------------------------------
# sweep evaluator


def _sweep_order(d: PlanarDiagram) -> list[int]:
    """Greedy crossing order keeping the number of dangling edges small."""
    xs = d.crossings
    by_edge: dict[int, list[int]] = {}
    for k, x in enumerate(xs):
        for e in (x.a, x.b, x.c, x.d):
            by_edge.setdefault(e, []).append(k)
    done = [False] * len(xs)
    open_count: dict[int, int] = {}
    order = []
    start = min(range(len(xs)), key=lambda k: (xs[k].row, xs[k].col)) if xs else 0
    frontier_score = [0] * len(xs)
    candidates = {start}
    while len(order) < len(xs):
        if not candidates:
            candidates = {k for k in range(len(xs)) if not done[k]}
        best = max(candidates, key=lambda k: (frontier_score[k], -k))
        candidates.discard(best)
        done[best] = True
        order.append(best)
        x = xs[best]
        for e in (x.a, x.b, x.c, x.d):
            open_count[e] = open_count.get(e, 0) + 1
            for k in by_edge[e]:
                if not done[k]:
                    frontier_score[k] += 1
                    candidates.add(k)
    return order


def kauffman_bracket(d: PlanarDiagram, max_crossings: int | None = CROSSING_CAP) -> LaurentPolynomial:
    """Kauffman bracket with ``<unknot> = 1``, evaluated by a crossing sweep."""
    _check_cap(d, max_crossings)
    xs = d.crossings
    if not xs:
        return LOOP ** (d.free_loops - 1) if d.free_loops else ONE
    loop = {2: -1, -2: -1}
    # state: frozenset of dangling pairings -> {exp: coeff}
    states: dict[frozenset, dict[int, int]] = {frozenset(): {0: 1}}
    for k in _sweep_order(d):
        x = xs[k]
        smoothings = (((x.a, x.b), (x.c, x.d), 1), ((x.a, x.d), (x.b, x.c), -1))
        new: dict[frozenset, dict[int, int]] = {}
        for key, poly in states.items():
            match = {}
            for p, q in key:
                match[p] = q
                match[q] = p
            for pair1, pair2, power in smoothings:
                m = dict(match)
                loops = 0
                for u, v in (pair1, pair2):
                    if u == v:
                        loops += 1
                        continue
                    pu = m.pop(u, None)
                    pv = m.pop(v, None)
                    if pu is None and pv is None:
                        m[u] = v
                        m[v] = u
                    elif pv is None:
                        m[pu] = v
                        m[v] = pu
                    elif pu is None:
                        m[pv] = u
                        m[u] = pv
                    elif pu == v:
                        loops += 1
                    else:
                        m[pu] = pv
                        m[pv] = pu
                nkey = frozenset((p, q) for p, q in m.items() if p < q)
                term = {e + power: c for e, c in poly.items()}
                for _ in range(loops):
                    nxt: dict[int, int] = {}
                    for e, c in term.items():
                        for le, lc in loop.items():
                            nxt[e + le] = nxt.get(e + le, 0) + c * lc
                    term = nxt
                tgt = new.setdefault(nkey, {})
                for e, c in term.items():
                    v = tgt.get(e, 0) + c
                    if v:
                        tgt[e] = v
                    else:
                        tgt.pop(e, None)
        states = new
    total = LaurentPolynomial(states.get(frozenset(), {}))
    # the sweep counts every closed loop; <unknot> = 1 removes one of them
    total = total.exact_div(LOOP)
    if d.free_loops:
        total = total * LOOP ** d.free_loops
    return total


def writhe_normalize(bracket: LaurentPolynomial, writhe: int) -> LaurentPolynomial:
    """``(-A^3)^(-w) * bracket``."""
    sign = -1 if writhe % 2 else 1
    return LaurentPolynomial({e - 3 * writhe: sign * c for e, c in bracket.terms})


def jones(d: PlanarDiagram, max_crossings: int | None = CROSSING_CAP) -> LaurentPolynomial:
    """Writhe-normalized bracket ``f(A)``; equals ``V(t)`` at ``t = A^-4``."""
    return writhe_normalize(kauffman_bracket(d, max_crossings), d.writhe)


def jones_to_t(f: LaurentPolynomial) -> dict[Fraction, int]:
    """Exponents of ``V(t)`` (may be half-integers for links)."""
    return {Fraction(-e, 4): c for e, c in f.terms}


def jones_from_t(terms: dict) -> LaurentPolynomial:
    """Build ``f(A)`` from ``{t_exponent: coeff}``."""
    out = {}
    for e, c in terms.items():
        a = -4 * Fraction(e)
        if a.denominator != 1:
            raise ValueError(f"t-exponent {e} is not a multiple of 1/4")
        out[int(a)] = out.get(int(a), 0) + c
    return LaurentPolynomial(out)


# ---------------------------------------------------------------------------
# Alexander polynomial


def _alexander_matrix(d: PlanarDiagram) -> list[list[tuple[int, int]]]:
    """Rows of the Fox matrix as ``(const, t-coeff)`` pairs per arc."""
    xs = d.crossings
    c = len(xs)
    # arcs: walk edges in order, a new arc starts after each under-crossing
    under_out = {x.c: k for k, x in enumerate(xs)}
    n_e = d.n_edges
    arc_of_edge = [0] * n_e
    start = xs[0].c
    arc = 0
    e = start
    for _ in range(n_e):
        arc_of_edge[e] = arc
        e = (e + 1) % n_e
        if e in under_out:
            arc += 1
    # arc count equals crossing count; the last arc wraps onto the first
    arc_of_edge = [a % c for a in arc_of_edge]
    rows = []
    for x in xs:
        row = [(0, 0)] * c
        k_over = arc_of_edge[x.b]
        i_in = arc_of_edge[x.a]
        j_out = arc_of_edge[x.c]

        def add(col, const, lin):
            a0, a1 = row[col]
            row[col] = (a0 + const, a1 + lin)

        if x.sign > 0:
            add(k_over, 1, -1)   # 1 - t
            add(i_in, 0, 1)      # t
            add(j_out, -1, 0)    # -1
        else:
            add(k_over, -1, 1)   # t - 1
            add(i_in, 1, 0)      # 1
            add(j_out, 0, -1)    # -t
        rows.append(row)
    return rows


def _int_det(m: list[list[int]]) -> int:
    """Bareiss fraction-free determinant."""
    m = [row[:] for row in m]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for r in range(k + 1, size):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, size):
            mi = m[i]
            mik = mi[k]
            mk = m[k]
            for j in range(k + 1, size):
                mi[j] = (pivot * mi[j] - mik * mk[j]) // prev
        prev = pivot
    return sign * m[-1][-1]


def alexander(d: PlanarDiagram) -> LaurentPolynomial:
    """Symmetrized Alexander polynomial with ``Delta(1) = 1``."""
    if d.components != 1:
        raise NotAKnot(f"Alexander polynomial needs a knot, got {d.components} components")
    c = len(d.crossings)
    if c <= 1:
        return ONE
    rows = _alexander_matrix(d)
    minor = [row[:-1] for row in rows[:-1]]
    size = c - 1
    # Kronecker substitution: evaluate at t = 2^bits and read off balanced digits.
    # Each row's coefficients have absolute sum <= 4, which bounds every
    # coefficient of the determinant by 4^size.
    bound = 4 ** size
    bits = bound.bit_length() + 2
    base = 1 << bits
    value = _int_det([[a0 + a1 * base for a0, a1 in row] for row in minor])
    coeffs = {}
    e = 0
    half = base >> 1
    while value:
        digit = value & (base - 1)
        if digit >= half:
            digit -= base
        value = (value - digit) >> bits
        if digit:
            coeffs[e] = digit
        e += 1
    poly = LaurentPolynomial(coeffs)
    if poly.is_zero():
        raise ValueError("degenerate Alexander matrix")
    span = poly.max_exp - poly.min_exp
    poly = poly.shift(-poly.min_exp - span // 2)
    if poly.at_one() < 0:
        poly = -poly
    return poly


# ---------------------------------------------------------------------------
# identification key


@dataclass(frozen=True)
class InvariantKey:
    jones: LaurentPolynomial
    alexander: LaurentPolynomial

    def mirror(self) -> "InvariantKey":
        return InvariantKey(self.jones.substitute_power(-1), self.alexander)

    def to_dict(self) -> dict:
        return {"jones": str(self.jones), "alexander": str(self.alexander)}

    @classmethod
    def from_dict(cls, data: dict) -> "InvariantKey":
        return cls(LaurentPolynomial.parse(data["jones"]), LaurentPolynomial.parse(data["alexander"]))


def planar_for_key(g: GridDiagram) -> PlanarDiagram:
    """Planar diagram of the cyclic translate of ``g`` with fewest crossings."""
    return to_planar(min_crossing_translate(g))


def key(g: GridDiagram, max_crossings: int | None = CROSSING_CAP) -> InvariantKey:
    d = planar_for_key(g)
    return InvariantKey(jones(d, max_crossings), alexander(d))
