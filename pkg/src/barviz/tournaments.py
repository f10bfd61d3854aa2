"""Transitive tournaments: spanning-path decompositions, the quarter layout,
the two-vertex lift and the table of known bounds on b(T_n).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from functools import lru_cache

from .errors import BadSize, InvalidInput
from .geometry import Bar, Layout, combine, restrict_layout, translate, verify_layout
from .graphs import Digraph, transitive_tournament
from .recognize import construct_1bar


@dataclass(frozen=True)
class PathDecomposition:
    """Spanning paths of K_{2m} on labels ``1..2m``.

    ``paths[i-1]`` is the i-th path as a label sequence and ``central[i-1]``
    its middle edge.
    """

    m: int
    paths: tuple
    central: tuple

    def edge_multiset(self) -> list[tuple[int, int]]:
        return [tuple(sorted(e)) for p in self.paths for e in zip(p, p[1:])]


def path_decomposition(m: int) -> PathDecomposition:
    if m < 1:
        raise InvalidInput("m must be positive")
    size = 2 * m

    def label(k):
        return (k - 1) % size + 1

    paths, central = [], []
    for i in range(1, m + 1):
        seq = [i]
        for j in range(1, m):
            seq += [i + j, i - j]
        seq.append(i + m)
        paths.append(tuple(label(k) for k in seq))
        central.append((label(i + (m + 1) // 2), label(i - m // 2)))
    return PathDecomposition(m, tuple(paths), tuple(central))


@dataclass(frozen=True)
class QuarterPieces:
    """Decomposition of T_{4m} into m one-bar-representable spanning pieces.

    Vertex ids are 0-based (id k stands for v_{k+1}).  ``A[j-1]`` is the id
    playing x_j inside A, and ``B`` likewise.  ``matched[i]`` holds the two
    endpoints of the central edge joined to all of B in piece i.
    """

    n: int
    A: tuple
    B: tuple
    pieces: tuple
    matched: tuple
    q_paths: tuple


def build_quarter_pieces(n: int) -> QuarterPieces:
    if n < 4 or n % 4:
        raise BadSize(f"n={n} is not a positive multiple of 4")
    m = n // 4
    a_labels = tuple(range(m)) + tuple(range(3 * m, 4 * m))
    b_labels = tuple(range(m, 3 * m))
    dec = path_decomposition(m)

    def orient(u, v):
        return (u, v) if u < v else (v, u)

    pieces, matched, q_paths = [], [], []
    for i in range(m):
        p = [a_labels[x - 1] for x in dec.paths[i]]
        q = [b_labels[x - 1] for x in dec.paths[i]]
        e = tuple(a_labels[x - 1] for x in dec.central[i])
        arcs = {orient(u, v) for u, v in zip(p, p[1:])}
        arcs |= {orient(u, v) for u, v in zip(q, q[1:])}
        arcs |= {orient(a, b) for a in e for b in b_labels}
        pieces.append(Digraph(n, frozenset(arcs)))
        matched.append(e)
        q_paths.append(tuple(q))
    return QuarterPieces(n, a_labels, b_labels,
                         tuple(pieces), tuple(matched), tuple(q_paths))


def build_Gi(n: int, i: int) -> Digraph:
    """The i-th piece (1-based) of the decomposition of T_n."""
    pieces = build_quarter_pieces(n).pieces
    if not 1 <= i <= len(pieces):
        raise InvalidInput(f"piece index {i} outside 1..{len(pieces)}")
    return pieces[i - 1]


@lru_cache(maxsize=None)
def _quarter_layout_full(n: int) -> Layout:
    pieces = build_quarter_pieces(n).pieces
    placed = []
    cursor = 0
    for G in pieces:
        L = construct_1bar(G)
        lo, hi = L.x_extent()
        placed.append(translate(L, cursor - lo, 0))
        cursor += hi - lo + 1
    return combine(placed, t=len(pieces))


def quarter_layout(n: int) -> Layout:
    """A layout of T_n with at most ceil(n/4) bars per vertex.

    T_{4m} is split into m pieces, each drawn with one bar per vertex in its
    own x-strip; for other n the highest-index vertices are deleted, which
    cannot create visibilities in a transitive tournament.
    """
    if n < 1:
        raise InvalidInput("n must be positive")
    full = _quarter_layout_full(4 * math.ceil(n / 4))
    if full.n == n:
        return full
    return restrict_layout(full, range(n))


def lift_layout(L: Layout, check: bool = True) -> Layout:
    """From a layout of T_n build one of T_{n+2}: new source 0, new sink n+1.

    Old vertex i becomes i+1 and gains one bar in a fresh block to the right.
    """
    n = L.n
    if check and not verify_layout(L, transitive_tournament(max(n, 1))).ok:
        raise InvalidInput("input layout does not realize a transitive tournament")
    shifted = Layout(tuple(Bar(b.vertex + 1, b.y, b.x_lo, b.x_hi) for b in L.bars), L.t)
    x0 = L.x_extent()[1] + 1 if L.bars else 0
    block = [Bar(0, 0, x0, x0 + n + 1), Bar(n + 1, 2, x0, x0 + n + 1)]
    block += [Bar(i, 1, x0 + i - 1, x0 + i) for i in range(1, n + 1)]
    return Layout(shifted.bars + tuple(block), L.t + 1)


# ---------------------------------------------------------------------------
# bounds on b(T_n)
# ---------------------------------------------------------------------------

KNOWN_VALUE = "known-value"
EULER_WASTE = "derived-graph-count"
COMPLETE_GRAPH = "complete-graph-sixth"
QUARTER = "quarter-construction"
TRIVIAL = "trivial"

# exact values: small cases from the literature, 11/12/17 from the
# derived-graph count combined with the two-vertex lift
_EXACT = {**{n: 1 for n in range(1, 5)}, **{n: 2 for n in range(5, 11)},
          11: 3, 12: 3, 13: 3, 14: 3, 15: 3, 17: 4}


@dataclass(frozen=True)
class BoundsReport:
    n: int
    lower: int
    upper: int
    lower_source: str
    upper_source: str


def waste_bound_ceiling(n: int) -> int | None:
    """Exact ceil((3n - 5 - sqrt(7n^2 - 28n + 25)) / 2), or None for n < 3.

    k satisfies 2k >= a - sqrt(D) iff a - 2k <= 0 or (a - 2k)^2 <= D, which
    is monotone in k, so the smallest such k is found with integer arithmetic.
    """
    if n < 3:
        return None
    a = 3 * n - 5
    D = 7 * n * n - 28 * n + 25
    k = (a - math.isqrt(D)) // 2 - 1
    while not (a - 2 * k <= 0 or (a - 2 * k) ** 2 <= D):
        k += 1
    return k


def waste_bound_decimal(n: int, places: int = 4) -> Decimal:
    """The same bound as a decimal rounded to ``places`` digits."""
    with localcontext() as ctx:
        ctx.prec = 50
        a = Decimal(3 * n - 5)
        D = Decimal(7 * n * n - 28 * n + 25)
        return ((a - D.sqrt()) / 2).quantize(Decimal(1).scaleb(-places))


def bounds_Tn(n: int) -> BoundsReport:
    if n < 1:
        raise InvalidInput("n must be positive")
    # candidates in tie-break priority order: earlier entries win ties
    lowers = []
    w = waste_bound_ceiling(n)
    if w is not None:
        lowers.append((w, EULER_WASTE))
    if n >= 7:
        lowers.append((-(-n // 6), COMPLETE_GRAPH))
    if n in _EXACT:
        lowers.append((_EXACT[n], KNOWN_VALUE))
    lowers.append((1, TRIVIAL))
    lower, lower_source = max(lowers, key=lambda c: c[0])

    uppers = [(-(-n // 4), QUARTER)]
    if n in _EXACT:
        uppers.append((_EXACT[n], KNOWN_VALUE))
    upper, upper_source = min(uppers, key=lambda c: c[0])
    return BoundsReport(n, lower, upper, lower_source, upper_source)
