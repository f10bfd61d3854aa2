"""Multiple-interval representations and their conversion to two-level bars."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (DepthExceeded, InvalidInput, NotOneWayBipartite, NotSpanning,
                     NotTriangleFree, SameSide, WrongRealization)
from .geometry import Bar, Layout, Q, reflect_x, relabel
from .graphs import (A_TO_B, B_TO_A, Digraph, Graph, has_triangle, is_one_way_bipartite,
                     oriented_complete_bipartite)


def _merge(ivs):
    out = []
    for lo, hi in sorted((Q(a), Q(b)) for a, b in ivs):
        if lo > hi:
            raise InvalidInput(f"empty interval [{lo}, {hi}]")
        if out and lo <= out[-1][1]:
            out[-1] = (out[-1][0], max(out[-1][1], hi))
        else:
            out.append((lo, hi))
    return tuple(out)


@dataclass(frozen=True)
class IntervalRep:
    """``intervals[v]`` lists the closed intervals of vertex v, sorted and disjoint."""

    intervals: tuple
    t: int = 1

    def __post_init__(self):
        object.__setattr__(self, "intervals", tuple(_merge(iv) for iv in self.intervals))

    @property
    def n(self) -> int:
        return len(self.intervals)

    def interval_count(self) -> int:
        return sum(len(iv) for iv in self.intervals)

    def endpoints(self) -> list[Fraction]:
        return sorted({p for iv in self.intervals for seg in iv for p in seg})


@dataclass(frozen=True)
class DepthProfile:
    depth: int
    witness: Fraction | None


def realized_interval_graph(R: IntervalRep) -> Graph:
    """Edges between vertices owning intersecting closed intervals (touching counts)."""
    segs = sorted((lo, hi, v) for v, iv in enumerate(R.intervals) for lo, hi in iv)
    edges = set()
    for i, (lo, hi, v) in enumerate(segs):
        for lo2, hi2, w in segs[i + 1:]:
            if lo2 > hi:
                break
            if v != w:
                edges.add((min(v, w), max(v, w)))
    return Graph(R.n, frozenset(edges))


def depth(R: IntervalRep) -> DepthProfile:
    best, where = 0, None
    for p in R.endpoints():
        c = sum(1 for iv in R.intervals if any(lo <= p <= hi for lo, hi in iv))
        if c > best:
            best, where = c, p
    return DepthProfile(best, where)


def _min_gap(points) -> Fraction:
    pts = sorted(set(points))
    gaps = [b - a for a, b in zip(pts, pts[1:])]
    return min(gaps) if gaps else Fraction(1)


def _remove_edge(ivs: list[list[tuple]], u: int, v: int):
    """Separate the intervals of u and v in place, never touching other vertices."""
    while True:
        hit = next(((i, j) for i, I in enumerate(ivs[u]) for j, J in enumerate(ivs[v])
                    if I[0] <= J[1] and J[0] <= I[1]), None)
        if hit is None:
            return
        i, j = hit
        (a, b), (c, d) = ivs[u][i], ivs[v][j]
        delta = _min_gap([p for vv in ivs for seg in vv for p in seg]) / 3
        if c <= a and b <= d:
            _drop(ivs, u, i)
        elif a <= c and d <= b:
            _drop(ivs, v, j)
        elif a < c:
            # u's interval sticks out to the left, v's to the right
            ivs[u][i] = (a, c - delta)
            ivs[v][j] = (b + delta, d)
        else:
            ivs[v][j] = (c, a - delta)
            ivs[u][i] = (d + delta, b)


def _drop(ivs, v, k):
    if len(ivs[v]) > 1:
        del ivs[v][k]
        return
    # last interval of v: park a point interval past everything else
    far = max(p for vv in ivs for seg in vv for p in seg) + 1
    ivs[v][k] = (far, far)


def prune_to_subgraph(R: IntervalRep, H: Graph, H_sub: Graph, trace=None) -> IntervalRep:
    """Turn a representation of triangle-free H into one of its spanning subgraph.

    Each removed edge uv is cut by deleting a contained interval or trimming
    an overlap; triangle-freeness guarantees the trimmed points carry no
    third vertex.  ``trace`` (a list) receives the intermediate reps.
    """
    if realized_interval_graph(R) != H:
        raise WrongRealization("representation does not realize H")
    if has_triangle(H):
        raise NotTriangleFree("H contains a triangle")
    if H_sub.n != H.n or not H_sub.edges <= H.edges:
        raise NotSpanning("H_sub is not a spanning subgraph of H")
    ivs = [list(iv) for iv in R.intervals]
    for u, v in sorted(H.edges - H_sub.edges):
        _remove_edge(ivs, u, v)
        if trace is not None:
            trace.append(IntervalRep(tuple(tuple(iv) for iv in ivs), R.t))
    return IntervalRep(tuple(tuple(iv) for iv in ivs), R.t)


def interval_to_bars(R: IntervalRep, D: Digraph) -> Layout:
    """Two-level layout of a one-way bipartite orientation D of R's graph.

    Sources sit at y=0 and sinks at y=1.  Every interval is widened by a
    third of the smallest gap between distinct endpoints, so point contacts
    become positive-width channels while disjoint intervals stay disjoint.
    """
    if not is_one_way_bipartite(D):
        raise NotOneWayBipartite("some vertex has both in- and out-arcs")
    d = depth(R).depth
    if d > 2:
        raise DepthExceeded(f"depth {d} > 2")
    if realized_interval_graph(R) != D.underlying():
        raise WrongRealization("intervals do not realize the underlying graph of D")
    heads = {w for _, w in D.arcs}
    eps = _min_gap(R.endpoints()) / 3
    bars = []
    for v, iv in enumerate(R.intervals):
        y = 1 if v in heads else 0
        bars += [Bar(v, y, lo - eps, hi + eps) for lo, hi in iv]
    return Layout(tuple(bars), max(R.t, max((len(iv) for iv in R.intervals), default=1)))


# ---------------------------------------------------------------------------
# the K~_{5,3} gadget
# ---------------------------------------------------------------------------

# Ids 0..4 form the 5-side, 5..7 the 3-side.  The 3-side owns six "spine"
# intervals in the order 5 6 7 5 6 7; each 5-side vertex owns one connector
# bridging two consecutive spines and one leaf inside a spine of the third
# 3-side vertex.  The intersection tree has 16 nodes and 15 distinct pairs.
# Spine 5 at [0,8] is the unique leftmost interval and the leaf of 3 hanging
# off the last spine is the unique rightmost one.
K53_TEMPLATE = IntervalRep((
    ((7, 11), (23, 25)),
    ((17, 21), (3, 5)),
    ((27, 31), (13, 15)),
    ((37, 41), (57, 62)),
    ((47, 51), (33, 35)),
    ((0, 8), (30, 38)),
    ((10, 18), (40, 48)),
    ((20, 28), (50, 58)),
), 2)
K53_LEFT, K53_RIGHT = 5, 3
K53_SIDE5 = range(0, 5)
K53_SIDE3 = range(5, 8)


def k53_gadget(u: int, v: int, orient: str = A_TO_B, mirror: bool = False) -> Layout:
    """Displayed two-bar layout of K~_{5,3} with u's bar leftmost and v's rightmost.

    The digraph is ``oriented_complete_bipartite(5, 3, orient)``; u and v must
    come from opposite sides.  ``mirror`` reflects the result, swapping ends.
    """
    side = {w: (0 if w in K53_SIDE5 else 1) for w in range(8)}
    if u not in side or v not in side:
        raise InvalidInput("gadget vertices are 0..7")
    if side[u] == side[v]:
        raise SameSide(f"{u} and {v} lie on the same side")
    D = oriented_complete_bipartite(5, 3, orient)
    base = interval_to_bars(K53_TEMPLATE, D)
    flipped = side[u] == 0
    if flipped:
        base = reflect_x(base)
        left, right = K53_RIGHT, K53_LEFT
    else:
        left, right = K53_LEFT, K53_RIGHT
    perm = list(range(8))
    perm[left], perm[u] = perm[u], perm[left]
    perm[right], perm[v] = perm[v], perm[right]
    # perm is an involution on each side, so it maps template slots to targets
    out = relabel(base, perm)
    lo = out.x_extent()[0]
    out = Layout(tuple(Bar(b.vertex, b.y, b.x_lo - lo, b.x_hi - lo) for b in out.bars), 2)
    return reflect_x(out) if mirror else out


__all__ = [
    "IntervalRep", "DepthProfile", "realized_interval_graph", "depth", "prune_to_subgraph",
    "interval_to_bars", "k53_gadget", "K53_TEMPLATE", "A_TO_B", "B_TO_A",
]
