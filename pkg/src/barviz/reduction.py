"""Test digraphs f(H) for cubic triangle-free H, Hamiltonian cycles at desk
scale, the two-bar certificate layout and the t-bar lift gadget.

Vertex ids of f(H): H keeps ``0..n-1``; copies H1, H2, H3 of K~_{5,3}
follow at ``n``, ``n+8``, ``n+16`` and M_v starts at ``n+24+8v``.  Inside a
copy, locals 0..4 form the 5-side (sources) and 5..7 the 3-side (sinks).
"""
from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction

from .errors import (AssemblyOverflow, BadOrientation, BadT, InvalidInput,
                     NotCubicTriangleFree, NotHamiltonianOfSource, SizeLimit)
from .geometry import Bar, Layout, verify_layout
from .graphs import (A_TO_B, Digraph, Graph, oriented_complete_bipartite,
                     validate_cubic_triangle_free)
from .intervals import k53_gadget
from .recognize import size_cap

COPY = 8
_K53 = oriented_complete_bipartite(5, 3, A_TO_B)
SOURCE_END, SINK_END = 0, 5  # default local ids for gadget ends

DEFAULT_HAMILTON_CAP = 24


@dataclass(frozen=True)
class TestDigraph:
    digraph: Digraph
    H: Graph
    orientation: Digraph
    z: int

    __test__ = False  # not a pytest class

    @property
    def n(self) -> int:
        return self.H.n

    def copy_base(self, name: str) -> int:
        return self.n + {"H1": 0, "H2": COPY, "H3": 2 * COPY}[name]

    def copy_vertices(self, name: str) -> list[int]:
        b = self.copy_base(name)
        return list(range(b, b + COPY))

    def m_base(self, v: int) -> int:
        return self.n + 3 * COPY + COPY * v

    def m_vertices(self, v: int) -> list[int]:
        b = self.m_base(v)
        return list(range(b, b + COPY))

    @property
    def s1(self) -> int:
        return self.copy_base("H1") + SINK_END

    @property
    def t2(self) -> int:
        return self.copy_base("H2") + SOURCE_END

    @property
    def s2(self) -> int:
        return self.copy_base("H2") + SINK_END

    @property
    def t3(self) -> int:
        return self.copy_base("H3") + SOURCE_END

    def prime(self, v: int) -> int:
        """The vertex v' of M_v receiving the arc from v."""
        return self.m_base(v) + SOURCE_END

    def roles(self) -> list[tuple[str, int]]:
        out = [("s1", self.s1), ("s2", self.s2), ("t2", self.t2), ("t3", self.t3), ("z", self.z)]
        for name in ("H1", "H2", "H3"):
            out.append((name, self.copy_base(name)))
        for v in range(self.n):
            out.append((f"M{v}", self.m_base(v)))
            out.append((f"prime{v}", self.prime(v)))
        return out


@dataclass(frozen=True)
class HamCycle:
    order: tuple

    def edges(self) -> set[tuple[int, int]]:
        k = len(self.order)
        return {tuple(sorted((self.order[i], self.order[(i + 1) % k]))) for i in range(k)}

    def is_valid_for(self, H: Graph) -> bool:
        return (len(self.order) == H.n and set(self.order) == set(range(H.n))
                and H.n >= 3 and self.edges() <= H.edges)


def build_test_digraph(H: Graph, z: int = 0, seed_orientation: Digraph | None = None) -> TestDigraph:
    if not validate_cubic_triangle_free(H):
        raise NotCubicTriangleFree("H must be 3-regular and triangle-free")
    if not 0 <= z < H.n:
        raise InvalidInput(f"z={z} is not a vertex of H")
    D = H.orient() if seed_orientation is None else seed_orientation
    if D.n != H.n or D.underlying() != H or len(D.arcs) != len(H.edges):
        raise BadOrientation("seed orientation must orient exactly the edges of H")
    n = H.n
    total = 9 * n + 24
    arcs = set(D.arcs)

    def add_copy(base):
        arcs.update((base + a, base + b) for a, b in _K53.arcs)

    T = TestDigraph(Digraph(total), H, D, z)
    for name in ("H1", "H2", "H3"):
        add_copy(T.copy_base(name))
    arcs |= {(T.s1, T.t2), (T.s2, T.t3)}
    for v in range(n):
        add_copy(T.m_base(v))
        arcs |= {(v, T.prime(v)), (T.s1, v), (v, T.t2)}
    arcs |= {(z, x) for x in T.copy_vertices("H2") + T.copy_vertices("H3")}
    for x in T.m_vertices(z):
        arcs |= {(T.s1, x), (x, T.t2)}
    return TestDigraph(Digraph(total, frozenset(arcs)), H, D, z)


def expected_size(n: int) -> tuple[int, int]:
    return 9 * n + 24, 39 * n // 2 + 78


# ---------------------------------------------------------------------------
# Hamiltonian cycles
# ---------------------------------------------------------------------------

def hamiltonian_cycle(H: Graph, cap: int | None = None) -> HamCycle | None:
    """Backtracking from vertex 0; prunes when an unvisited vertex has fewer
    than two usable neighbours left."""
    cap = size_cap(DEFAULT_HAMILTON_CAP) if cap is None else cap
    n = H.n
    if n > cap:
        raise SizeLimit(f"{n} vertices exceeds the Hamiltonian search cap {cap}")
    if n < 3:
        return None
    adj = [sorted(a) for a in H.adjacency()]
    if any(len(a) < 2 for a in adj):
        return None
    path = [0]
    on = [False] * n
    on[0] = True
    sys.setrecursionlimit(max(1000, 4 * n + 100))

    def feasible():
        end = path[-1]
        for v in range(n):
            if on[v]:
                continue
            free = sum(1 for w in adj[v] if not on[w] or w == end or w == 0)
            if free < 2:
                return False
        return True

    def extend():
        if len(path) == n:
            return 0 in adj[path[-1]]
        for w in adj[path[-1]]:
            if on[w]:
                continue
            on[w] = True
            path.append(w)
            if feasible() and extend():
                return True
            path.pop()
            on[w] = False
        return False

    return HamCycle(tuple(path)) if extend() else None


# ---------------------------------------------------------------------------
# the two-bar certificate layout
# ---------------------------------------------------------------------------

def _gadget(base: int, left: int, right: int, x0, y0) -> list[Bar]:
    """k53 copy at ``base`` with local ``left``/``right`` owning the end bars."""
    L = k53_gadget(left, right, A_TO_B)
    return [Bar(base + b.vertex, y0 + b.y, x0 + b.x_lo, x0 + b.x_hi) for b in L.bars]


def _extend(bars: list[Bar], vertex: int, lo=None, hi=None) -> list[Bar]:
    """Stretch the leftmost (``lo``) or rightmost (``hi``) bar of ``vertex``."""
    own = [i for i, b in enumerate(bars) if b.vertex == vertex]
    if lo is not None:
        i = min(own, key=lambda k: bars[k].x_lo)
        b = bars[i]
        bars[i] = Bar(b.vertex, b.y, min(b.x_lo, lo), b.x_hi)
    if hi is not None:
        i = max(own, key=lambda k: bars[k].x_hi)
        b = bars[i]
        bars[i] = Bar(b.vertex, b.y, b.x_lo, max(b.x_hi, hi))
    return bars


def _cycle_from(c: HamCycle, z: int) -> list[int]:
    k = c.order.index(z)
    return list(c.order[k:] + c.order[:k])


def two_bar_layout(T: TestDigraph, c: HamCycle, check: bool = True) -> Layout:
    """Two bars per vertex realizing f(H), built from a Hamiltonian cycle of H.

    Layout plan, left to right:
      * matched pairs not touching z, each in its own block at negative x;
      * H1 on levels 0/1 with s1 stretched rightwards over the whole band;
      * M_z inside the band (1, 10), its v' stretched to meet z's first bar;
      * the cycle as a staircase of overlapping bars z, c1, ..., c_{n-1}, z
        inside the band, every bar seeing s1 below and t2 above;
      * H2 on levels 10/11 (t2 stretched left over the band), H3 on 12/13;
      * z's second bar stretched under H2 and H3, then the edge from z to its
        matched partner and that partner's M_u.
    """
    H, D, z, n = T.H, T.orientation, T.z, T.n
    if not c.is_valid_for(H):
        raise NotHamiltonianOfSource("cycle is not a Hamiltonian cycle of H")
    W = k53_gadget(SOURCE_END, SINK_END).x_extent()[1]
    bars: list[Bar] = []

    def up(u, w):
        """Level step  from u to w: +1 when the arc points u -> w."""
        return 1 if (u, w) in D.arcs else -1

    matching = sorted(tuple(sorted(e)) for e in H.edges - c.edges())
    z_mate = next(w for e in matching if z in e for w in e if w != z)
    others = [e for e in matching if z not in e]

    # matched pairs at negative x
    X = Fraction(0)
    for u, w in others:
        X -= 2 * W + 30
        mw, mu = T.m_base(w), T.m_base(u)
        bars += _extend(_gadget(mw, SINK_END, SOURCE_END, X, 1), T.prime(w), hi=X + W + 4)
        bars.append(Bar(w, 0, X + W + 1, X + W + 8))
        yu = up(w, u)
        bars.append(Bar(u, yu, X + W + 7, X + W + 14))
        block = _gadget(mu, SOURCE_END, SINK_END, X + W + 20, yu + 1)
        bars += _extend(block, T.prime(u), lo=X + W + 11)

    # staircase for the cycle
    seq = _cycle_from(c, z) + [z]
    h = [0]
    for a, b in zip(seq, seq[1:]):
        h.append(h[-1] + up(a, b))
    lo_h, hi_h = min(h), max(h)
    span = hi_h - lo_h + 2

    def band(k):
        # strictly inside (1, 10), leaving room above z's first bar for M_z
        return 1 + Fraction(9 * (h[k] - lo_h + 1), span + 1)

    y0 = band(0)
    Mz0 = W + 10
    P0 = Mz0 + W + 3
    H2x = P0 + 5 * n + 10
    H3x = H2x + W + 10
    ZR = H3x + W + 5

    h1 = _gadget(T.copy_base("H1"), SOURCE_END, SINK_END, 0, 0)
    bars += _extend(h1, T.s1, hi=P0 + 5 * n + 3)

    step = (10 - y0) / 3
    mz = [Bar(b.vertex, y0 + step * (1 + (b.y - Fraction(0))), b.x_lo, b.x_hi)
          for b in _gadget(T.m_base(z), SINK_END, SOURCE_END, Mz0, 0)]
    bars += _extend(mz, T.prime(z), hi=P0 + 3)

    for i, v in enumerate(seq):
        x_hi = P0 + 5 * i + 6
        if i == n:
            x_hi = ZR
        bars.append(Bar(v, band(i), P0 + 5 * i, x_hi))

    h2 = _gadget(T.copy_base("H2"), SOURCE_END, SINK_END, H2x, 10)
    h2 = _extend(h2, T.t2, lo=W + 5)
    bars += _extend(h2, T.s2, hi=H2x + W + 6)
    h3 = _gadget(T.copy_base("H3"), SOURCE_END, SINK_END, H3x, 12)
    bars += _extend(h3, T.t3, lo=H2x + W + 3)

    # the edge z - z_mate on the right flank
    yz = band(n)
    y_mate = yz + up(z, z_mate) * Fraction(1, 2)
    bars.append(Bar(z_mate, y_mate, ZR - 2, ZR + 4))
    mu = _gadget(T.m_base(z_mate), SOURCE_END, SINK_END, ZR + 10, y_mate + 1)
    bars += _extend(mu, T.prime(z_mate), lo=ZR + 1)

    L = Layout(tuple(bars), 2)
    if L.max_bars_per_vertex() > 2:
        raise AssemblyOverflow("a vertex received more than two bars")
    if check:
        diff = verify_layout(L, T.digraph)
        if not diff.ok:
            raise AssemblyOverflow(f"assembled layout is wrong: missing={sorted(diff.missing)[:5]} "
                                   f"extra={sorted(diff.extra)[:5]}")
    return L


# ---------------------------------------------------------------------------
# lift to t bars
# ---------------------------------------------------------------------------

def lift_gadget(G: Digraph, t: int) -> Digraph:
    """Attach three copies of K_{t^2+t-1, t+1} to every vertex of G.

    For vertex v the central copy's first big-side vertex is joined to v; its
    second big-side vertex and its first small-side vertex (adjacent in the
    copy) are joined to the first big-side vertex of the two side copies.
    Copy arcs point from the big side to the small side, connectors from the
    lower id to the higher id.
    """
    if t < 2:
        raise BadT("t must be at least 2")
    a, b = t * t + t - 1, t + 1
    size = a + b
    K = oriented_complete_bipartite(a, b, A_TO_B)
    arcs = set(G.arcs)
    nxt = G.n
    for v in range(G.n):
        central, side1, side2 = nxt, nxt + size, nxt + 2 * size
        nxt += 3 * size
        for base in (central, side1, side2):
            arcs.update((base + x, base + y) for x, y in K.arcs)
        for p, q in ((v, central), (central + 1, side1), (central + a, side2)):
            arcs.add((min(p, q), max(p, q)))
    return Digraph(nxt, frozenset(arcs))


__all__ = [
    "TestDigraph", "HamCycle", "build_test_digraph", "expected_size", "hamiltonian_cycle",
    "two_bar_layout", "lift_gadget",
]
