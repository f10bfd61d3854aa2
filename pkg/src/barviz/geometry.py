"""Exact bar layouts and positive-width visibility.

Coordinates are :class:`fractions.Fraction`.  Bars are closed horizontal
segments; two bars see each other when some open vertical strip of positive
width lies inside both x-projections and meets no bar at an intermediate
level.  Touching endpoints never produce a visibility.
"""
from __future__ import annotations

import bisect
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InvalidLayout
from .graphs import Digraph, Graph


def Q(value) -> Fraction:
    """Coerce ints, strings like ``"3/4"`` and Fractions to a Fraction (no floats)."""
    if isinstance(value, float):
        raise TypeError("floats are not accepted as coordinates")
    return Fraction(value)


@dataclass(frozen=True, order=True)
class Bar:
    vertex: int
    y: Fraction
    x_lo: Fraction
    x_hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "vertex", int(self.vertex))
        for name in ("y", "x_lo", "x_hi"):
            object.__setattr__(self, name, Q(getattr(self, name)))

    @property
    def length(self) -> Fraction:
        return self.x_hi - self.x_lo


@dataclass(frozen=True)
class Layout:
    bars: tuple = ()
    t: int = 1

    def __post_init__(self):
        object.__setattr__(self, "bars", tuple(self.bars))

    @property
    def n(self) -> int:
        return max((b.vertex for b in self.bars), default=-1) + 1

    def vertices(self) -> list[int]:
        return sorted({b.vertex for b in self.bars})

    def bars_of(self, v: int) -> list[Bar]:
        return [b for b in self.bars if b.vertex == v]

    def bar_counts(self) -> Counter:
        return Counter(b.vertex for b in self.bars)

    def max_bars_per_vertex(self) -> int:
        return max(self.bar_counts().values(), default=0)

    def x_extent(self) -> tuple[Fraction, Fraction]:
        return (min(b.x_lo for b in self.bars), max(b.x_hi for b in self.bars))


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str

    def __str__(self):
        return f"{self.kind}: {self.detail}"


@dataclass(frozen=True)
class VisibilityPair:
    lower: int
    upper: int
    strip: tuple


@dataclass(frozen=True)
class Diff:
    missing: frozenset = field(default_factory=frozenset)
    extra: frozenset = field(default_factory=frozenset)

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra

    def __bool__(self):
        return not self.ok


@dataclass(frozen=True)
class DerivedGraph:
    node_count: int
    edges: frozenset

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def euler_ok(self) -> bool:
        if self.node_count < 3:
            return True
        return self.edge_count <= 3 * self.node_count - 6

    def as_graph(self) -> Graph:
        return Graph(self.node_count, self.edges)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def validate_layout(L: Layout) -> list[Violation]:
    """All structural problems of ``L``; an empty list means the layout is usable."""
    out = []
    for i, b in enumerate(L.bars):
        if b.vertex < 0:
            out.append(Violation("NegativeVertex", f"bar {i} has vertex {b.vertex}"))
        if b.x_lo >= b.x_hi:
            out.append(Violation("ZeroLengthBar", f"bar {i} spans [{b.x_lo}, {b.x_hi}]"))
    if L.t < 1:
        out.append(Violation("BadT", f"declared t={L.t}"))
    for v, c in sorted(L.bar_counts().items()):
        if c > L.t:
            out.append(Violation("TooManyBars", f"vertex {v} has {c} bars, t={L.t}"))
    present = L.bar_counts()
    for v in range(L.n):
        if v not in present:
            out.append(Violation("MissingVertex", f"vertex {v} has no bar"))
    by_level: dict[Fraction, list[int]] = {}
    for i, b in enumerate(L.bars):
        by_level.setdefault(b.y, []).append(i)
    for y, idx in sorted(by_level.items()):
        idx.sort(key=lambda i: (L.bars[i].x_lo, L.bars[i].x_hi))
        for a, c in zip(idx, idx[1:]):
            if L.bars[c].x_lo < L.bars[a].x_hi:
                out.append(Violation("SameLevelOverlap", f"bars {a} and {c} overlap at y={y}"))
    return out


def _require_valid(L: Layout):
    problems = validate_layout(L)
    if problems:
        raise InvalidLayout(problems)


# ---------------------------------------------------------------------------
# visibility sweep
# ---------------------------------------------------------------------------

def _cells(L: Layout):
    """Yield ``(p, q, active)`` for every elementary x-cell, active sorted by (y, index)."""
    starts: dict[Fraction, list[int]] = {}
    ends: dict[Fraction, list[int]] = {}
    for i, b in enumerate(L.bars):
        starts.setdefault(b.x_lo, []).append(i)
        ends.setdefault(b.x_hi, []).append(i)
    xs = sorted(set(starts) | set(ends))
    active: list[tuple] = []
    for k, x in enumerate(xs):
        for i in ends.get(x, ()):
            active.remove((L.bars[i].y, i))
        for i in starts.get(x, ()):
            bisect.insort(active, (L.bars[i].y, i))
        if k + 1 < len(xs):
            yield x, xs[k + 1], [i for _, i in active]


def visible_pairs(L: Layout) -> list[VisibilityPair]:
    """Every bar pair joined by an unblocked positive-width channel, one witness each.

    Event sweep over x: between consecutive event coordinates the set of
    bars crossing the sweep line is fixed, and visibility holds exactly
    between bars adjacent in y-order.  Only adjacencies created at an event
    are examined.
    """
    _require_valid(L)
    bars = L.bars
    starts: dict[Fraction, list[int]] = {}
    ends: dict[Fraction, list[int]] = {}
    for i, b in enumerate(bars):
        starts.setdefault(b.x_lo, []).append(i)
        ends.setdefault(b.x_hi, []).append(i)
    xs = sorted(set(starts) | set(ends))

    keys: list[tuple] = []
    found: dict[tuple[int, int], tuple] = {}
    for k, x in enumerate(xs):
        touched = []
        for i in sorted(ends.get(x, ()), key=lambda i: (bars[i].y, i)):
            pos = bisect.bisect_left(keys, (bars[i].y, i))
            del keys[pos]
            if pos > 0:
                touched.append(keys[pos - 1][1])
            if pos < len(keys):
                touched.append(keys[pos][1])
        for i in sorted(starts.get(x, ()), key=lambda i: (bars[i].y, i)):
            bisect.insort(keys, (bars[i].y, i))
            touched.append(i)
        if k + 1 == len(xs):
            break
        strip = (x, xs[k + 1])
        for i in touched:
            pos = bisect.bisect_left(keys, (bars[i].y, i))
            if pos == len(keys) or keys[pos][1] != i:
                continue
            for nb in (pos - 1, pos + 1):
                if 0 <= nb < len(keys):
                    a, b = sorted((keys[nb], keys[pos]))
                    found.setdefault((a[1], b[1]), strip)
    return [VisibilityPair(lo, hi, s) for (lo, hi), s in sorted(found.items())]


def realized_digraph(L: Layout, n: int | None = None) -> Digraph:
    arcs = set()
    for p in visible_pairs(L):
        u, w = L.bars[p.lower].vertex, L.bars[p.upper].vertex
        if u != w:
            arcs.add((u, w))
    return Digraph(L.n if n is None else n, frozenset(arcs))


def realized_graph(L: Layout, n: int | None = None) -> Graph:
    """Undirected visibility graph of ``L`` (directions ignored)."""
    edges = set()
    for p in visible_pairs(L):
        u, w = L.bars[p.lower].vertex, L.bars[p.upper].vertex
        if u != w:
            edges.add((min(u, w), max(u, w)))
    return Graph(L.n if n is None else n, frozenset(edges))


def verify_layout(L: Layout, G: Digraph) -> Diff:
    if L.n > G.n:
        raise InvalidLayout([Violation("UnknownVertex", f"layout uses vertex {L.n - 1}, digraph has n={G.n}")])
    got = realized_digraph(L, G.n).arcs
    return Diff(missing=frozenset(G.arcs - got), extra=frozenset(got - G.arcs))


def derived_graph(L: Layout) -> DerivedGraph:
    edges = set()
    for p in visible_pairs(L):
        if L.bars[p.lower].vertex != L.bars[p.upper].vertex:
            edges.add((min(p.lower, p.upper), max(p.lower, p.upper)))
    return DerivedGraph(len(L.bars), frozenset(edges))


def channel_depth(L: Layout) -> int:
    """Largest number of bars met by one elementary vertical channel."""
    return max((len(active) for _, _, active in _cells(L)), default=0)


def private_channels(L: Layout) -> dict[int, tuple]:
    """For each vertex owning some channel met by one of its bars and nothing else."""
    out: dict[int, tuple] = {}
    for p, q, active in _cells(L):
        if len(active) == 1:
            out.setdefault(L.bars[active[0]].vertex, (p, q))
    return out


def is_displayed(L: Layout, vertices: Iterable[int] | None = None) -> bool:
    owners = private_channels(L)
    wanted = L.vertices() if vertices is None else vertices
    return all(v in owners for v in wanted)


def leftmost_bar(L: Layout) -> int | None:
    """Index of the bar with the strictly smallest left end, else None."""
    lo = min(b.x_lo for b in L.bars)
    idx = [i for i, b in enumerate(L.bars) if b.x_lo == lo]
    return idx[0] if len(idx) == 1 else None


def rightmost_bar(L: Layout) -> int | None:
    hi = max(b.x_hi for b in L.bars)
    idx = [i for i, b in enumerate(L.bars) if b.x_hi == hi]
    return idx[0] if len(idx) == 1 else None


# ---------------------------------------------------------------------------
# transforms
# ---------------------------------------------------------------------------

def translate(L: Layout, dx=0, dy=0) -> Layout:
    dx, dy = Q(dx), Q(dy)
    return Layout(tuple(Bar(b.vertex, b.y + dy, b.x_lo + dx, b.x_hi + dx) for b in L.bars), L.t)


def reflect_x(L: Layout) -> Layout:
    """Mirror about x=0 and shift back so the left edge stays where it was."""
    lo, hi = L.x_extent()
    return Layout(tuple(Bar(b.vertex, b.y, lo + hi - b.x_hi, lo + hi - b.x_lo) for b in L.bars), L.t)


def relabel(L: Layout, mapping: Mapping[int, int] | list[int], t: int | None = None) -> Layout:
    return Layout(tuple(Bar(mapping[b.vertex], b.y, b.x_lo, b.x_hi) for b in L.bars),
                  L.t if t is None else t)


def map_levels(L: Layout, levels: Mapping) -> Layout:
    return Layout(tuple(Bar(b.vertex, levels[b.y], b.x_lo, b.x_hi) for b in L.bars), L.t)


def restrict_layout(L: Layout, keep: Iterable[int]) -> Layout:
    """Drop the bars of vertices outside ``keep`` and relabel the rest to ``0..k-1``."""
    keep = sorted(set(keep))
    index = {v: i for i, v in enumerate(keep)}
    return Layout(tuple(Bar(index[b.vertex], b.y, b.x_lo, b.x_hi)
                        for b in L.bars if b.vertex in index), L.t)


def combine(layouts: Iterable[Layout], t: int | None = None) -> Layout:
    layouts = list(layouts)
    bars = tuple(b for L in layouts for b in L.bars)
    return Layout(bars, t if t is not None else max((L.t for L in layouts), default=1))


def canonical(L: Layout) -> Layout:
    """Bars sorted by (y, x_lo, vertex, x_hi)."""
    return Layout(tuple(sorted(L.bars, key=lambda b: (b.y, b.x_lo, b.vertex, b.x_hi))), L.t)
