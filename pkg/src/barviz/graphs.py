"""Vertex-indexed graph types, named generators and structural predicates.

Vertices are dense integer ids ``0..n-1``.  Both graph types are immutable;
operations return new objects.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import EmptyGraph, InvalidInput

A_TO_B = "A_to_B"
B_TO_A = "B_to_A"


def _check_ids(n: int, pairs, kind: str):
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidInput(f"{kind} ({u},{v}) out of range for n={n}")
        if u == v:
            raise InvalidInput(f"loop at vertex {u}")


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        _check_ids(self.n, arcs, "arc")
        object.__setattr__(self, "arcs", arcs)

    def out_neighbors(self, v: int) -> list[int]:
        return sorted(w for u, w in self.arcs if u == v)

    def in_neighbors(self, v: int) -> list[int]:
        return sorted(u for u, w in self.arcs if w == v)

    def out_adjacency(self) -> list[list[int]]:
        adj = [[] for _ in range(self.n)]
        for u, v in sorted(self.arcs):
            adj[u].append(v)
        return adj

    def sources(self) -> list[int]:
        has_in = {v for _, v in self.arcs}
        return [v for v in range(self.n) if v not in has_in]

    def sinks(self) -> list[int]:
        has_out = {u for u, _ in self.arcs}
        return [v for v in range(self.n) if v not in has_out]

    def underlying(self) -> "Graph":
        return Graph(self.n, frozenset(_ukey(u, v) for u, v in self.arcs))

    def reversed(self) -> "Digraph":
        return Digraph(self.n, frozenset((v, u) for u, v in self.arcs))

    def induced(self, keep: Iterable[int]) -> "Digraph":
        """Subdigraph on ``keep``, relabelled to ``0..k-1`` in increasing order."""
        keep = sorted(set(keep))
        index = {v: i for i, v in enumerate(keep)}
        arcs = {(index[u], index[v]) for u, v in self.arcs if u in index and v in index}
        return Digraph(len(keep), frozenset(arcs))

    def is_tournament(self) -> bool:
        pairs = {_ukey(u, v) for u, v in self.arcs}
        return len(pairs) == len(self.arcs) == self.n * (self.n - 1) // 2


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        edges = frozenset(_ukey(int(u), int(v)) for u, v in self.edges)
        _check_ids(self.n, edges, "edge")
        object.__setattr__(self, "edges", edges)

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def has_edge(self, u: int, v: int) -> bool:
        return _ukey(u, v) in self.edges

    def orient(self, rule=None) -> Digraph:
        """Orient every edge; the default rule points from lower to higher id."""
        if rule is None:
            return Digraph(self.n, frozenset(self.edges))
        return Digraph(self.n, frozenset(rule(u, v) for u, v in self.edges))


def _ukey(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def transitive_tournament(n: int) -> Digraph:
    if n < 1:
        raise EmptyGraph("transitive tournament needs n >= 1")
    return Digraph(n, frozenset(itertools.combinations(range(n), 2)))


def oriented_complete_bipartite(m: int, n: int, direction: str = A_TO_B) -> Digraph:
    """K_{m,n} with part A = ids 0..m-1, part B = ids m..m+n-1, all arcs one way."""
    if m < 1 or n < 1:
        raise InvalidInput("both parts must be nonempty")
    if direction not in (A_TO_B, B_TO_A):
        raise InvalidInput(f"unknown direction {direction!r}")
    arcs = {(a, m + b) for a in range(m) for b in range(n)}
    if direction == B_TO_A:
        arcs = {(v, u) for u, v in arcs}
    return Digraph(m + n, frozenset(arcs))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def complete_bipartite(m: int, n: int) -> Graph:
    return oriented_complete_bipartite(m, n).underlying()


def cycle_graph(n: int) -> Graph:
    return Graph(n, frozenset(_ukey(i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def directed_cycle(n: int) -> Digraph:
    return Digraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def lcf_graph(n: int, shifts: list[int], repeats: int) -> Graph:
    """Cubic Hamiltonian graph from LCF notation ``shifts^repeats``."""
    edges = {_ukey(i, (i + 1) % n) for i in range(n)}
    seq = shifts * repeats
    for i, s in enumerate(seq):
        edges.add(_ukey(i, (i + s) % n))
    return Graph(n, frozenset(edges))


def prism_graph(k: int) -> Graph:
    """C_k x K_2; triangle-free for k >= 4."""
    edges = set()
    for i in range(k):
        j = (i + 1) % k
        edges |= {_ukey(i, j), _ukey(k + i, k + j), (i, k + i)}
    return Graph(2 * k, frozenset(edges))


def petersen_graph() -> Graph:
    outer = {_ukey(i, (i + 1) % 5) for i in range(5)}
    spokes = {(i, i + 5) for i in range(5)}
    inner = {_ukey(5 + i, 5 + (i + 2) % 5) for i in range(5)}
    return Graph(10, frozenset(outer | spokes | inner))


def cube_graph() -> Graph:
    edges = {(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)}
    return Graph(8, frozenset(edges))


NAMED_GRAPHS = {
    "k4": lambda: complete_graph(4),
    "k5": lambda: complete_graph(5),
    "k33": lambda: complete_bipartite(3, 3),
    "k53": lambda: complete_bipartite(5, 3),
    "cube": cube_graph,
    "petersen": petersen_graph,
    "prism5": lambda: prism_graph(5),
    "franklin": lambda: lcf_graph(12, [5, -5], 6),
    "heawood": lambda: lcf_graph(14, [5, -5], 7),
    "mobius_kantor": lambda: lcf_graph(16, [5, -5], 8),
}


def named_graph(name: str) -> Graph:
    try:
        return NAMED_GRAPHS[name]()
    except KeyError:
        raise InvalidInput(f"unknown graph name {name!r}; known: {sorted(NAMED_GRAPHS)}")


def counterexample_graph(kind: str) -> Graph:
    """The two 20-vertex graphs behind the orientation counterexample.

    ``"Ghat"`` is the 18-cycle ``0..17`` plus hubs 18 and 19, each adjacent to
    the even cycle vertices.  ``"G1"`` is K_{2,9} (hubs 18, 19 against the even
    cycle vertices) with the pendant ``2k+1`` hung on each ``2k``; with these
    ids G1 is a spanning subgraph of Ghat.
    """
    evens = range(0, 18, 2)
    hubs = {(e, h) for e in evens for h in (18, 19)}
    if kind == "G1":
        return Graph(20, frozenset(hubs | {(e, e + 1) for e in evens}))
    if kind == "Ghat":
        return Graph(20, frozenset(hubs | cycle_graph(18).edges))
    raise InvalidInput(f"unknown counterexample kind {kind!r}")


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------

def topological_order(G: Digraph) -> list[int] | None:
    """Kahn's algorithm with smallest-id tie-break; None if G has a directed cycle."""
    import heapq

    indeg = [0] * G.n
    adj = G.out_adjacency()
    for _, v in G.arcs:
        indeg[v] += 1
    heap = [v for v in range(G.n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for w in adj[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    return order if len(order) == G.n else None


def has_consistent_cycle(G: Digraph) -> bool:
    return topological_order(G) is None


def has_triangle(H: Graph) -> bool:
    adj = H.adjacency()
    return any(adj[u] & adj[v] for u, v in H.edges)


def validate_cubic_triangle_free(H: Graph) -> bool:
    adj = H.adjacency()
    return all(len(a) == 3 for a in adj) and not has_triangle(H)


def connected_components(H: Graph) -> list[list[int]]:
    adj = H.adjacency()
    seen = [False] * H.n
    comps = []
    for s in range(H.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def cut_vertices(H: Graph) -> set[int]:
    adj = [sorted(a) for a in H.adjacency()]
    disc = [-1] * H.n
    low = [0] * H.n
    cuts = set()
    timer = 0
    for root in range(H.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((w, u, iter(adj[w])))
                    advanced = True
                    break
                if w != parent:
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[u])
                if p != root and low[u] >= disc[p]:
                    cuts.add(p)
        if root_children > 1:
            cuts.add(root)
    return cuts


def is_biconnected(H: Graph) -> bool:
    return H.n >= 2 and len(connected_components(H)) == 1 and not cut_vertices(H)


def bipartition(H: Graph) -> tuple[list[int], list[int]] | None:
    """Two-colouring (colour 0 holds the smallest id of each component), or None."""
    adj = H.adjacency()
    colour = [-1] * H.n
    for s in range(H.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    return ([v for v in range(H.n) if colour[v] == 0],
            [v for v in range(H.n) if colour[v] == 1])


def orient_one_way(H: Graph) -> Digraph:
    """Orient a bipartite graph so every edge leaves the colour-0 class."""
    parts = bipartition(H)
    if parts is None:
        raise InvalidInput("graph is not bipartite")
    first = set(parts[0])
    return Digraph(H.n, frozenset((u, v) if u in first else (v, u) for u, v in H.edges))


def is_one_way_bipartite(G: Digraph) -> bool:
    """Every vertex is a source or a sink."""
    tails = {u for u, _ in G.arcs}
    heads = {v for _, v in G.arcs}
    return not (tails & heads)
