"""Slow, independent reference implementations used only by the tests."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

from barviz.geometry import Bar, Layout
from barviz.graphs import Digraph, Graph


def brute_visibility(L: Layout) -> set[tuple[int, int]]:
    """Bar-index pairs (lower, upper) that see each other, by checking every
    elementary x-cell against every bar.  Cubic, but obviously correct."""
    xs = sorted({b.x_lo for b in L.bars} | {b.x_hi for b in L.bars})
    out = set()
    for p, q in zip(xs, xs[1:]):
        cover = [i for i, b in enumerate(L.bars) if b.x_lo <= p and q <= b.x_hi]
        for i in cover:
            for j in cover:
                bi, bj = L.bars[i], L.bars[j]
                if not bi.y < bj.y:
                    continue
                if any(bi.y < L.bars[k].y < bj.y for k in cover):
                    continue
                out.add((i, j))
    return out


def brute_digraph(L: Layout) -> set[tuple[int, int]]:
    pairs = brute_visibility(L)
    return {(L.bars[i].vertex, L.bars[j].vertex) for i, j in pairs
            if L.bars[i].vertex != L.bars[j].vertex}


def random_layout(rng: random.Random, max_bars: int = 40, levels: int = 6,
                  width: int = 20, max_t: int = 3) -> Layout:
    """Random valid layout: distinct bars on a level never overlap."""
    k = rng.randint(1, max_bars)
    nv = rng.randint(1, max(1, k))
    bars = []
    occupied: dict[int, list[tuple]] = {}
    counts = [0] * nv
    for _ in range(k * 3):
        if len(bars) >= k:
            break
        v = rng.randrange(nv)
        if counts[v] >= max_t:
            continue
        y = rng.randrange(levels)
        a = Fraction(rng.randrange(2 * width), 2)
        b = a + Fraction(rng.randint(1, 2 * width // 2), 2)
        if any(a < d and c < b for c, d in occupied.get(y, [])):
            continue
        occupied.setdefault(y, []).append((a, b))
        counts[v] += 1
        bars.append(Bar(v, y, a, b))
    used = sorted({b.vertex for b in bars})
    index = {v: i for i, v in enumerate(used)}
    bars = [Bar(index[b.vertex], b.y, b.x_lo, b.x_hi) for b in bars]
    return Layout(tuple(bars), max(counts) if bars else 1)


def has_directed_cycle(G: Digraph) -> bool:
    """Colour-based DFS, independent of the library's Kahn order."""
    adj = {v: [] for v in range(G.n)}
    for u, v in G.arcs:
        adj[u].append(v)
    colour = [0] * G.n

    def visit(u):
        colour[u] = 1
        for w in adj[u]:
            if colour[w] == 1 or (colour[w] == 0 and visit(w)):
                return True
        colour[u] = 2
        return False

    return any(colour[v] == 0 and visit(v) for v in range(G.n))


def is_kuratowski_certificate(K: Graph, G: Graph) -> bool:
    """K is a subgraph of G that is a subdivision of K5 or K3,3."""
    if not K.edges <= G.edges:
        return False
    adj = {v: set() for v in range(K.n)}
    for u, v in K.edges:
        adj[u].add(v)
        adj[v].add(u)
    used = [v for v in adj if adj[v]]
    if any(len(adj[v]) == 1 for v in used):
        return False
    branch = [v for v in used if len(adj[v]) >= 3]
    # smooth every degree-2 vertex into a branch-to-branch edge
    reduced = set()
    seen_edges = set()
    reached = set(branch)
    for b in branch:
        for w in adj[b]:
            prev, cur = b, w
            path = [(b, w)]
            while cur not in branch:
                nxt = next(iter(adj[cur] - {prev}))
                prev, cur = cur, nxt
                reached.add(prev)
                path.append((prev, cur))
            key = frozenset(map(frozenset, path))
            if key in seen_edges:
                continue
            seen_edges.add(key)
            if b == cur:
                return False
            reduced.add(frozenset((b, cur)))
    if reached != set(used) or len(reduced) != len(seen_edges):
        return False  # parallel smoothed edges
    if len(branch) == 5:
        return all(len(adj[v]) == 4 for v in branch) and len(reduced) == 10
    if len(branch) == 6:
        if not all(len(adj[v]) == 3 for v in branch) or len(reduced) != 9:
            return False
        for side in itertools.combinations(branch, 3):
            other = set(branch) - set(side)
            want = {frozenset((a, b)) for a in side for b in other}
            if want == reduced:
                return True
    return False


def faces_from_rotation(rotation: dict) -> int:
    """Face count of a rotation system, written out independently."""
    nxt = {}
    for v, nbrs in rotation.items():
        k = len(nbrs)
        for i, u in enumerate(nbrs):
            nxt[(v, u)] = nbrs[(i + 1) % k]
    darts = set(nxt)
    faces = 0
    while darts:
        start = darts.pop()
        a, b = start
        while True:
            a, b = b, nxt[(b, a)]
            if (a, b) == start:
                break
            darts.discard((a, b))
        faces += 1
    return faces


def rotation_count(G: Graph) -> int:
    """Number of rotation systems, i.e. the size of the brute-force search."""
    total = 1
    for a in G.adjacency():
        for k in range(2, len(a)):
            total *= k
    return total


def brute_planar(G: Graph) -> bool:
    """Planarity by exhaustive rotation systems (tiny graphs only)."""
    from barviz.graphs import connected_components

    adj = G.adjacency()
    for comp in connected_components(G):
        if len(comp) < 5:
            continue
        e = sum(len(adj[v]) for v in comp) // 2
        choices = []
        for v in comp:
            nb = sorted(adj[v])
            if len(nb) <= 2:
                choices.append([tuple(nb)])
            else:
                choices.append([(nb[0],) + p for p in itertools.permutations(nb[1:])])
        if not any(faces_from_rotation(dict(zip(comp, c))) == e - len(comp) + 2
                   for c in itertools.product(*choices)):
            return False
    return True


def brute_hamiltonian(H: Graph) -> bool:
    if H.n < 3:
        return False
    for perm in itertools.permutations(range(1, H.n)):
        cyc = (0,) + perm
        if all(H.has_edge(cyc[i], cyc[(i + 1) % H.n]) for i in range(H.n)):
            return True
    return False


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, frozenset(e for e in itertools.combinations(range(n), 2) if rng.random() < p))
