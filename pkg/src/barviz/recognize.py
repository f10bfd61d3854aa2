"""Recognition of bar visibility (di)graphs and one-bar layout construction.

A digraph has a one-bar representation exactly when its st-augmentation is
planar and acyclic.  The constructive direction uses the tessellation of a
planar st-graph: y is the topological rank in the augmentation and the
x-extent of every vertex comes from a longest-path numbering of the dual.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .errors import InvalidInput, NotRepresentable, SizeLimit
from .geometry import Bar, Layout
from .graphs import (Digraph, Graph, connected_components, cut_vertices,
                     has_consistent_cycle, topological_order)

NON_PLANAR = "NonPlanar"
CONSISTENT_CYCLE = "ConsistentCycle"

DEFAULT_EMBEDDING_CAP = 16


def size_cap(default: int) -> int:
    """Search cap, overridable through ``BARVIZ_SIZE_CAP``."""
    raw = os.environ.get("BARVIZ_SIZE_CAP")
    return int(raw) if raw else default


@dataclass(frozen=True)
class AugmentedDigraph:
    base: Digraph
    s: int
    t: int
    added: tuple

    @property
    def digraph(self) -> Digraph:
        return Digraph(self.base.n + 2, self.base.arcs | frozenset(self.added))


def augment_st(G: Digraph) -> AugmentedDigraph:
    s, t = G.n, G.n + 1
    added = [(s, v) for v in G.sources()] + [(w, t) for w in G.sinks()] + [(s, t)]
    return AugmentedDigraph(G, s, t, tuple(added))


@dataclass(frozen=True)
class PlanarEmbedding:
    """Rotation system: for each vertex its neighbours in cyclic order."""

    rotation: dict
    outer_face: int = 0

    def faces(self) -> list[list[tuple[int, int]]]:
        """Faces as lists of half-edges; every half-edge lies in exactly one face."""
        succ = {}
        for v, nbrs in self.rotation.items():
            for i, u in enumerate(nbrs):
                succ[(v, u)] = nbrs[(i + 1) % len(nbrs)]
        seen = set()
        faces = []
        for v in sorted(self.rotation):
            for u in self.rotation[v]:
                if (v, u) in seen:
                    continue
                face = []
                a, b = v, u
                while (a, b) not in seen:
                    seen.add((a, b))
                    face.append((a, b))
                    a, b = b, succ[(b, a)]
                faces.append(face)
        return faces

    def euler_ok(self, n: int) -> bool:
        """V - E + F = 1 + C, counting isolated vertices as components."""
        edges = sum(len(nbrs) for nbrs in self.rotation.values()) // 2
        verts_with_edges = [v for v, nbrs in self.rotation.items() if nbrs]
        g = Graph(n, frozenset((min(u, v), max(u, v))
                               for u, nbrs in self.rotation.items() for v in nbrs))
        comps = [c for c in connected_components(g) if len(c) > 1]
        faces = len(self.faces())
        return len(verts_with_edges) - edges + faces == 2 * len(comps) if comps else True


def _to_nx(G: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(sorted(G.edges))
    return g


def planar_embedding(G: Graph) -> PlanarEmbedding | None:
    ok, emb = nx.check_planarity(_to_nx(G))
    if not ok:
        return None
    data = emb.get_data()
    return PlanarEmbedding({v: tuple(data.get(v, ())) for v in range(G.n)})


def is_planar(G: Graph) -> bool:
    return planar_embedding(G) is not None


def kuratowski_subgraph(G: Graph) -> Graph | None:
    """A K5 or K3,3 subdivision inside G, or None when G is planar."""
    ok, cert = nx.check_planarity(_to_nx(G), counterexample=True)
    if ok:
        return None
    return Graph(G.n, frozenset((min(u, v), max(u, v)) for u, v in cert.edges()))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str | None = None

    def __bool__(self):
        return self.ok


def is_bar_visibility_digraph(G: Digraph) -> Verdict:
    aug = augment_st(G).digraph
    if has_consistent_cycle(aug):
        return Verdict(False, CONSISTENT_CYCLE)
    if not is_planar(aug.underlying()):
        return Verdict(False, NON_PLANAR)
    return Verdict(True)


def construct_1bar(G: Digraph) -> Layout:
    """One bar per vertex with integer coordinates; realizes G exactly."""
    verdict = is_bar_visibility_digraph(G)
    if not verdict:
        raise NotRepresentable(verdict.reason)
    aug = augment_st(G)
    Gp = aug.digraph
    s, t = aug.s, aug.t
    order = topological_order(Gp)
    rank = {v: i for i, v in enumerate(order)}

    emb = planar_embedding(Gp.underlying())
    face_of = {}
    for fid, face in enumerate(emb.faces()):
        for half in face:
            face_of[half] = fid
    outer = face_of[(s, t)]
    s_star, t_star = "s*", "t*"

    def left(u, w):
        f = face_of[(u, w)]
        return s_star if f == outer else f

    def right(u, w):
        f = face_of[(w, u)]
        return t_star if f == outer else f

    dual_arcs = {(left(u, w), right(u, w)) for u, w in Gp.arcs}
    X = _longest_path_numbering(dual_arcs, s_star)

    lo = {v: None for v in range(Gp.n)}
    hi = {v: None for v in range(Gp.n)}
    for u, w in Gp.arcs:
        a, b = X[left(u, w)], X[right(u, w)]
        for v in (u, w):
            lo[v] = a if lo[v] is None else min(lo[v], a)
            hi[v] = b if hi[v] is None else max(hi[v], b)
    bars = tuple(Bar(v, rank[v], lo[v], hi[v]) for v in range(G.n))
    return Layout(bars, 1)


def _longest_path_numbering(arcs, source) -> dict:
    nodes = {source} | {a for a, _ in arcs} | {b for _, b in arcs}
    succ = {v: [] for v in nodes}
    indeg = {v: 0 for v in nodes}
    for a, b in arcs:
        succ[a].append(b)
        indeg[b] += 1
    X = {v: 0 for v in nodes}
    ready = [v for v in nodes if indeg[v] == 0]
    seen = 0
    while ready:
        v = ready.pop()
        seen += 1
        for w in succ[v]:
            X[w] = max(X[w], X[v] + 1)
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if seen != len(nodes):
        raise AssertionError("dual of a planar st-graph must be acyclic")
    return X


# ---------------------------------------------------------------------------
# undirected bar visibility graphs
# ---------------------------------------------------------------------------

def is_bar_visibility_graph(G: Graph, method: str = "apex", cap: int | None = None) -> bool:
    """Planar with all cut vertices on one common face.

    ``method="apex"`` adds a vertex joined to every cut vertex and tests
    planarity (cofacial cut vertices are exactly the ones a new vertex inside
    that face can reach).  ``method="exhaustive"`` enumerates rotation systems
    and is limited to ``cap`` vertices per component.
    """
    if not is_planar(G):
        return False
    cuts = cut_vertices(G)
    if not cuts:
        return True
    if method == "apex":
        apex = G.n
        edges = G.edges | {(c, apex) for c in cuts}
        return is_planar(Graph(G.n + 1, edges))
    if method == "exhaustive":
        return _exhaustive_cofacial(G, cuts, size_cap(DEFAULT_EMBEDDING_CAP) if cap is None else cap)
    raise InvalidInput(f"unknown method {method!r}")


def _exhaustive_cofacial(G: Graph, cuts: set, cap: int) -> bool:
    adj = G.adjacency()
    for comp in connected_components(G):
        want = cuts & set(comp)
        if not want:
            continue
        if len(comp) > cap:
            raise SizeLimit(f"component with {len(comp)} vertices exceeds cap {cap}")
        if not _component_has_cofacial_embedding(comp, adj, want):
            return False
    return True


def _component_has_cofacial_embedding(comp, adj, want) -> bool:
    edges = sum(len(adj[v]) for v in comp) // 2
    target_faces = 2 - len(comp) + edges
    choices = []
    for v in comp:
        nbrs = sorted(adj[v])
        if len(nbrs) <= 2:
            choices.append([tuple(nbrs)])
        else:
            first, rest = nbrs[0], nbrs[1:]
            choices.append([(first,) + p for p in itertools.permutations(rest)])
    for combo in itertools.product(*choices):
        emb = PlanarEmbedding(dict(zip(comp, combo)))
        faces = emb.faces()
        if len(faces) != target_faces:
            continue
        for face in faces:
            if want <= {a for a, _ in face}:
                return True
    return False
