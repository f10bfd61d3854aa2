"""Build the test digraph of a cubic graph and, given a Hamiltonian cycle,
a two-bar layout of it.  Writes an SVG next to the working directory."""
from __future__ import annotations

import sys

from barviz.geometry import verify_layout
from barviz.graphs import named_graph
from barviz.reduction import build_test_digraph, hamiltonian_cycle, two_bar_layout
from barviz.render import RenderSpec, render_svg


def main(name="k33"):
    H = named_graph(name)
    T = build_test_digraph(H)
    F = T.digraph
    print(f"{name}: H has {H.n} vertices; test digraph has {F.n} vertices, {len(F.arcs)} arcs")
    roles = dict(T.roles())
    print("roles:", {k: roles[k] for k in ("z", "s1", "t2", "s2", "t3")})

    cycle = hamiltonian_cycle(H)
    if cycle is None:
        print("no Hamiltonian cycle, so no layout is attempted")
        return
    print("cycle:", cycle.order)
    L = two_bar_layout(T, cycle)
    print("two-bar layout:", len(L.bars), "bars, verifies:", verify_layout(L, F).ok)

    out = f"{name}_two_bar.svg"
    with open(out, "w") as fh:
        fh.write(render_svg(L, RenderSpec(x_scale=4, y_scale=30, labels=False)))
    print("wrote", out)


if __name__ == "__main__":
    main(*sys.argv[1:])
