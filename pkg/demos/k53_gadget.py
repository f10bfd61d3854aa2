"""The 2-interval K_{5,3} template, turned into bars and placed end to end."""
from __future__ import annotations

from barviz.geometry import (channel_depth, is_displayed, leftmost_bar, rightmost_bar,
                             verify_layout)
from barviz.graphs import complete_bipartite, oriented_complete_bipartite
from barviz.intervals import K53_TEMPLATE, depth, k53_gadget, realized_interval_graph


def main():
    H = realized_interval_graph(K53_TEMPLATE)
    print("template realizes K5,3:", H == complete_bipartite(5, 3),
          "| depth", depth(K53_TEMPLATE).depth)

    D = oriented_complete_bipartite(5, 3)
    for u, v in ((0, 7), (6, 2)):
        L = k53_gadget(u, v)
        lo = L.bars[leftmost_bar(L)].vertex
        hi = L.bars[rightmost_bar(L)].vertex
        print(f"gadget ({u},{v}): verifies={verify_layout(L, D).ok} ends=({lo},{hi}) "
              f"displayed={is_displayed(L)} channel depth={channel_depth(L)}")


if __name__ == "__main__":
    main()
