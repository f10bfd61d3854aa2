"""Decide which small digraphs have a one-bar layout and draw the ones that do."""
from __future__ import annotations

from barviz import io
from barviz.geometry import verify_layout
from barviz.graphs import directed_cycle, oriented_complete_bipartite, transitive_tournament
from barviz.recognize import construct_1bar, is_bar_visibility_digraph

CASES = {
    "T4": transitive_tournament(4),
    "T5": transitive_tournament(5),
    "directed C4": directed_cycle(4),
    "K2,3 one way": oriented_complete_bipartite(2, 3),
    "K3,3 one way": oriented_complete_bipartite(3, 3),
}


def main():
    for name, G in CASES.items():
        verdict = is_bar_visibility_digraph(G)
        if not verdict:
            print(f"{name}: no ({verdict.reason})")
            continue
        L = construct_1bar(G)
        ok = verify_layout(L, G).ok
        print(f"{name}: yes, layout {'checks out' if ok else 'FAILS'}")
        print(io.serialize_layout(L))


if __name__ == "__main__":
    main()
