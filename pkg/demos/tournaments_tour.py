"""Walk through transitive tournaments: decompositions, layouts and bounds.

Run with ``python3 demos/tournaments_tour.py``.
"""
from __future__ import annotations

from barviz import io
from barviz.geometry import verify_layout
from barviz.graphs import transitive_tournament
from barviz.tournaments import bounds_Tn, lift_layout, path_decomposition, quarter_layout


def main():
    # K_8 splits into four Hamiltonian paths; each has a middle edge, and the
    # middle edges together match every label exactly once.
    P = path_decomposition(4)
    print(io.serialize_decomposition(P))

    # Sixteen vertices, four bars each: one strip per piece.
    L = quarter_layout(16)
    print("T16 layout:", len(L.bars), "bars, at most", L.max_bars_per_vertex(), "per vertex,",
          "verifies" if verify_layout(L, transitive_tournament(16)).ok else "BROKEN")

    # Adding a global source and sink costs only one extra bar per vertex.
    L18 = lift_layout(L)
    print("T18 via lift:", L18.max_bars_per_vertex(), "bars per vertex,",
          "verifies" if verify_layout(L18, transitive_tournament(18)).ok else "BROKEN")

    print("\n  n  lower upper  lower-source          upper-source")
    for n in (4, 5, 10, 11, 16, 17, 40, 100):
        r = bounds_Tn(n)
        print(f"{n:>3}  {r.lower:>5} {r.upper:>5}  {r.lower_source:<20}  {r.upper_source}")


if __name__ == "__main__":
    main()
