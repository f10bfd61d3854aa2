"""Exact bar visibility representations of digraphs."""
from .errors import *  # noqa: F401,F403
from .geometry import (Bar, Diff, Layout, Q, canonical, channel_depth, derived_graph,
                       is_displayed, realized_digraph, realized_graph, validate_layout,
                       verify_layout, visible_pairs)
from .graphs import (A_TO_B, B_TO_A, Digraph, Graph, counterexample_graph, named_graph,
                     oriented_complete_bipartite, transitive_tournament)
from .intervals import IntervalRep, depth, interval_to_bars, k53_gadget, prune_to_subgraph, \
    realized_interval_graph
from .recognize import (augment_st, construct_1bar, is_bar_visibility_digraph,
                        is_bar_visibility_graph, is_planar)
from .reduction import build_test_digraph, hamiltonian_cycle, lift_gadget, two_bar_layout
from .render import RenderSpec, render_svg
from .tournaments import bounds_Tn, lift_layout, path_decomposition, quarter_layout

__version__ = "0.1.0"
