"""Command-line entry point: ``barviz <command> ...``.

Exit status is 0 for success or a YES verdict, 1 for a NO verdict or a
failed verification, and 2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import io
from .errors import BarvizError
from .geometry import verify_layout
from .graphs import (A_TO_B, B_TO_A, Digraph, Graph, counterexample_graph, directed_cycle,
                     named_graph, oriented_complete_bipartite, path_graph, transitive_tournament)
from .recognize import construct_1bar, is_bar_visibility_digraph, is_bar_visibility_graph
from .reduction import HamCycle, build_test_digraph, hamiltonian_cycle, two_bar_layout
from .render import RenderSpec, render_svg
from .tournaments import bounds_Tn, path_decomposition, quarter_layout


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_help(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _write(text: str, path: str | None):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_gen(args) -> int:
    kind, params = args.kind, args.params
    if kind == "transitive":
        G = transitive_tournament(int(params[0]))
    elif kind == "dicycle":
        G = directed_cycle(int(params[0]))
    elif kind == "path":
        G = path_graph(int(params[0]))
    elif kind == "kbip":
        G = oriented_complete_bipartite(int(params[0]), int(params[1]), args.direction)
    elif kind == "named":
        G = named_graph(params[0])
    elif kind == "counterexample":
        G = counterexample_graph(params[0])
    else:  # pragma: no cover - argparse restricts choices
        raise AssertionError(kind)
    _write(io.serialize_digraph(G) if isinstance(G, Digraph) else io.serialize_graph(G), args.out)
    return 0


def cmd_recognize(args) -> int:
    G = io.parse_any_graph(_read(args.file))
    if isinstance(G, Graph):
        ok = is_bar_visibility_graph(G, method=args.method)
        print("YES" if ok else "NO")
        return 0 if ok else 1
    verdict = is_bar_visibility_digraph(G)
    print("YES" if verdict else f"NO {verdict.reason}")
    return 0 if verdict else 1


def _test_digraph_from_files(digraph_path, roles_path):
    F = io.parse_digraph(_read(digraph_path))
    roles = io.parse_roles(_read(roles_path))
    n, z = roles["n"], roles["z"]
    seed = F.induced(range(n))
    T = build_test_digraph(seed.underlying(), z, seed)
    if T.digraph != F:
        raise BarvizError("digraph does not match the test digraph described by the role map")
    return T


def cmd_construct(args) -> int:
    if args.one_bar:
        L = construct_1bar(io.parse_digraph(_read(args.one_bar)))
    elif args.quarter is not None:
        L = quarter_layout(args.quarter)
    else:
        if not (args.roles and args.cycle):
            raise BarvizError("--two-bar needs --roles and --cycle")
        T = _test_digraph_from_files(args.two_bar, args.roles)
        L = two_bar_layout(T, HamCycle(io.parse_cycle(_read(args.cycle))))
    _write(io.serialize_layout(L), args.out)
    return 0


def cmd_verify(args) -> int:
    L = io.parse_layout(_read(args.layout))
    G = io.parse_digraph(_read(args.digraph))
    diff = verify_layout(L, G)
    if diff.ok:
        print("OK")
        return 0
    for u, v in sorted(diff.missing):
        print(f"missing {u} {v}")
    for u, v in sorted(diff.extra):
        print(f"extra {u} {v}")
    return 1


def cmd_bounds(args) -> int:
    r = bounds_Tn(args.tn)
    print(f"{r.n} {r.lower} {r.upper} {r.lower_source} {r.upper_source}")
    return 0


def cmd_decompose(args) -> int:
    _write(io.serialize_decomposition(path_decomposition(args.paths)), args.out)
    return 0


def cmd_reduce(args) -> int:
    H = io.parse_graph(_read(args.graph))
    T = build_test_digraph(H, args.z)
    _write(io.serialize_digraph(T.digraph), args.out)
    roles_path = args.roles or (args.out + ".roles" if args.out and args.out != "-" else None)
    roles = [("n", T.n)] + T.roles()
    if roles_path:
        Path(roles_path).write_text(io.serialize_roles(roles))
    else:
        sys.stdout.write(io.serialize_roles(roles))
    if args.cycle:
        c = hamiltonian_cycle(H)
        if c is None:
            print("NO Hamiltonian cycle", file=sys.stderr)
            return 1
        Path(args.cycle).write_text(io.serialize_cycle(c.order))
    return 0


def cmd_render(args) -> int:
    L = io.parse_layout(_read(args.layout))
    spec = RenderSpec(labels=not args.no_labels, strips=args.strips)
    _write(render_svg(L, spec), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="barviz", description="Bar visibility representations of digraphs.")
    p.add_argument("--seed", type=int, default=None, help="reserved for randomized commands")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="write a generated graph")
    g.add_argument("kind", choices=["transitive", "dicycle", "path", "kbip", "named", "counterexample"])
    g.add_argument("params", nargs="+")
    g.add_argument("--direction", choices=[A_TO_B, B_TO_A], default=A_TO_B)
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("recognize", help="decide b(G)=1 (digraph) or bar visibility (graph)")
    r.add_argument("file")
    r.add_argument("--method", choices=["apex", "exhaustive"], default="apex")
    r.set_defaults(func=cmd_recognize)

    c = sub.add_parser("construct", help="build a layout")
    which = c.add_mutually_exclusive_group(required=True)
    which.add_argument("--one-bar", metavar="DIGRAPH")
    which.add_argument("--quarter", type=int, metavar="N")
    which.add_argument("--two-bar", metavar="TEST_DIGRAPH")
    c.add_argument("--roles")
    c.add_argument("--cycle")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check that a layout realizes a digraph")
    v.add_argument("--layout", required=True)
    v.add_argument("--digraph", required=True)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bounds", help="bounds on b(T_n)")
    b.add_argument("--tn", type=int, required=True)
    b.set_defaults(func=cmd_bounds)

    d = sub.add_parser("decompose", help="spanning-path decomposition of K_2m")
    d.add_argument("--paths", type=int, required=True, metavar="M")
    d.add_argument("--out")
    d.set_defaults(func=cmd_decompose)

    red = sub.add_parser("reduce", help="build the test digraph f(H)")
    red.add_argument("--graph", required=True)
    red.add_argument("--z", type=int, default=0)
    red.add_argument("--out")
    red.add_argument("--roles")
    red.add_argument("--cycle", help="also search a Hamiltonian cycle of H and write it here")
    red.set_defaults(func=cmd_reduce)

    rd = sub.add_parser("render", help="draw a layout as SVG")
    rd.add_argument("layout")
    rd.add_argument("--strips", action="store_true")
    rd.add_argument("--no-labels", action="store_true")
    rd.add_argument("--out")
    rd.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    try:
        return args.func(args)
    except (BarvizError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
