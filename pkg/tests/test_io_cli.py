from __future__ import annotations

import random
from fractions import Fraction

import pytest

from barviz import io
from barviz.cli import main
from barviz.errors import InvalidInput, InvalidLayout, ParseError
from barviz.geometry import Bar, Layout
from barviz.graphs import Digraph, directed_cycle, named_graph, transitive_tournament
from barviz.intervals import K53_TEMPLATE
from barviz.reduction import build_test_digraph
from barviz.render import RenderSpec, render_svg
from barviz.tournaments import path_decomposition, quarter_layout
from oracles import random_layout


def test_parse_digraph_basic():
    G = io.parse_digraph("digraph n=2\na 0 1\n")
    assert G == Digraph(2, frozenset({(0, 1)}))


def test_parse_comments_and_blank_lines():
    text = "# header comment\n\ndigraph n=3  # three vertices\na 0 1\n# skip\na 1 2\n"
    assert io.parse_digraph(text).arcs == {(0, 1), (1, 2)}


@pytest.mark.parametrize("text,line", [
    ("digraph n=2\na 0 5\n", 2),
    ("digraph n=2\na 0\n", 2),
    ("digraph n=x\n", 1),
    ("graph n=2\ne 0 1\n", 1),
    ("digraph n=2\nb 0 1\n", 2),
    ("digraph n=2\na 1 1\n", 2),
    ("", 1),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        io.parse_digraph(text)
    assert exc.value.line == line


def test_round_trip_test_digraph():
    F = build_test_digraph(named_graph("cube")).digraph
    text = io.serialize_digraph(F)
    assert io.parse_digraph(text) == F
    assert io.serialize_digraph(io.parse_digraph(text)) == text


def test_graph_round_trip():
    H = named_graph("petersen")
    assert io.parse_graph(io.serialize_graph(H)) == H
    assert io.parse_any_graph(io.serialize_graph(H)) == H


def test_layout_round_trip_exact():
    rng = random.Random(2)
    for _ in range(30):
        L = random_layout(rng, 20)
        L = Layout(tuple(Bar(b.vertex, b.y / 3, b.x_lo / 7, b.x_hi / 7) for b in L.bars), L.t)
        text = io.serialize_layout(L)
        assert io.parse_layout(text) == L
        assert io.serialize_layout(io.parse_layout(text)) == text


def test_layout_rejects_decimals():
    with pytest.raises(ParseError):
        io.parse_layout("layout t=1\nbar 0 0 0.5 1\n")
    assert io.parse_layout("layout t=1\nbar 0 1/2 -3/4 1\n").bars[0].x_lo == Fraction(-3, 4)


def test_intervals_round_trip():
    text = io.serialize_intervals(K53_TEMPLATE)
    assert io.parse_intervals(text) == K53_TEMPLATE
    with pytest.raises(ParseError):
        io.parse_intervals("intervals t=1\niv 1 0 1\n")


def test_decomposition_and_roles_round_trip():
    P = path_decomposition(5)
    assert io.parse_decomposition(io.serialize_decomposition(P)) == P
    roles = [("s1", 3), ("z", 0)]
    assert io.parse_roles(io.serialize_roles(roles)) == dict(roles)
    assert io.parse_cycle(io.serialize_cycle((0, 2, 1))) == (0, 2, 1)


def test_render_t3_and_determinism():
    L = Layout((Bar(0, 0, 0, 2), Bar(1, 1, 0, 1), Bar(2, 2, 0, 2)), 1)
    svg = render_svg(L)
    assert svg.count("<rect") == 3
    assert svg == render_svg(L)
    assert svg.startswith("<?xml") and 'version="1.1"' in svg


def test_render_quarter_and_strips():
    L = quarter_layout(16)
    assert render_svg(L, RenderSpec(labels=False)).count("<rect") == 64
    with_strips = render_svg(L, RenderSpec(strips=True))
    assert "stroke-dasharray" in with_strips and with_strips.count("<rect") > 64


def test_render_order_sorted():
    L = Layout((Bar(1, 1, 0, 1), Bar(0, 0, 5, 6), Bar(2, 0, 0, 1)), 1)
    svg = render_svg(L, RenderSpec(labels=False))
    verts = [int(part.split('"')[0]) for part in svg.split('data-vertex="')[1:]]
    assert verts == [2, 0, 1]


def test_render_errors():
    with pytest.raises(InvalidLayout):
        render_svg(Layout((Bar(0, 0, 0, 2), Bar(1, 0, 1, 3)), 1))
    with pytest.raises(InvalidInput):
        RenderSpec(x_scale=0)
    with pytest.raises(TypeError):
        RenderSpec(x_scale=1.5)


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------

def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_cli_bounds(capsys):
    assert main(["bounds", "--tn", "11"]) == 0
    out = capsys.readouterr().out.split()
    assert out[:3] == ["11", "3", "3"]


def test_cli_recognize(tmp_path, capsys):
    f = write(tmp_path, "c3.txt", io.serialize_digraph(directed_cycle(3)))
    assert main(["recognize", f]) == 1
    assert capsys.readouterr().out.strip() == "NO ConsistentCycle"
    f = write(tmp_path, "t4.txt", io.serialize_digraph(transitive_tournament(4)))
    assert main(["recognize", f]) == 0
    assert capsys.readouterr().out.strip() == "YES"
    f = write(tmp_path, "t5.txt", io.serialize_digraph(transitive_tournament(5)))
    assert main(["recognize", f]) == 1
    assert capsys.readouterr().out.strip() == "NO NonPlanar"


def test_cli_construct_verify(tmp_path, capsys):
    g = write(tmp_path, "t4.txt", io.serialize_digraph(transitive_tournament(4)))
    lay = str(tmp_path / "t4.lay")
    assert main(["construct", "--one-bar", g, "--out", lay]) == 0
    assert main(["verify", "--layout", lay, "--digraph", g]) == 0
    assert capsys.readouterr().out.strip() == "OK"
    rev = write(tmp_path, "rev.txt", io.serialize_digraph(transitive_tournament(4).reversed()))
    assert main(["verify", "--layout", lay, "--digraph", rev]) == 1
    assert "missing" in capsys.readouterr().out


def test_cli_quarter_and_render(tmp_path):
    lay = str(tmp_path / "q.lay")
    assert main(["construct", "--quarter", "9", "--out", lay]) == 0
    svg = str(tmp_path / "q.svg")
    assert main(["render", lay, "--out", svg]) == 0
    first = (tmp_path / "q.svg").read_text()
    assert main(["render", lay, "--out", svg]) == 0
    assert (tmp_path / "q.svg").read_text() == first


def test_cli_reduce_two_bar(tmp_path, capsys):
    h = write(tmp_path, "k33.txt", io.serialize_graph(named_graph("k33")))
    f = str(tmp_path / "f.txt")
    cyc = str(tmp_path / "f.cycle")
    assert main(["reduce", "--graph", h, "--z", "2", "--out", f, "--cycle", cyc]) == 0
    roles = io.parse_roles((tmp_path / "f.txt.roles").read_text())
    assert roles["z"] == 2 and roles["n"] == 6
    lay = str(tmp_path / "f.lay")
    assert main(["construct", "--two-bar", f, "--roles", f + ".roles", "--cycle", cyc,
                 "--out", lay]) == 0
    assert main(["verify", "--layout", lay, "--digraph", f]) == 0
    assert capsys.readouterr().out.strip().endswith("OK")


def test_cli_reduce_petersen_no_cycle(tmp_path):
    h = write(tmp_path, "p.txt", io.serialize_graph(named_graph("petersen")))
    assert main(["reduce", "--graph", h, "--out", str(tmp_path / "f"),
                 "--cycle", str(tmp_path / "c")]) == 1


def test_cli_decompose_and_gen(tmp_path, capsys):
    assert main(["decompose", "--paths", "4"]) == 0
    assert "path 1 1 2 8 3 7 4 6 5" in capsys.readouterr().out
    assert main(["gen", "kbip", "5", "3"]) == 0
    assert len(io.parse_digraph(capsys.readouterr().out).arcs) == 15
    assert main(["--seed", "7", "gen", "named", "cube"]) == 0
    assert io.parse_graph(capsys.readouterr().out) == named_graph("cube")


def test_cli_errors(tmp_path, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err
    bad = write(tmp_path, "bad.txt", "digraph n=2\na 0 5\n")
    assert main(["recognize", bad]) == 2
    assert "line 2" in capsys.readouterr().err
    assert main(["verify", "--layout", str(tmp_path / "none"), "--digraph", bad]) == 2
    assert main(["gen", "named", "nope"]) == 2
