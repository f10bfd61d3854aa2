"""Line-oriented text formats for graphs, layouts, interval reps and friends.

Every format starts with a header line, then one record per line.  ``#``
starts a comment; blank lines are ignored.  Rationals are written ``p/q``
(plain integers when q=1).
"""
from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .geometry import Bar, Layout
from .graphs import Digraph, Graph
from .intervals import IntervalRep
from .tournaments import PathDecomposition


def fmt_q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", no) from None


def _rat(tok: str, no: int) -> Fraction:
    if "." in tok or "e" in tok.lower():
        raise ParseError(f"decimal numbers are not allowed: {tok!r}", no)
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected a rational, got {tok!r}", no) from None


def _header(rows, kind: str, key: str) -> tuple[int, int]:
    if not rows:
        raise ParseError(f"missing '{kind} {key}=...' header", 1)
    no, toks = rows[0]
    if len(toks) != 2 or toks[0] != kind or not toks[1].startswith(key + "="):
        raise ParseError(f"expected '{kind} {key}=<int>'", no)
    value = _int(toks[1][len(key) + 1:], no)
    if value < 0:
        raise ParseError(f"{key} must be non-negative", no)
    return no, value


def _records(rows, tag: str, arity: int | None):
    for no, toks in rows[1:]:
        if toks[0] != tag:
            raise ParseError(f"expected a '{tag}' record, got {toks[0]!r}", no)
        if arity is not None and len(toks) != arity + 1:
            raise ParseError(f"'{tag}' takes {arity} fields", no)
        yield no, toks[1:]


# ---------------------------------------------------------------------------
# graphs
# ---------------------------------------------------------------------------

def _parse_pairs(text: str, kind: str, tag: str):
    rows = list(_lines(text))
    _, n = _header(rows, kind, "n")
    pairs = []
    for no, (u, v) in _records(rows, tag, 2):
        u, v = _int(u, no), _int(v, no)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range for n={n}", no)
        if u == v:
            raise ParseError(f"loop at vertex {u}", no)
        pairs.append((u, v))
    return n, pairs


def parse_digraph(text: str) -> Digraph:
    n, arcs = _parse_pairs(text, "digraph", "a")
    return Digraph(n, frozenset(arcs))


def serialize_digraph(G: Digraph) -> str:
    return "".join([f"digraph n={G.n}\n"] + [f"a {u} {v}\n" for u, v in sorted(G.arcs)])


def parse_graph(text: str) -> Graph:
    n, edges = _parse_pairs(text, "graph", "e")
    return Graph(n, frozenset(edges))


def serialize_graph(G: Graph) -> str:
    return "".join([f"graph n={G.n}\n"] + [f"e {u} {v}\n" for u, v in sorted(G.edges)])


def parse_any_graph(text: str) -> Digraph | Graph:
    first = next(_lines(text), (1, [""]))[1][0]
    if first == "graph":
        return parse_graph(text)
    return parse_digraph(text)


# ---------------------------------------------------------------------------
# layouts and interval reps
# ---------------------------------------------------------------------------

def parse_layout(text: str) -> Layout:
    rows = list(_lines(text))
    _, t = _header(rows, "layout", "t")
    bars = []
    for no, (v, y, lo, hi) in _records(rows, "bar", 4):
        bars.append(Bar(_int(v, no), _rat(y, no), _rat(lo, no), _rat(hi, no)))
    return Layout(tuple(bars), t)


def serialize_layout(L: Layout) -> str:
    out = [f"layout t={L.t}\n"]
    out += [f"bar {b.vertex} {fmt_q(b.y)} {fmt_q(b.x_lo)} {fmt_q(b.x_hi)}\n" for b in L.bars]
    return "".join(out)


def parse_intervals(text: str) -> IntervalRep:
    rows = list(_lines(text))
    _, t = _header(rows, "intervals", "t")
    per: dict[int, list] = {}
    for no, (v, lo, hi) in _records(rows, "iv", 3):
        v, lo, hi = _int(v, no), _rat(lo, no), _rat(hi, no)
        if v < 0 or lo > hi:
            raise ParseError("bad interval record", no)
        per.setdefault(v, []).append((lo, hi))
    n = max(per, default=-1) + 1
    missing = [v for v in range(n) if v not in per]
    if missing:
        raise ParseError(f"vertex {missing[0]} has no interval", rows[0][0])
    return IntervalRep(tuple(tuple(per[v]) for v in range(n)), t)


def serialize_intervals(R: IntervalRep) -> str:
    out = [f"intervals t={R.t}\n"]
    for v, iv in enumerate(R.intervals):
        out += [f"iv {v} {fmt_q(lo)} {fmt_q(hi)}\n" for lo, hi in iv]
    return "".join(out)


# ---------------------------------------------------------------------------
# decompositions, role maps, cycles
# ---------------------------------------------------------------------------

def serialize_decomposition(P: PathDecomposition) -> str:
    out = [f"decomposition m={P.m}\n"]
    for i, (path, (a, b)) in enumerate(zip(P.paths, P.central), 1):
        out.append(f"path {i} " + " ".join(map(str, path)) + "\n")
        out.append(f"central {i} {a} {b}\n")
    return "".join(out)


def parse_decomposition(text: str) -> PathDecomposition:
    rows = list(_lines(text))
    _, m = _header(rows, "decomposition", "m")
    paths, central = {}, {}
    for no, toks in rows[1:]:
        if toks[0] == "path" and len(toks) >= 2:
            paths[_int(toks[1], no)] = tuple(_int(x, no) for x in toks[2:])
        elif toks[0] == "central" and len(toks) == 4:
            central[_int(toks[1], no)] = (_int(toks[2], no), _int(toks[3], no))
        else:
            raise ParseError(f"unexpected record {toks[0]!r}", no)
    keys = list(range(1, m + 1))
    if sorted(paths) != keys or sorted(central) != keys:
        raise ParseError(f"need paths and central edges 1..{m}", rows[0][0])
    return PathDecomposition(m, tuple(paths[i] for i in keys), tuple(central[i] for i in keys))


def serialize_roles(roles) -> str:
    return "".join(f"role {name} {v}\n" for name, v in roles)


def parse_roles(text: str) -> dict[str, int]:
    out = {}
    for no, toks in _lines(text):
        if toks[0] != "role" or len(toks) != 3:
            raise ParseError("expected 'role <name> <vertex>'", no)
        out[toks[1]] = _int(toks[2], no)
    return out


def serialize_cycle(order) -> str:
    return "cycle " + " ".join(map(str, order)) + "\n"


def parse_cycle(text: str) -> tuple[int, ...]:
    rows = list(_lines(text))
    if len(rows) != 1 or rows[0][1][0] != "cycle":
        raise ParseError("expected a single 'cycle v0 v1 ...' line", rows[0][0] if rows else 1)
    no, toks = rows[0]
    return tuple(_int(x, no) for x in toks[1:])
