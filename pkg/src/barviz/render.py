"""Deterministic SVG 1.1 drawings of bar layouts."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import escape

from .errors import InvalidInput, InvalidLayout
from .geometry import Layout, validate_layout, visible_pairs

_PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
            "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


@dataclass(frozen=True)
class RenderSpec:
    x_scale: Fraction = Fraction(20)
    y_scale: Fraction = Fraction(40)
    thickness: Fraction = Fraction(6)
    labels: bool = True
    strips: bool = False
    margin: Fraction = Fraction(20)

    def __post_init__(self):
        for name in ("x_scale", "y_scale", "thickness", "margin"):
            value = getattr(self, name)
            if isinstance(value, float):
                raise TypeError(f"{name} must be rational, not float")
            object.__setattr__(self, name, Fraction(value))
        if self.x_scale <= 0 or self.y_scale <= 0 or self.thickness <= 0 or self.margin < 0:
            raise InvalidInput("scales and thickness must be positive")


def _num(x: Fraction) -> str:
    # four decimals are plenty for drawing; rounding is exact and deterministic
    s = f"{round(x * 10000) / 10000:.4f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(L: Layout, spec: RenderSpec | None = None) -> str:
    spec = spec or RenderSpec()
    problems = validate_layout(L)
    if problems:
        raise InvalidLayout(problems)
    if not L.bars:
        return ('<?xml version="1.0" encoding="UTF-8"?>\n'
                '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="0" height="0"/>\n')
    x0, x1 = L.x_extent()
    y0 = min(b.y for b in L.bars)
    y1 = max(b.y for b in L.bars)
    m = spec.margin

    def X(x):
        return m + (x - x0) * spec.x_scale

    def Y(y):  # larger y is drawn higher
        return m + (y1 - y) * spec.y_scale

    width = 2 * m + (x1 - x0) * spec.x_scale
    height = 2 * m + (y1 - y0) * spec.y_scale + spec.thickness
    out = ['<?xml version="1.0" encoding="UTF-8"?>',
           f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           f'width="{_num(width)}" height="{_num(height)}" '
           f'viewBox="0 0 {_num(width)} {_num(height)}">']
    if spec.strips:
        out.append('<g class="strips" stroke="#999999" stroke-dasharray="3,3" fill="none">')
        for p in visible_pairs(L):
            lo, hi = L.bars[p.lower], L.bars[p.upper]
            a, b = p.strip
            out.append(f'<rect x="{_num(X(a))}" y="{_num(Y(hi.y) + spec.thickness)}" '
                       f'width="{_num((b - a) * spec.x_scale)}" '
                       f'height="{_num(Y(lo.y) - Y(hi.y) - spec.thickness)}"/>')
        out.append('</g>')
    out.append('<g class="bars">')
    order = sorted(range(len(L.bars)), key=lambda i: (L.bars[i].y, L.bars[i].x_lo,
                                                      L.bars[i].vertex, L.bars[i].x_hi))
    for i in order:
        b = L.bars[i]
        colour = _PALETTE[b.vertex % len(_PALETTE)]
        out.append(f'<rect x="{_num(X(b.x_lo))}" y="{_num(Y(b.y))}" '
                   f'width="{_num(b.length * spec.x_scale)}" height="{_num(spec.thickness)}" '
                   f'fill="{colour}" data-vertex="{b.vertex}"/>')
        if spec.labels:
            cx = X((b.x_lo + b.x_hi) / 2)
            out.append(f'<text x="{_num(cx)}" y="{_num(Y(b.y) - 2)}" font-size="10" '
                       f'text-anchor="middle">{escape(str(b.vertex))}</text>')
    out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"
