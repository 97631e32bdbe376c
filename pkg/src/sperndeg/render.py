"""Deterministic SVG drawings of labelled planar triangulations."""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .complex import Triangulation
from .cover import is_alternating
from .errors import InvalidInstance
from .labelling import SignedLabelling, complementary_edges

__all__ = ["render_svg"]

SIZE = 480
MARGIN = 32

STYLE = """
    .cell { fill: #ffffff; stroke: #606060; stroke-width: 1; }
    .full { fill: #f2c14e; stroke: #606060; stroke-width: 1; }
    .alternating { fill: #8cc7a1; stroke: #606060; stroke-width: 1; }
    .complementary { stroke: #c0392b; stroke-width: 4; stroke-linecap: round; }
    .vertex { fill: #1f3b73; }
    .label { font-family: sans-serif; font-size: 13px; fill: #111111; }
"""


def _fmt(x: float) -> str:
    s = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(T: Triangulation, lab, title: str | None = None) -> str:
    """SVG with labels at vertices, shaded witnesses and bold complementary edges.

    Unsigned labellings shade simplices with pairwise distinct labels
    (class ``full``); signed labellings shade alternating simplices (class
    ``alternating``) and stroke complementary edges.
    """
    if T.dimension != 2 or T.ambient != 2:
        raise InvalidInstance("rendering needs a triangulation of a planar region")
    lab.check_total(T)
    xs = [p[0] for p in T.vertices]
    ys = [p[1] for p in T.vertices]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or Fraction(1)
    scale = Fraction(SIZE - 2 * MARGIN) / span

    def xy(p):
        # y axis points down in SVG
        return _fmt(float(MARGIN + (p[0] - x0) * scale)), _fmt(float(MARGIN + (y1 - p[1]) * scale))

    signed = isinstance(lab, SignedLabelling)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        f"  <style>{STYLE}  </style>",
    ]
    if title:
        out.append(f"  <title>{escape(title)}</title>")
    out.append('  <g id="simplices">')
    for s in T.simplices:
        labels = [lab[v] for v in s]
        if signed:
            cls = "alternating" if is_alternating(labels) else "cell"
        else:
            cls = "full" if len(set(labels)) == len(labels) else "cell"
        pts = " ".join(",".join(xy(T.vertices[v])) for v in s)
        out.append(f'    <polygon class="{cls}" points="{pts}"/>')
    out.append("  </g>")
    if signed:
        edges = complementary_edges(T, lab)
        out.append('  <g id="complementary">')
        for a, b in sorted(edges.boundary + edges.internal):
            (ax, ay), (bx, by) = xy(T.vertices[a]), xy(T.vertices[b])
            out.append(f'    <line class="complementary" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}"/>')
        out.append("  </g>")
    out.append('  <g id="vertices">')
    for v, p in enumerate(T.vertices):
        x, y = xy(p)
        out.append(f'    <circle class="vertex" cx="{x}" cy="{y}" r="3"/>')
        out.append(f'    <text class="label" x="{_fmt(float(x) + 5)}" y="{_fmt(float(y) - 5)}">{lab[v]}</text>')
    out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
