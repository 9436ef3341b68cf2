"""Deterministic SVG 1.1 drawings of a scene and its overlaps."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .overlap import Overlap, overlaps
from .scene import Scene


@dataclass(frozen=True)
class RenderStyle:
    size: int = 480
    margin: int = 16
    color_p: str = "#000000"
    color_q: str = "#d62728"
    overlap_fill: str = "#9ecae1"
    overlap_opacity: str = "0.8"
    stroke_p: str = "1.5"
    stroke_q: str = "1.5"


class _Frame:
    """Affine map from scene coordinates to pixels, y pointing down."""

    def __init__(self, s: Scene, style: RenderStyle):
        pts = list(s.P) + list(s.Q)
        self.x0 = min(p.x for p in pts)
        self.y1 = max(p.y for p in pts)
        span = max(max(p.x for p in pts) - self.x0, self.y1 - min(p.y for p in pts))
        self.k = Fraction(style.size - 2 * style.margin) / span
        self.margin = style.margin

    def __call__(self, p) -> str:
        x = self.margin + (p[0] - self.x0) * self.k
        y = self.margin + (self.y1 - p[1]) * self.k
        return f"{float(x):.3f},{float(y):.3f}"


def _points(frame: _Frame, ring) -> str:
    return " ".join(frame(p) for p in ring)


def render_svg(s: Scene, style: RenderStyle = RenderStyle(), items: list[Overlap] | None = None) -> str:
    """SVG text with ``P`` stroked in black, ``Q`` in red and every overlap
    filled as ``<polygon class="overlap">``."""
    if items is None:
        items = overlaps(s)
    frame = _Frame(s, style)
    size = style.size
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<g id="overlaps" fill="{style.overlap_fill}" fill-opacity="{style.overlap_opacity}" stroke="none">',
    ]
    for o in items:
        out.append(f'<polygon class="overlap" points="{_points(frame, o.boundary)}"/>')
    out.append("</g>")
    out.append(
        f'<polygon id="P" fill="none" stroke="{style.color_p}" stroke-width="{style.stroke_p}" '
        f'stroke-linejoin="round" points="{_points(frame, s.P)}"/>'
    )
    out.append(
        f'<polygon id="Q" fill="none" stroke="{style.color_q}" stroke-width="{style.stroke_q}" '
        f'stroke-linejoin="round" points="{_points(frame, s.Q)}"/>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
