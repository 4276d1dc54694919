"""Deterministic SVG pictures of colored point sets."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence
from xml.sax.saxutils import escape

from .errors import InvalidInput
from .figures import PALETTE
from .visibility import ColoredPointSet

MAX_POINTS = 10_000


@dataclass(frozen=True)
class Style:
    size: int = 400  # width of the drawing in px
    radius: float = 5.0
    show_names: bool = False
    blocked_pairs: bool = False  # draw segments between same-colored points
    segments: Optional[Sequence[tuple[int, int]]] = None


def _f(v: float) -> str:
    return f"{v:.3f}"


def render(X: ColoredPointSet, style: Style = Style()) -> str:
    """SVG 1.1 document: the exact bounding box plus a 5% margin on each side,
    one circle per point filled by color index."""
    n = len(X)
    if n == 0:
        raise InvalidInput("nothing to render")
    if n > MAX_POINTS:
        raise InvalidInput(f"more than {MAX_POINTS} points")
    xs = [p.x for p in X.points]
    ys = [p.y for p in X.points]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    w = x1 - x0 or Fraction(1)
    h = y1 - y0 or Fraction(1)
    mx, my = w / 20, h / 20
    x0, y1 = x0 - mx, y1 + my
    w, h = w + 2 * mx, h + 2 * my
    scale = Fraction(style.size) / w
    width, height = style.size, float(h * scale)

    def at(p):
        # SVG's y axis points down
        return float((p.x - x0) * scale), float((y1 - p.y) * scale)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{_f(height)}" viewBox="0 0 {width} {_f(height)}">',
        f'<rect x="0" y="0" width="{width}" height="{_f(height)}" fill="white"/>',
    ]
    pairs = list(style.segments or [])
    if style.blocked_pairs:
        pairs += [(i, j) for i, j in combinations(range(n), 2) if X.colors[i] == X.colors[j]]
    for i, j in pairs:
        (ax, ay), (bx, by) = at(X.points[i]), at(X.points[j])
        color = PALETTE[X.colors[i] % len(PALETTE)]
        out.append(f'<line class="segment" x1="{_f(ax)}" y1="{_f(ay)}" x2="{_f(bx)}" y2="{_f(by)}" '
                   f'stroke="{color}" stroke-width="1" stroke-dasharray="4 3"/>')
    for i, p in enumerate(X.points):
        cx, cy = at(p)
        c = X.colors[i]
        out.append(f'<circle class="mark color-{c}" cx="{_f(cx)}" cy="{_f(cy)}" r="{style.radius}" '
                   f'fill="{PALETTE[c % len(PALETTE)]}" stroke="black" stroke-width="0.5"/>')
        if style.show_names and X.names and X.names[i]:
            out.append(f'<text x="{_f(cx + style.radius + 2)}" y="{_f(cy - style.radius)}" '
                       f'font-size="11">{escape(X.names[i])}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
