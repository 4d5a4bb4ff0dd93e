"""SVG pictures of dissections, spider collections and pairings.

Vertices sit on the unit circle, anti-clockwise, vertex 1 at angle 0. SVG's y
axis points down, so a point at angle t is drawn at (cos t, -sin t). All
coordinates are printed with a fixed precision so output is byte-stable.
"""
from __future__ import annotations

import math
from typing import Sequence

HEADER = (
    '<?xml version="1.0" encoding="UTF-8"?>\n'
    '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
    'viewBox="-1.2 -1.2 2.4 2.4" width="240" height="240">\n'
)
STROKE = 'stroke="black" stroke-width="0.012" fill="none"'


def _f(x: float) -> str:
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def vertex_xy(k: int, total: int) -> tuple[float, float]:
    t = 2 * math.pi * (k - 1) / total
    return math.cos(t), -math.sin(t)


def _pt(xy: tuple[float, float]) -> str:
    return f"{_f(xy[0])},{_f(xy[1])}"


def _dots(total: int, labels: Sequence[str] | None = None) -> list[str]:
    out = []
    for k in range(1, total + 1):
        x, y = vertex_xy(k, total)
        out.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="0.025" fill="black"/>')
        text = labels[k - 1] if labels else str(k)
        out.append(
            f'<text x="{_f(1.1 * x)}" y="{_f(1.1 * y)}" font-size="0.09" '
            f'text-anchor="middle" dominant-baseline="middle">{text}</text>'
        )
    return out


def _finish(parts: list[str]) -> str:
    return HEADER + "".join(f"  {p}\n" for p in parts) + "</svg>\n"


def render_dissection(size: int, diagonals, base=None) -> str:
    parts = []
    if base:
        pts = " ".join(_pt(vertex_xy(v, size)) for v in base)
        parts.append(f'<polygon points="{pts}" fill="#cfe2f3" stroke="none"/>')
    outline = " ".join(_pt(vertex_xy(v, size)) for v in range(1, size + 1))
    parts.append(f'<polygon points="{outline}" {STROKE}/>')
    for u, w in diagonals:
        (x1, y1), (x2, y2) = vertex_xy(u, size), vertex_xy(w, size)
        parts.append(f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}" {STROKE}/>')
    return _finish(parts + _dots(size))


def render_spiders(size: int, blocks, hole_gap: int | None = None) -> str:
    parts = [f'<circle cx="0" cy="0" r="1" {STROKE}/>']
    if hole_gap is not None:
        # mark the hole face where it meets the boundary, mid-way along its gap
        t = 2 * math.pi * (hole_gap - 0.5) / size
        parts.append(
            f'<circle cx="{_f(0.85 * math.cos(t))}" cy="{_f(-0.85 * math.sin(t))}" '
            f'r="0.05" fill="#999999"/>'
        )
    for b in blocks:
        pts = [vertex_xy(v, size) for v in b]
        cx = sum(p[0] for p in pts) / len(pts)
        cy = sum(p[1] for p in pts) / len(pts)
        for x, y in pts:
            parts.append(f'<line x1="{_f(cx)}" y1="{_f(cy)}" x2="{_f(x)}" y2="{_f(y)}" {STROKE}/>')
        parts.append(f'<circle cx="{_f(cx)}" cy="{_f(cy)}" r="0.035" fill="black"/>')
    return _finish(parts + _dots(size))


def render_pairing(size: int, arcs, labels: Sequence[int]) -> str:
    parts = [f'<circle cx="0" cy="0" r="1" {STROKE}/>']
    for u, w in arcs:
        (x1, y1), (x2, y2) = vertex_xy(u, size), vertex_xy(w, size)
        # pull the control point toward the centre; short arcs stay near the rim
        sep = min(w - u, size - (w - u)) / size
        pull = 1 - 2 * sep
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        norm = math.hypot(mx, my)
        if norm > 1e-9:
            cx, cy = mx / norm * pull, my / norm * pull
        else:
            cx, cy = 0.0, 0.0
        parts.append(f'<path d="M {_pt((x1, y1))} Q {_pt((cx, cy))} {_pt((x2, y2))}" {STROKE}/>')
    return _finish(parts + _dots(size, [str(x) for x in labels]))
