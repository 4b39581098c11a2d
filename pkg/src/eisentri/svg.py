"""Render a lattice triangle as a standalone SVG drawing.

The one place in the package where coordinates leave the exact (1, ω)
basis: for drawing, x + yω is placed at the Cartesian point
(x − y/2, y·√3/2).  All library arithmetic stays integer-exact; floats
appear only here, at the picture boundary.
"""

from __future__ import annotations

import math

from .embedding import LatticeTriangle

_SQRT3 = math.sqrt(3.0)
_SCALE = 42.0
_MARGIN = 1.6


def _cartesian(x: int, y: int) -> tuple[float, float]:
    return x - y / 2.0, y * _SQRT3 / 2.0


def render_triangle(tri: LatticeTriangle, title: str = "") -> str:
    """SVG document showing the lattice, the vertices, and the edges."""
    vertices = {"A": tri.A, "B": tri.B, "C": tri.C}
    carts = {name: _cartesian(v.x, v.y) for name, v in vertices.items()}
    xs = [c[0] for c in carts.values()]
    ys = [c[1] for c in carts.values()]
    min_x, max_x = min(xs) - _MARGIN, max(xs) + _MARGIN
    min_y, max_y = min(ys) - _MARGIN, max(ys) + _MARGIN

    def place(cx: float, cy: float) -> tuple[float, float]:
        # SVG's y axis points down
        return (cx - min_x) * _SCALE, (max_y - cy) * _SCALE

    width = (max_x - min_x) * _SCALE
    height = (max_y - min_y) * _SCALE

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {width:.1f} {height:.1f}" '
        f'width="{width:.1f}" height="{height:.1f}">'
    ]
    if title:
        parts.append(f"<title>{title}</title>")
    parts.append(f'<rect width="{width:.1f}" height="{height:.1f}" fill="white"/>')

    # Background lattice dots covering the view box.
    y_lo = math.ceil(min_y / (_SQRT3 / 2.0))
    y_hi = math.floor(max_y / (_SQRT3 / 2.0))
    for y in range(y_lo, y_hi + 1):
        x_lo = math.ceil(min_x + y / 2.0)
        x_hi = math.floor(max_x + y / 2.0)
        for x in range(x_lo, x_hi + 1):
            px, py = place(*_cartesian(x, y))
            parts.append(
                f'<circle cx="{px:.1f}" cy="{py:.1f}" r="2.5" fill="#c8c8c8"/>'
            )

    corner_points = " ".join(
        f"{px:.1f},{py:.1f}" for px, py in (place(*carts[n]) for n in "ABC")
    )
    parts.append(
        f'<polygon points="{corner_points}" fill="#4f5d7533" '
        f'stroke="#4f5d75" stroke-width="2"/>'
    )

    for name in "ABC":
        px, py = place(*carts[name])
        parts.append(f'<circle cx="{px:.1f}" cy="{py:.1f}" r="4.5" fill="#ef8354"/>')
        parts.append(
            f'<text x="{px + 7:.1f}" y="{py - 7:.1f}" '
            f'font-family="sans-serif" font-size="15">{name}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
