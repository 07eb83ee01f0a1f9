"""Deterministic SVG plots of the proof regions.

The only place in the package where floating point touches region data;
output is display-only.  Element order and 6-decimal coordinate formatting
are fixed so identical inputs give byte-identical documents.
"""

from __future__ import annotations

from .regions import Polygon, region_delta, region_delta_alpha


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def render_region_svg(eps, alpha=None, scale: float = 100.0) -> str:
    """SVG document with the red triangle region and, optionally, the blue
    plateau region, plus axes and the dashed guides t = 2 and y = 1."""
    if scale <= 0:
        raise ValueError(f"scale must be positive, got {scale}")
    layers: list[tuple[str, Polygon]] = [("red", region_delta(eps))]
    if alpha is not None:
        layers.append(("blue", region_delta_alpha(eps, alpha)))

    points = [
        (float(t), float(y)) for _, poly in layers for t, y in poly.vertices
    ]
    t_max = max(t for t, _ in points)
    y_max = max(y for _, y in points)
    margin_t = 0.1 * t_max
    margin_y = 0.1 * y_max
    width = (t_max + 2 * margin_t) * scale
    height = (y_max + 2 * margin_y) * scale

    def to_px(t: float, y: float) -> tuple[float, float]:
        return (margin_t + t) * scale, (y_max + margin_y - y) * scale

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
    ]

    # axes with arrowheads, labeled t and y
    origin = to_px(0.0, 0.0)
    t_end = (width, origin[1])
    y_end = (origin[0], 0.0)
    lines.append(
        f'<line x1="{_fmt(0.0)}" y1="{_fmt(origin[1])}" x2="{_fmt(t_end[0])}" '
        f'y2="{_fmt(t_end[1])}" stroke="black" stroke-width="1"/>'
    )
    lines.append(
        f'<path d="M {_fmt(t_end[0] - 8)} {_fmt(t_end[1] - 4)} L {_fmt(t_end[0])} '
        f'{_fmt(t_end[1])} L {_fmt(t_end[0] - 8)} {_fmt(t_end[1] + 4)}" '
        'fill="none" stroke="black" stroke-width="1"/>'
    )
    lines.append(
        f'<text x="{_fmt(t_end[0] - 14)}" y="{_fmt(t_end[1] + 16)}" '
        'font-size="14" font-family="sans-serif">t</text>'
    )
    lines.append(
        f'<line x1="{_fmt(origin[0])}" y1="{_fmt(height)}" x2="{_fmt(y_end[0])}" '
        f'y2="{_fmt(y_end[1])}" stroke="black" stroke-width="1"/>'
    )
    lines.append(
        f'<path d="M {_fmt(y_end[0] - 4)} {_fmt(y_end[1] + 8)} L {_fmt(y_end[0])} '
        f'{_fmt(y_end[1])} L {_fmt(y_end[0] + 4)} {_fmt(y_end[1] + 8)}" '
        'fill="none" stroke="black" stroke-width="1"/>'
    )
    lines.append(
        f'<text x="{_fmt(y_end[0] + 8)}" y="{_fmt(y_end[1] + 14)}" '
        'font-size="14" font-family="sans-serif">y</text>'
    )

    # dashed guides from the reference figure, when they cross the box
    if t_max + margin_t >= 2.0:
        gx = to_px(2.0, 0.0)[0]
        lines.append(
            f'<line x1="{_fmt(gx)}" y1="{_fmt(0.0)}" x2="{_fmt(gx)}" '
            f'y2="{_fmt(height)}" stroke="gray" stroke-width="1" '
            'stroke-dasharray="6,4"/>'
        )
    if y_max + margin_y >= 1.0:
        gy = to_px(0.0, 1.0)[1]
        lines.append(
            f'<line x1="{_fmt(0.0)}" y1="{_fmt(gy)}" x2="{_fmt(width)}" '
            f'y2="{_fmt(gy)}" stroke="gray" stroke-width="1" '
            'stroke-dasharray="6,4"/>'
        )

    for color, poly in layers:
        coords = [to_px(float(t), float(y)) for t, y in poly.vertices]
        path = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in coords) + " Z"
        lines.append(
            f'<path d="{path}" fill="none" stroke="{color}" stroke-width="2"/>'
        )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"
