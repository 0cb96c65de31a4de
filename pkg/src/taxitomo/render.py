"""Static SVG renderings (polygon + iterates, grid sets)."""

from __future__ import annotations

import numpy as np

from taxitomo.geometry import Polygon
from taxitomo.gridrecon import ControlGrid, GridSet

SIZE = 400
MARGIN = 20


def _frame(xmin, xmax, ymin, ymax):
    span = max(xmax - xmin, ymax - ymin) or 1.0
    scale = (SIZE - 2 * MARGIN) / span

    def tx(x, y):
        return MARGIN + (x - xmin) * scale, SIZE - MARGIN - (y - ymin) * scale

    return tx


def _header() -> list[str]:
    return [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
            f'viewBox="0 0 {SIZE} {SIZE}">',
            f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>']


def trajectory_svg(p: Polygon, trajectory: np.ndarray, max_points: int = 200) -> str:
    """Polygon outline plus the first ``max_points`` iterates; later iterates are darker."""
    pts = np.asarray(trajectory)[:max_points]
    xmin, xmax, ymin, ymax = p.bounds()
    if len(pts):
        xmin, xmax = min(xmin, pts[:, 0].min()), max(xmax, pts[:, 0].max())
        ymin, ymax = min(ymin, pts[:, 1].min()), max(ymax, pts[:, 1].max())
    tx = _frame(xmin, xmax, ymin, ymax)
    out = _header()
    poly = " ".join("{:.3f},{:.3f}".format(*tx(x, y)) for x, y in p.vertices)
    out.append(f'<polygon points="{poly}" fill="#eef3fb" stroke="black" stroke-width="1"/>')
    k_max = max(len(pts) - 1, 1)
    for k, (x, y) in enumerate(pts):
        grey = int(round(220 * (1 - k / k_max)))
        cx, cy = tx(x, y)
        out.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="3" fill="rgb({grey},{grey},{grey})"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def gridset_svg(L: GridSet, grid: ControlGrid) -> str:
    a, b, c, d = grid.box
    tx = _frame(a, b, c, d)
    out = _header()
    x0, y0 = tx(a, d)
    x1, y1 = tx(b, c)
    out.append(f'<rect x="{x0:.3f}" y="{y0:.3f}" width="{x1 - x0:.3f}" height="{y1 - y0:.3f}" '
               f'fill="none" stroke="black" stroke-width="1"/>')
    for r in range(grid.n):
        for col in range(grid.n):
            if not L.occupancy[r, col]:
                continue
            lo_x, hi_x, lo_y, hi_y = grid.cell(r, col)
            px, py = tx(lo_x, hi_y)
            qx, qy = tx(hi_x, lo_y)
            out.append(f'<rect x="{px:.3f}" y="{py:.3f}" width="{qx - px:.3f}" height="{qy - py:.3f}" '
                       f'fill="#333" stroke="white" stroke-width="0.5"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
