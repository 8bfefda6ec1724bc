"""DOT and SVG exports.

SVG pictures place vertex k of the N-gon at angle 90 - k*360/N degrees,
so vertices run clockwise from the top.  Solid chords draw the given
diagonals, dashed chords draw middle terms or extra closure members.
"""

from __future__ import annotations

import math
from typing import Iterable

from .arquiver import ArQuiver
from .homs import ExtTriangle
from .polygon import CategoryParams, Diagonal
from .sms import ClosureResult
from .tilting import TiltingGraph
from .wire import system_id


def _diagonal_id(d: Diagonal) -> str:
    return f"d_{d.lo}_{d.hi}"


def export_dot_ar_quiver(quiver: ArQuiver) -> str:
    lines = ["digraph ar_quiver {"]
    for v in quiver.vertices:
        lines.append(f'  {_diagonal_id(v)} [label="{v.lo},{v.hi}"];')
    for source, target in quiver.arrows:
        lines.append(f"  {_diagonal_id(source)} -> {_diagonal_id(target)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot_tilting_graph(graph: TiltingGraph) -> str:
    lines = ["digraph tilting_graph {"]
    for node in graph.nodes:
        label = " ".join(f"{d.lo}{d.hi}" for d in node.simples)
        lines.append(f'  {system_id(node)} [label="{label}"];')
    for edge in graph.edges:
        lines.append(
            f"  {system_id(edge.source)} -> {system_id(edge.target)}"
            f' [label="{edge.pivot.lo},{edge.pivot.hi}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_dot_empty() -> str:
    return "digraph empty {\n}\n"


SIZE = 400.0
MARGIN = 36.0


def _vertex_xy(k: int, n: int) -> tuple[float, float]:
    angle = math.radians(90.0 - 360.0 * k / n)
    radius = SIZE / 2 - MARGIN
    return (
        SIZE / 2 + radius * math.cos(angle),
        SIZE / 2 - radius * math.sin(angle),
    )


def export_svg_polygon(
    params: CategoryParams,
    solid: Iterable[Diagonal] = (),
    dashed: Iterable[Diagonal] = (),
) -> str:
    n = params.polygon_size
    points = [_vertex_xy(k, n) for k in range(n)]
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE:.0f}" '
        f'height="{SIZE:.0f}" viewBox="0 0 {SIZE:.0f} {SIZE:.0f}">',
        '<polygon points="'
        + " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
        + '" fill="none" stroke="#888" stroke-width="1"/>',
    ]
    for style, chords in (("solid", solid), ("dashed", dashed)):
        dash = ' stroke-dasharray="6,4"' if style == "dashed" else ""
        color = "#b33" if style == "solid" else "#383"
        for d in sorted(set(chords)):
            (x1, y1), (x2, y2) = points[d.lo], points[d.hi]
            parts.append(
                f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                f'stroke="{color}" stroke-width="2"{dash}/>'
            )
    for k, (x, y) in enumerate(points):
        lx = SIZE / 2 + (x - SIZE / 2) * 1.12
        ly = SIZE / 2 + (y - SIZE / 2) * 1.12
        parts.append(
            f'<text x="{lx:.2f}" y="{ly:.2f}" font-size="14" '
            f'text-anchor="middle" dominant-baseline="middle">{k}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def export_svg_system(params: CategoryParams, system) -> str:
    return export_svg_polygon(params, solid=list(system))


def export_svg_closure(closure: ClosureResult) -> str:
    extras = [m for m in closure.members if m not in set(closure.seed)]
    return export_svg_polygon(closure.params, solid=closure.seed, dashed=extras)


def export_svg_triangle(params: CategoryParams, triangle: ExtTriangle) -> str:
    return export_svg_polygon(
        params,
        solid=[triangle.through, triangle.target],
        dashed=list(triangle.middle),
    )
