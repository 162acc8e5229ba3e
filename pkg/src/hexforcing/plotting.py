"""SVG drawings of hexagonal systems and DOT export of the dual graph.

Output is byte-stable: the SVG id salt and the date stamp are pinned so the
same call always writes the same file.
"""
from __future__ import annotations

import math
from typing import Iterable

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.collections import LineCollection  # noqa: E402

from .hexgrid import EXTERIOR, Edge, HexSystem, dual_graph  # noqa: E402

_SX = math.sqrt(3) / 2
_SY = 0.5
HIGHLIGHT = "#d62728"
PALETTE = ("#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf")


def plane(x, y) -> tuple[float, float]:
    """Lattice coordinates to unit-side plane coordinates."""
    return x * _SX, y * _SY


def _segments(edges: Iterable[Edge]):
    return [(plane(*e.u), plane(*e.v)) for e in edges]


def draw_system(
    hs: HexSystem,
    highlight: Iterable[Edge] = (),
    edge_groups=None,
    title: str | None = None,
    ax=None,
):
    """Draw ``hs`` on a matplotlib axis and return the axis.

    Args:
        highlight: edges drawn thick and red on top of everything else.
        edge_groups: optional list of edge sets, each drawn in its own color
            (used for the edge-class partition).
    """
    if ax is None:
        _, ax = plt.subplots(figsize=(1.2 + 0.9 * len(hs.centers) ** 0.5 * 2,) * 2)
    highlight = frozenset(highlight)
    ax.add_collection(LineCollection(_segments(hs.edges), colors="0.35", linewidths=1.0))
    for k, group in enumerate(edge_groups or ()):
        ax.add_collection(
            LineCollection(_segments(group), colors=PALETTE[k % len(PALETTE)], linewidths=2.0)
        )
    if highlight:
        ax.add_collection(LineCollection(_segments(sorted(highlight)), colors=HIGHLIGHT, linewidths=3.2))
    xs, ys, fills = [], [], []
    for v in hs.vertices:
        px, py = plane(*v)
        xs.append(px)
        ys.append(py)
        fills.append("black" if v.is_black else "white")
    ax.scatter(xs, ys, s=22, c=fills, edgecolors="black", linewidths=0.8, zorder=3)
    ax.set_aspect("equal")
    ax.margins(0.08)
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=10)
    return ax


def save_svg(fig, path) -> None:
    with plt.rc_context({"svg.hashsalt": "hexforcing", "svg.fonttype": "path"}):
        fig.savefig(path, format="svg", metadata={"Date": None}, bbox_inches="tight")
    plt.close(fig)


def render_svg(hs: HexSystem, path, highlight: Iterable[Edge] = (), edge_groups=None, title=None):
    ax = draw_system(hs, highlight=highlight, edge_groups=edge_groups, title=title)
    save_svg(ax.figure, path)


def dual_dot(hs: HexSystem, highlight: Iterable[Edge] = ()) -> str:
    """Dual multigraph in DOT; dual edges crossing ``highlight`` are bold."""
    highlight = frozenset(highlight)

    def name(node):
        return "ext" if node == EXTERIOR else f"h_{node[0]}_{node[1]}".replace("-", "m")

    lines = ["graph dual {", "  node [shape=circle, fontsize=9];"]
    for c in hs.centers:
        x, y = plane(*c)
        lines.append(f'  {name(c)} [label="{c[0]},{c[1]}", pos="{x:.3f},{y:.3f}!"];')
    lines.append('  ext [label="ext", shape=doublecircle];')
    for a, b, e in dual_graph(hs).edges:
        style = ', style=bold, color="red"' if e in highlight else ""
        lines.append(f'  {name(a)} -- {name(b)} [label="{e.u.x} {e.u.y} {e.v.x} {e.v.y}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
