"""Schematic SVG drawings: tree pairs, Thompson graphs, book layouts, shaded links.

Arcs are semicircles over a horizontal spine.  Upper arcs and "+" signs
are red, lower arcs and "-" signs blue.
"""

from __future__ import annotations

import io

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Arc as ArcPatch, Circle  # noqa: E402

from .bookembed import UPPER, BookLayout  # noqa: E402
from .element import Element, Tree  # noqa: E402
from .standardize import element_layout  # noqa: E402

__all__ = ["tree_pair_svg", "layout_svg", "link_svg"]

RED, BLUE, GRAY = "#c0392b", "#2e5fa8", "#9a9a9a"
SIGN_COLOR = {"+": RED, "-": BLUE}

plt.rcParams["svg.hashsalt"] = "thompsonlinks"


def _finish(fig) -> str:
    buf = io.StringIO()
    fig.savefig(buf, format="svg", bbox_inches="tight", metadata={"Date": None})
    plt.close(fig)
    return buf.getvalue()


def _tree_points(t: Tree, up: bool, out: list) -> None:
    """Segments of a tree drawn over leaf x-positions 0..k-1."""
    sign = 1 if up else -1

    def walk(node: Tree, start: int) -> tuple:
        if node is None:
            return start + 1, (float(start), 0.0)
        pos, kids = start, []
        for child in node:
            pos, point = walk(child, pos)
            kids.append(point)
        xs = [p[0] for p in kids]
        top = max(abs(p[1]) for p in kids) + 1.0
        here = (sum(xs) / len(xs), sign * top)
        out.extend((here, p) for p in kids)
        return pos, here

    walk(t, 0)


def tree_pair_svg(a: Element) -> str:
    fig, ax = plt.subplots(figsize=(max(3, a.leaves * 0.6), 4))
    for tree, up, color in ((a.plus, True, RED), (a.minus, False, BLUE)):
        segs: list = []
        _tree_points(tree, up, segs)
        for (x1, y1), (x2, y2) in segs:
            ax.plot([x1, x2], [y1, y2], color=color, lw=1.5)
    ax.plot(range(a.leaves), [0] * a.leaves, "o", color="black", ms=3)
    ax.set_aspect("equal")
    ax.axis("off")
    return _finish(fig)


def _draw_arcs(ax, l: BookLayout, color_by: str) -> None:
    pos = l.positions()
    for arc in l.arcs:
        a, b = sorted((pos[arc.u], pos[arc.v]))
        upper = arc.page == UPPER
        if color_by == "sign" and arc.sign in SIGN_COLOR:
            color = SIGN_COLOR[arc.sign]
        else:
            color = RED if upper else BLUE
        theta = (0, 180) if upper else (180, 360)
        ax.add_patch(
            ArcPatch(((a + b) / 2, 0), b - a, b - a, theta1=theta[0], theta2=theta[1], color=color, lw=1.4)
        )


def layout_svg(l: BookLayout, color_by: str = "page", labels: bool = True) -> str:
    """Book layout (or Thompson graph) on a horizontal spine."""
    n = len(l.spine)
    fig, ax = plt.subplots(figsize=(max(3, n * 0.5), max(2.5, n * 0.3)))
    ax.plot([-0.5, n - 0.5], [0, 0], color=GRAY, lw=0.6, ls=":")
    _draw_arcs(ax, l, color_by)
    ax.plot(range(n), [0] * n, "o", color="black", ms=3, zorder=3)
    if labels:
        for i in range(n):
            ax.annotate(str(i), (i, 0), textcoords="offset points", xytext=(3, -9), fontsize=6)
    ax.set_xlim(-1, n)
    ax.set_ylim(-n / 2 - 0.5, n / 2 + 0.5)
    ax.set_aspect("equal")
    ax.axis("off")
    return _finish(fig)


def link_svg(a: Element) -> str:
    """Shaded schematic of the link of an element.

    Gray discs are the shaded regions (vertices of the signed graph); each
    arc carries one crossing, drawn as a small cross at its apex in the
    colour of its sign.
    """
    l = element_layout(a)
    n = len(l.spine)
    fig, ax = plt.subplots(figsize=(max(3, n * 0.5), max(2.5, n * 0.3)))
    for i in range(n):
        ax.add_patch(Circle((i, 0), 0.28, color="#d0d0d0", zorder=1))
    _draw_arcs(ax, l, "sign")
    pos = l.positions()
    for arc in l.arcs:
        a_, b_ = sorted((pos[arc.u], pos[arc.v]))
        y = (b_ - a_) / 2 * (1 if arc.page == UPPER else -1)
        x = (a_ + b_) / 2
        ax.plot([x - 0.12, x + 0.12], [y - 0.12, y + 0.12], color="black", lw=1.2, zorder=4)
        ax.plot([x - 0.12, x + 0.12], [y + 0.12, y - 0.12], color="black", lw=1.2, zorder=4)
    ax.set_xlim(-1, n)
    ax.set_ylim(-n / 2 - 0.5, n / 2 + 0.5)
    ax.set_aspect("equal")
    ax.axis("off")
    return _finish(fig)
