"""Matplotlib renderings of grid lines, walks and the growth report.

Figures are built on explicit Figure objects (no pyplot state) and are
normally saved as SVG; each diagonal move and each step pair carries an
SVG group id (``d-move-1``, ``hv-pair-1``, ...) so the output stays
machine-checkable.
"""

from __future__ import annotations

import io

from matplotlib.figure import Figure

from .asymptotics import growth_report, rho
from .codec import Walk, validate_word, word_shape, _advance_descend_pairs
from .poset import GridShape

_GRID_COLOR = "0.8"
_PATH_COLOR = "black"
_D_COLOR = "crimson"


def _grid_axes(fig: Figure, m1: int, m2: int):
    ax = fig.add_subplot()
    for r in range(m1 + 1):
        ax.plot([0, m2], [r, r], color=_GRID_COLOR, lw=0.8, zorder=1)
    for c in range(m2 + 1):
        ax.plot([c, c], [0, m1], color=_GRID_COLOR, lw=0.8, zorder=1)
    ax.set_aspect("equal")
    ax.invert_yaxis()  # row 1 on top, matching the matrix layout
    ax.set_xticks([])
    ax.set_yticks([])
    for side in ax.spines.values():
        side.set_visible(False)
    return ax


def word_figure(word: str, shape: GridShape | None = None,
                line: str = "antichain") -> Figure:
    """Draw the grid line of a canonical word, d-moves highlighted.

    ``line`` selects the reading: an antichain line runs NE to SW, a
    strict-chain line NW to SE.  Crossed cells are dotted at their
    centers.
    """
    validate_word(word, shape)
    if shape is None:
        shape = word_shape(word)
    if line not in ("antichain", "strict_chain"):
        raise ValueError(f"line must be 'antichain' or 'strict_chain', got {line!r}")
    fig = Figure(figsize=(0.6 * shape.m2 + 1, 0.6 * shape.m1 + 1))
    ax = _grid_axes(fig, shape.m1, shape.m2)

    r, c = (0, shape.m2) if line == "antichain" else (0, 0)
    dc = -1 if line == "antichain" else 1
    d_index = 0
    for ch in word:
        if ch == "v":
            nr, nc = r + 1, c
        elif ch == "h":
            nr, nc = r, c + dc
        else:
            nr, nc = r + 1, c + dc
        if ch == "d":
            d_index += 1
            seg, = ax.plot([c, nc], [r, nr], color=_D_COLOR, lw=2.5, zorder=3)
            seg.set_gid(f"d-move-{d_index}")
            cell_col = c if line == "antichain" else c + 1
            ax.plot([cell_col - 0.5], [r + 0.5], "o", color=_D_COLOR,
                    markersize=5, zorder=4)
        else:
            ax.plot([c, nc], [r, nr], color=_PATH_COLOR, lw=2.0, zorder=2)
        r, c = nr, nc
    return fig


def walk_figure(walk: Walk) -> Figure:
    """Draw a lattice walk; HV pairs dashed, their endpoints dotted."""
    shape = walk.shape
    fig = Figure(figsize=(0.6 * shape.m1 + 1, 0.6 * shape.m2 + 1))
    ax = fig.add_subplot()
    for x in range(shape.m1 + 1):
        ax.plot([x, x], [0, shape.m2], color=_GRID_COLOR, lw=0.8, zorder=1)
    for y in range(shape.m2 + 1):
        ax.plot([0, shape.m1], [y, y], color=_GRID_COLOR, lw=0.8, zorder=1)
    ax.set_aspect("equal")
    ax.set_xticks(range(shape.m1 + 1))
    ax.set_yticks(range(shape.m2 + 1))

    start = (0, 0) if walk.orientation == "up" else (0, shape.m2)
    verts = [start] + walk.vertices()
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    ax.plot(xs, ys, color=_PATH_COLOR, lw=2.0, zorder=2)
    for n, i in enumerate(_advance_descend_pairs(walk.steps), start=1):
        seg, = ax.plot([xs[i], xs[i + 2]], [ys[i], ys[i + 2]],
                       color=_D_COLOR, lw=1.5, ls="--", zorder=3)
        seg.set_gid(f"hv-pair-{n}")
        ax.plot([xs[i + 2]], [ys[i + 2]], "o", color="royalblue",
                markersize=6, zorder=4)
    return fig


def growth_figure(mmax: int) -> Figure:
    """Successive-ratio and density curves with the limit root marked."""
    rows = growth_report(mmax)
    fig = Figure(figsize=(6, 6))
    ax_ratio, ax_density = fig.subplots(2, 1, sharex=True)
    ms = [row.m for row in rows]
    ax_ratio.plot(ms, [row.ratio for row in rows], "o-", color="royalblue")
    ax_ratio.axhline(rho(), color=_D_COLOR, ls="--",
                     label=f"limit ratio {rho():.6f}")
    ax_ratio.set_ylabel("successive ratio")
    ax_ratio.legend()
    ax_density.plot(ms, [row.density for row in rows], "o-", color="seagreen")
    ax_density.set_ylabel("maximal / all antichains")
    ax_density.set_xlabel("m")
    fig.tight_layout()
    return fig


def figure_to_svg(fig: Figure) -> str:
    buf = io.BytesIO()
    fig.savefig(buf, format="svg")
    return buf.getvalue().decode("utf-8")


def save_figure(fig: Figure, path: str) -> None:
    """Write the figure to a file; format follows the extension."""
    fig.savefig(path)
