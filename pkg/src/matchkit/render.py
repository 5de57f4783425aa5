"""Hand-rolled SVG and DOT output.

Everything here is byte-deterministic: fixed coordinates, no ids, no
timestamps, so identical inputs give identical files.
"""
from __future__ import annotations

from typing import Union

from .core import DyckWord, Matching, as_word
from .dyckbij import dominates, tunnels
from .gentree import TreeKind, TreeNode, build_tree

__all__ = ["svg_matching", "svg_pair", "dot_tree"]

UNIT = 30
MARGIN = 24


def _fmt(x: float) -> str:
    return f"{x:g}"


def svg_matching(m: Matching) -> str:
    """Arc diagram: vertices on a line, one semicircle per edge."""
    n = max(m.n, 1)
    xs = {v: MARGIN + (v - 1) * UNIT for v in range(1, m.n + 1)}
    max_r = max(((b - a) * UNIT) / 2 for a, b in m.edges) if m.edges else UNIT / 2
    baseline = MARGIN + max_r
    width = 2 * MARGIN + (n - 1) * UNIT
    height = baseline + MARGIN + 14
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<line x1="{_fmt(MARGIN - 8)}" y1="{_fmt(baseline)}" x2="{_fmt(width - MARGIN + 8)}"'
        f' y2="{_fmt(baseline)}" stroke="#bbb"/>',
    ]
    for a, b in m.edges:
        r = ((b - a) * UNIT) / 2
        out.append(
            f'<path class="arc" d="M {_fmt(xs[a])} {_fmt(baseline)} '
            f'A {_fmt(r)} {_fmt(r)} 0 0 1 {_fmt(xs[b])} {_fmt(baseline)}" '
            'fill="none" stroke="#000" stroke-width="1.5"/>'
        )
    for v in range(1, m.n + 1):
        out.append(
            f'<circle class="vertex" cx="{_fmt(xs[v])}" cy="{_fmt(baseline)}" r="3" fill="#000"/>'
        )
        out.append(
            f'<text x="{_fmt(xs[v])}" y="{_fmt(baseline + 16)}" font-size="10"'
            f' text-anchor="middle">{v}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def svg_pair(upper: Union[DyckWord, str], lower: Union[DyckWord, str]) -> str:
    """The two paths of a dominated pair, with the lower path's tunnels dotted.

    A row of dots on top shows the vertex roles of the upper word:
    filled for l-vertices, empty for r-vertices.
    """
    up, lo = as_word(upper), as_word(lower)
    if not dominates(up, lo):
        raise ValueError("lower path rises above the upper path")
    n = len(up)
    hu, hl = up.heights(), lo.heights()
    peak = max(hu) if n else 1
    dot_y = MARGIN
    base_y = MARGIN + 20 + peak * UNIT

    def px(x: float) -> float:
        return MARGIN + x * UNIT

    def py(h: float) -> float:
        return base_y - h * UNIT

    width = 2 * MARGIN + n * UNIT
    height = base_y + MARGIN
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<line x1="{_fmt(px(0))}" y1="{_fmt(base_y)}" x2="{_fmt(px(n))}"'
        f' y2="{_fmt(base_y)}" stroke="#bbb"/>',
    ]
    for cls, hs, color, dash in (
        ("upper", hu, "#000", ""),
        ("lower", hl, "#1f77b4", ""),
    ):
        pts = " ".join(f"{_fmt(px(i))},{_fmt(py(h))}" for i, h in enumerate(hs))
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        out.append(
            f'<polyline class="{cls}" points="{pts}" fill="none" stroke="{color}"'
            f' stroke-width="1.5"{extra}/>'
        )
    for i, j in tunnels(lo).pairs():
        a = lo.l_positions[i - 1]
        b = lo.r_positions[j - 1]
        y = py(hl[a - 1] + 0.5)
        out.append(
            f'<line class="tunnel" x1="{_fmt(px(a - 0.5))}" y1="{_fmt(y)}"'
            f' x2="{_fmt(px(b - 0.5))}" y2="{_fmt(y)}" stroke="#888"'
            ' stroke-width="1" stroke-dasharray="3 3"/>'
        )
    for v in range(1, n + 1):
        filled = up.bits[v - 1] == "0"
        fill = "#000" if filled else "#fff"
        out.append(
            f'<circle class="{"lvertex" if filled else "rvertex"}"'
            f' cx="{_fmt(px(v - 0.5))}" cy="{_fmt(dot_y)}" r="3.5"'
            f' fill="{fill}" stroke="#000"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def dot_tree(root_or_word, kind: TreeKind | None = None) -> str:
    """DOT digraph of a generating tree; inner labels are block sizes."""
    if isinstance(root_or_word, TreeNode):
        root = root_or_word
    else:
        if kind is None:
            raise ValueError("kind is required when passing a word")
        root = build_tree(as_word(root_or_word), kind)
    lines = ["digraph gentree {", '  node [fontname="Helvetica" fontsize=10];']
    counter = [0]

    def visit(node: TreeNode) -> int:
        ident = counter[0]
        counter[0] += 1
        if node.is_leaf:
            label = str(node.graph.to_matching()) or "empty"
            lines.append(f'  n{ident} [label="{label}" shape=box];')
        else:
            sizes = node.blocks.sizes()
            label = ",".join(str(s) for s in sizes) if sizes else "-"
            lines.append(f'  n{ident} [label="{label}"];')
        for child in node.children:
            cid = visit(child)
            lines.append(f"  n{ident} -> n{cid};")
        return ident

    visit(root)
    lines.append("}")
    return "\n".join(lines) + "\n"
