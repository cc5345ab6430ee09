"""Graphviz DOT export of colored trees."""

from __future__ import annotations

from collections.abc import Iterable

from .colorings import Coloring
from .trees import format_vertex

PALETTE = (
    "#8dd3c7", "#fb8072", "#80b1d3", "#fdb462", "#b3de69",
    "#fccde5", "#bebada", "#ffffb3", "#d9d9d9", "#bc80bd",
)


def _node_id(v: str) -> str:
    return '"' + format_vertex(v) + '"'


def export_dot(coloring: Coloring, highlight: Iterable[str] = (), name: str = "tree") -> str:
    """DOT digraph of the coloring's tree; highlighted vertices get a thick red outline."""
    tree = coloring.tree
    marked = set(highlight)
    lines = [f"digraph {name} {{", "  node [style=filled, shape=circle, fontsize=10];"]
    for v in tree.vertices():
        c = coloring.color_of(v)
        attrs = [f'label="{format_vertex(v)}\\n{c}"', f'fillcolor="{PALETTE[c % len(PALETTE)]}"']
        if v in marked:
            attrs += ['color="red"', "penwidth=3"]
        lines.append(f"  {_node_id(v)} [{', '.join(attrs)}];")
    for v in tree.vertices():
        for ch in tree.children(v):
            lines.append(f"  {_node_id(v)} -> {_node_id(ch)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
