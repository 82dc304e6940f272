"""Graphviz DOT output for Hasse diagrams and complex 1-skeleta."""

from __future__ import annotations

from .poset import Poset
from .scarf import SimplicialComplex


def _q(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def poset_dot(poset: Poset, name: str = "poset") -> str:
    """Hasse diagram, edges drawn lower -> upper; external nodes are dashed."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    external = poset.external_labels()
    for label in poset.labels:
        if label in external:
            lines.append(f'  {_q(label)} [style=dashed, xlabel="ext"];')
        else:
            lines.append(f"  {_q(label)};")
    for lo, hi in poset.cover_pairs():
        lines.append(f"  {_q(lo)} -> {_q(hi)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def complex_dot(complex_: SimplicialComplex, name: str = "complex") -> str:
    """1-skeleton as an undirected graph; faces of dimension >= 2 go in a comment."""
    lines = [f"graph {name} {{"]
    higher = [f for f in complex_.facets if len(f) > 2]
    if higher:
        lines.append("  /* higher facets:")
        lines.extend(f"     {{{', '.join(f)}}}" for f in higher)
        lines.append("  */")
    for v in complex_.vertices:
        lines.append(f"  {_q(v)};")
    edges = sorted({(f[i], f[j]) for f in complex_.facets
                    for i in range(len(f)) for j in range(i + 1, len(f))})
    for u, v in edges:
        lines.append(f"  {_q(u)} -- {_q(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
