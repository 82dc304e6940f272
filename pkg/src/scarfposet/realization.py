"""Realize a finite simplicial complex as the Scarf complex of a bipartite digraph.

Each facet ``S`` becomes a complete bipartite gadget: ``S`` on the source
side and at least two fresh sinks, each receiving an edge from every vertex
of ``S``.  Gluing the gadgets along shared source labels gives a digraph
whose Scarf complex over the sources is the input complex.  Two sinks per
facet is the minimum: with a single sink the sources of that facet would
have no cover outside the sink's ideal and fall into its interior.
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any

from .errors import EmptyInput, LabelCollision, TooFewSinks
from .families import digraph_poset
from .poset import Poset
from .scarf import (
    MAX_ISO_VERTICES,
    Face,
    SimplicialComplex,
    complexes_isomorphic,
    maximal_sets,
    scarf_facets,
)


def maximal_faces(faces: Iterable[Iterable[str]]) -> list[Face]:
    faces = list(faces)
    if not faces:
        raise EmptyInput("maximal_faces needs at least one face")
    return maximal_sets(faces)


def facet_key(facet: Iterable[str]) -> str:
    return ",".join(facet)


@dataclass(frozen=True)
class RealizationOutput:
    sources: tuple[str, ...]
    sinks: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    facet_blocks: dict[str, tuple[str, ...]]

    @property
    def subset(self) -> tuple[str, ...]:
        """The distinguished subset: all sources."""
        return self.sources

    def to_poset(self) -> Poset:
        return digraph_poset(self.sources + self.sinks, self.edges, max_size=None)

    def to_json(self) -> dict[str, Any]:
        return {
            "sources": list(self.sources),
            "sinks": list(self.sinks),
            "edges": [list(e) for e in self.edges],
            "facet_blocks": {k: list(v) for k, v in self.facet_blocks.items()},
        }

    def to_poset_json(self) -> dict[str, Any]:
        return {
            "labels": list(self.sources + self.sinks),
            "covers": [list(e) for e in self.edges],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"


def realize_complex(
    complex_: SimplicialComplex, sinks_per_facet: int = 2
) -> RealizationOutput:
    """Compile ``complex_`` into a directed bipartite graph.

    Sinks are named ``x1, x2, ...`` sequentially across facets in sorted
    facet order.
    """
    if sinks_per_facet < 2:
        raise TooFewSinks(f"sinks_per_facet must be >= 2, got {sinks_per_facet}")
    facets = maximal_faces(complex_.facets)
    sources = tuple(sorted({v for f in facets for v in f}))
    sinks: list[str] = []
    edges: list[tuple[str, str]] = []
    blocks: dict[str, tuple[str, ...]] = {}
    for facet in facets:
        block = []
        for _ in range(sinks_per_facet):
            x = f"x{len(sinks) + 1}"
            sinks.append(x)
            block.append(x)
            edges.extend((v, x) for v in facet)
        blocks[facet_key(facet)] = tuple(block)
    clash = set(sources) & set(sinks)
    if clash:
        raise LabelCollision(f"vertex labels collide with sink names: {sorted(clash)}")
    return RealizationOutput(sources, tuple(sinks), tuple(edges), blocks)


@dataclass(frozen=True)
class RoundtripReport:
    passed: bool
    input_facets: tuple[Face, ...]
    scarf_facets: tuple[Face, ...]
    bijection: dict[str, str] | None
    realization: RealizationOutput

    def to_json(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "input_facets": [list(f) for f in self.input_facets],
            "scarf_facets": [list(f) for f in self.scarf_facets],
            "bijection": self.bijection,
            "sources": len(self.realization.sources),
            "sinks": len(self.realization.sinks),
            "edges": len(self.realization.edges),
        }


def roundtrip_verify(
    complex_: SimplicialComplex,
    sinks_per_facet: int = 2,
    *,
    max_vertices: int | None = MAX_ISO_VERTICES,
) -> RoundtripReport:
    """Realize ``complex_``, recompute its Scarf complex and compare up to isomorphism."""
    out = realize_complex(complex_, sinks_per_facet)
    result = scarf_facets(out.to_poset(), out.sources)
    bijection = complexes_isomorphic(complex_, result, max_vertices=max_vertices)
    return RoundtripReport(
        passed=bijection is not None,
        input_facets=complex_.facets,
        scarf_facets=result.facets,
        bijection=bijection,
        realization=out,
    )
