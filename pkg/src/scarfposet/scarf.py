"""Scarf complexes of posets relative to a distinguished subset.

A set ``B`` of elements of ``A`` is *neighborly* when some witness ``u``
has ``B`` inside the boundary of its order ideal while the interior of that
ideal avoids ``A``.  The Scarf complex collects every nonempty neighborly
set; since subsets of a neighborly set are neighborly with the same
witness, the complex is determined by its facets, which are the maximal
sets ``boundary(u) & A`` over admissible witnesses ``u``.
"""

from __future__ import annotations

import json
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Any

from .errors import (
    EmptySubset,
    ScarfError,
    SubsetTooLarge,
    SubsetViolation,
    TooLarge,
)
from .poset import Poset, iter_bits

Face = tuple[str, ...]

MAX_ORACLE_SUBSET = 20
MAX_ISO_VERTICES = 16


def face_key(face: Iterable[str]) -> Face:
    return tuple(sorted(face))


def _order(faces: Iterable[Iterable[str]]) -> list[Face]:
    return sorted({face_key(f) for f in faces})


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex kept as its list of facets.

    Build instances with :meth:`from_faces`, which drops non-maximal faces
    and sorts everything.
    """

    vertices: tuple[str, ...]
    facets: tuple[Face, ...]

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[str]]) -> SimplicialComplex:
        faces = [face_key(f) for f in faces]
        if any(not f for f in faces):
            raise ScarfError("faces must be nonempty")
        facets = maximal_sets(faces)
        vertices = sorted({v for f in facets for v in f})
        return cls(tuple(vertices), tuple(facets))

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def faces(self) -> list[Face]:
        return closed_faces(self)

    def to_json(self) -> dict[str, Any]:
        return {"vertices": list(self.vertices), "facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json(cls, data: Any) -> SimplicialComplex:
        if not isinstance(data, dict) or "facets" not in data:
            raise ScarfError("complex JSON must be an object with 'facets'")
        unknown = set(data) - {"vertices", "facets", "witnesses"}
        if unknown:
            raise ScarfError(f"unknown complex keys: {sorted(unknown)}")
        facets = data["facets"]
        if not isinstance(facets, list) or not all(
            isinstance(f, list) and f and all(isinstance(v, str) for v in f)
            for f in facets
        ):
            raise ScarfError("'facets' must be a list of nonempty string lists")
        for f in facets:
            if len(set(f)) != len(f):
                raise ScarfError(f"facet {f!r} repeats a vertex")
        complex_ = cls.from_faces(facets)
        if "vertices" in data and set(data["vertices"]) != set(complex_.vertices):
            raise ScarfError("'vertices' must equal the union of the facets")
        return complex_

    def dump(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=2) + "\n")

    @classmethod
    def load(cls, path: str | Path) -> SimplicialComplex:
        return cls.from_json(json.loads(Path(path).read_text()))


@dataclass(frozen=True)
class WitnessCertificate:
    witness: str
    boundary: frozenset[str]
    interior: frozenset[str]
    face: frozenset[str]

    def to_json(self) -> dict[str, Any]:
        return {
            "witness": self.witness,
            "boundary": sorted(self.boundary),
            "interior": sorted(self.interior),
            "face": sorted(self.face),
        }


@dataclass(frozen=True)
class ScarfResult:
    """Facets of a Scarf complex plus one witness per facet."""

    complex: SimplicialComplex
    witnesses: dict[Face, WitnessCertificate] = field(default_factory=dict)

    def to_json(self, with_witnesses: bool = False) -> dict[str, Any]:
        data = self.complex.to_json()
        if with_witnesses:
            data["witnesses"] = [
                {"facet": list(f), **self.witnesses[f].to_json()}
                for f in self.complex.facets
            ]
        return data


def maximal_sets(sets: Iterable[Iterable[str]]) -> list[Face]:
    """Inclusion-maximal members of ``sets``, deduplicated and sorted."""
    unique = {frozenset(s) for s in sets}
    kept: list[frozenset[str]] = []
    for s in sorted(unique, key=len, reverse=True):
        if not any(s <= k for k in kept):
            kept.append(s)
    return _order(kept)


def _subset_mask(poset: Poset, subset: Iterable[str]) -> int:
    mask = poset.mask(subset)
    if not mask:
        raise EmptySubset("the distinguished subset A must be nonempty")
    return mask


def _certificate(poset: Poset, u: int, boundary: int, a_mask: int) -> WitnessCertificate:
    ideal = poset.ideal_mask(u)
    return WitnessCertificate(
        witness=poset.labels[u],
        boundary=poset.names(boundary),
        interior=poset.names(ideal & ~boundary),
        face=poset.names(boundary & a_mask),
    )


def _boundaries(poset: Poset, apex_in_boundary: bool) -> list[int]:
    return [poset.boundary_mask(u, apex_in_boundary) for u in range(len(poset))]


def is_neighborly(
    poset: Poset,
    subset: Iterable[str],
    candidate: Iterable[str],
    apex_in_boundary: bool = True,
) -> WitnessCertificate | None:
    """Return a witness certificate for ``candidate`` being neighborly, or None.

    The first admissible witness in element order is reported.
    """
    a_mask = poset.mask(subset)
    b_mask = poset.mask(candidate)
    if b_mask & ~a_mask:
        raise SubsetViolation("candidate set is not contained in the subset A")
    for u in range(len(poset)):
        boundary = poset.boundary_mask(u, apex_in_boundary)
        if b_mask & ~boundary:
            continue
        if poset.ideal_mask(u) & ~boundary & a_mask:
            continue
        return _certificate(poset, u, boundary, a_mask)
    return None


def scarf(
    poset: Poset, subset: Iterable[str], apex_in_boundary: bool = True
) -> ScarfResult:
    """Scarf complex of ``poset`` relative to ``subset`` with facet witnesses."""
    a_mask = _subset_mask(poset, subset)
    first_witness: dict[int, tuple[int, int]] = {}
    for u, boundary in enumerate(_boundaries(poset, apex_in_boundary)):
        if poset.ideal_mask(u) & ~boundary & a_mask:
            continue
        face = boundary & a_mask
        if face and face not in first_witness:
            first_witness[face] = (u, boundary)

    kept: list[int] = []
    for face in sorted(first_witness, key=int.bit_count, reverse=True):
        if not any(face & k == face for k in kept):
            kept.append(face)

    witnesses = {}
    for face in kept:
        u, boundary = first_witness[face]
        witnesses[face_key(poset.names(face))] = _certificate(poset, u, boundary, a_mask)
    complex_ = SimplicialComplex.from_faces(witnesses)
    return ScarfResult(complex_, witnesses)


def scarf_facets(
    poset: Poset, subset: Iterable[str], apex_in_boundary: bool = True
) -> SimplicialComplex:
    return scarf(poset, subset, apex_in_boundary).complex


def oracle_scarf(
    poset: Poset,
    subset: Iterable[str],
    apex_in_boundary: bool = True,
    *,
    max_subset: int | None = MAX_ORACLE_SUBSET,
) -> list[Face]:
    """Every nonempty neighborly subset, found by testing each subset of ``A``.

    Deliberately shares nothing with :func:`scarf` beyond the poset's raw
    labels and cover pairs: ideals are recomputed with plain sets.
    """
    a = set(subset)
    for x in a:
        poset.index(x)
    if not a:
        raise EmptySubset("the distinguished subset A must be nonempty")
    if max_subset is not None and len(a) > max_subset:
        raise SubsetTooLarge(f"|A| = {len(a)} exceeds the oracle limit {max_subset}")

    covers: dict[str, set[str]] = {x: set() for x in poset.labels}
    covered: dict[str, set[str]] = {x: set() for x in poset.labels}
    for lo, hi in poset.cover_pairs():
        covers[lo].add(hi)
        covered[hi].add(lo)
    external = set(poset.external_labels())

    admissible = []
    for u in poset.labels:
        ideal, stack = {u}, [u]
        while stack:
            for w in covered[stack.pop()]:
                if w not in ideal:
                    ideal.add(w)
                    stack.append(w)
        boundary = {v for v in ideal if v in external or covers[v] - ideal}
        if apex_in_boundary:
            boundary.add(u)
        if not (ideal - boundary) & a:
            admissible.append(boundary)

    ordered = sorted(a)
    faces = []
    for r in range(1, len(ordered) + 1):
        for b in combinations(ordered, r):
            if any(set(b) <= boundary for boundary in admissible):
                faces.append(b)
    return _order(faces)


def closed_faces(complex_: SimplicialComplex) -> list[Face]:
    """All nonempty faces of the complex, sorted."""
    faces = set()
    for facet in complex_.facets:
        for r in range(1, len(facet) + 1):
            faces.update(combinations(facet, r))
    return _order(faces)


def f_vector(complex_: SimplicialComplex) -> list[int]:
    counts = Counter(len(f) for f in closed_faces(complex_))
    return [counts[k] for k in range(1, max(counts, default=0) + 1)]


def is_downward_closed(faces: Sequence[Iterable[str]]) -> bool:
    present = {frozenset(f) for f in faces}
    for f in present:
        for r in range(1, len(f)):
            if any(frozenset(sub) not in present for sub in combinations(f, r)):
                return False
    return True


def _vertex_signature(complex_: SimplicialComplex) -> dict[str, tuple[int, ...]]:
    sizes: dict[str, list[int]] = {v: [] for v in complex_.vertices}
    for facet in complex_.facets:
        for v in facet:
            sizes[v].append(len(facet))
    return {v: tuple(sorted(s)) for v, s in sizes.items()}


def complexes_isomorphic(
    first: SimplicialComplex,
    second: SimplicialComplex,
    *,
    max_vertices: int | None = MAX_ISO_VERTICES,
) -> dict[str, str] | None:
    """Find a vertex bijection carrying the facets of ``first`` onto ``second``.

    Backtracking search; candidates for each vertex are restricted to
    vertices with the same multiset of incident facet sizes.
    """
    for c in (first, second):
        if max_vertices is not None and len(c.vertices) > max_vertices:
            raise TooLarge(
                f"{len(c.vertices)} vertices exceeds the isomorphism limit {max_vertices}"
            )
    if len(first.vertices) != len(second.vertices):
        return None
    if len(first.facets) != len(second.facets) or f_vector(first) != f_vector(second):
        return None
    sig1, sig2 = _vertex_signature(first), _vertex_signature(second)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None

    target = {frozenset(f) for f in second.facets}
    order = sorted(first.vertices, key=lambda v: (-len(sig1[v]), v))
    facets_at: dict[str, list[Face]] = {v: [] for v in first.vertices}
    for facet in first.facets:
        # check a facet once its last vertex (in search order) is placed
        last = max(facet, key=order.index)
        facets_at[last].append(facet)

    mapping: dict[str, str] = {}
    used: set[str] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in second.vertices:
            if w in used or sig2[w] != sig1[v]:
                continue
            mapping[v] = w
            used.add(w)
            if all(frozenset(mapping[x] for x in f) in target for f in facets_at[v]):
                if extend(k + 1):
                    return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(sorted(mapping.items())) if extend(0) else None


def cycle_complex(labels: Sequence[str]) -> SimplicialComplex:
    """Cycle graph on ``labels`` as a 1-dimensional complex (an edge for two labels)."""
    n = len(labels)
    if n == 1:
        return SimplicialComplex.from_faces([labels])
    return SimplicialComplex.from_faces(
        [(labels[i], labels[(i + 1) % n]) for i in range(n)]
    )


def path_complex(labels: Sequence[str]) -> SimplicialComplex:
    if len(labels) == 1:
        return SimplicialComplex.from_faces([labels])
    return SimplicialComplex.from_faces(zip(labels, labels[1:]))


def simplex(labels: Iterable[str]) -> SimplicialComplex:
    return SimplicialComplex.from_faces([tuple(labels)])
