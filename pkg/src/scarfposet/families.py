"""Constructors for the poset families studied with Scarf complexes.

Each constructor returns a :class:`~scarfposet.poset.Poset`; the graph
families also return their distinguished vertex classes (sources, sinks).
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from itertools import combinations
from math import prod

from sympy import factorint

from .errors import (
    CyclicDigraph,
    CyclicRelation,
    DuplicateLabel,
    EmptyInput,
    LabelCollision,
    Overflow,
    ScarfError,
    TooSmall,
    UniverseTooLarge,
)
from .poset import MAX_UNIVERSE, Poset

INT64_MAX = 2**63 - 1
MAX_POWERSET_POINTS = 20


def antichain(labels: Iterable[str], *, max_size: int | None = MAX_UNIVERSE) -> Poset:
    labels = list(labels)
    if not labels:
        raise EmptyInput("antichain needs at least one label")
    return Poset.from_covers(labels, [], max_size=max_size)


def divisibility_closure(
    generators: Iterable[int], *, max_size: int | None = MAX_UNIVERSE
) -> Poset:
    """Divisors of the product of ``generators``, ordered by divisibility.

    Every element carries an external marker: in the naturals each number
    ``d`` is covered by ``d*p`` for infinitely many primes ``p``, so some
    cover always lies outside any finite truncation.
    """
    generators = list(generators)
    if not generators:
        raise EmptyInput("divisibility_closure needs at least one generator")
    for g in generators:
        if not isinstance(g, int) or isinstance(g, bool) or g < 1:
            raise ScarfError(f"generators must be positive integers, got {g!r}")
    top = prod(generators)
    if top > INT64_MAX:
        raise Overflow(f"product of generators {top} exceeds 2**63-1")
    exponents = factorint(top)
    primes = sorted(exponents)
    count = prod(e + 1 for e in exponents.values())
    if max_size is not None and count > max_size:
        raise UniverseTooLarge(f"{count} divisors exceeds the limit of {max_size}")

    divisors = [1]
    for p in primes:
        divisors = [d * p**k for d in divisors for k in range(exponents[p] + 1)]
    divisors.sort()
    present = set(divisors)
    covers = [
        (str(d), str(d * p)) for d in divisors for p in primes if d * p in present
    ]
    labels = [str(d) for d in divisors]
    return Poset.from_covers(labels, covers, labels, max_size=max_size)


def set_label(members: Iterable[object]) -> str:
    """Canonical label of a finite set, e.g. ``{1,3}``; ``{}`` for the empty set."""
    return "{" + ",".join(str(m) for m in _sorted_points(members)) + "}"


def powerset_closure(
    family: Iterable[Iterable[object]],
    ambient_infinite: bool = True,
    *,
    max_size: int | None = MAX_UNIVERSE,
) -> Poset:
    """All subsets of the union of ``family``, ordered by inclusion.

    With ``ambient_infinite`` every subset is marked external, since a fresh
    ambient point always yields a cover outside the truncation.
    """
    family = [frozenset(s) for s in family]
    if not family:
        raise EmptyInput("powerset_closure needs a nonempty family")
    points = _sorted_points(frozenset().union(*family))
    if len(points) > MAX_POWERSET_POINTS:
        raise UniverseTooLarge(
            f"union has {len(points)} points; at most {MAX_POWERSET_POINTS} allowed"
        )
    if max_size is not None and 2 ** len(points) > max_size:
        raise UniverseTooLarge(
            f"{2 ** len(points)} subsets exceeds the limit of {max_size}"
        )
    subsets = [c for r in range(len(points) + 1) for c in combinations(points, r)]
    labels = [set_label(s) for s in subsets]
    covers = []
    for s in subsets:
        for p in points:
            if p not in s:
                covers.append((set_label(s), set_label((*s, p))))
    external = labels if ambient_infinite else []
    return Poset.from_covers(labels, covers, external, max_size=max_size)


def digraph_poset(
    vertices: Sequence[str],
    edges: Iterable[tuple[str, str]],
    *,
    max_size: int | None = MAX_UNIVERSE,
) -> Poset:
    """Reachability order of an acyclic digraph (``v <= w`` iff ``w`` is reachable)."""
    try:
        return Poset.from_covers(vertices, edges, max_size=max_size)
    except CyclicRelation as exc:
        raise CyclicDigraph(str(exc)) from None


def even_cycle_digraph(
    n: int, *, max_size: int | None = MAX_UNIVERSE
) -> tuple[Poset, list[str]]:
    """Alternating source/sink cycle on ``2n`` vertices; returns (poset, sources).

    Sink ``b_i`` covers ``a_i`` and ``a_{i+1}``, indices taken mod ``n``.
    """
    if n < 2:
        raise TooSmall(f"even cycle needs n >= 2, got {n}")
    sources = [f"a{i}" for i in range(1, n + 1)]
    sinks = [f"b{i}" for i in range(1, n + 1)]
    edges = []
    for i in range(n):
        edges.append((sources[i], sinks[i]))
        edges.append((sources[(i + 1) % n], sinks[i]))
    return digraph_poset(sources + sinks, edges, max_size=max_size), sources


def complete_bipartite_digraph(
    m: int, n: int, *, max_size: int | None = MAX_UNIVERSE
) -> tuple[Poset, list[str], list[str]]:
    if m < 1 or n < 1:
        raise TooSmall(f"complete bipartite needs m, n >= 1, got m={m}, n={n}")
    sources = [f"a{i}" for i in range(1, m + 1)]
    sinks = [f"b{j}" for j in range(1, n + 1)]
    edges = [(a, b) for a in sources for b in sinks]
    return digraph_poset(sources + sinks, edges, max_size=max_size), sources, sinks


def root_label(i: int, j: int) -> str:
    return f"a{i},{j}"


def type_a_root_poset(n: int, *, max_size: int | None = MAX_UNIVERSE) -> Poset:
    """Staircase poset with rows of sizes n, n-1, ..., 1 counted from the bottom.

    ``a{i+1},{j}`` covers ``a{i},{j}`` and ``a{i},{j+1}``.
    """
    if n < 1:
        raise TooSmall(f"type A root poset needs n >= 1, got {n}")
    labels = [root_label(i, j) for i in range(1, n + 1) for j in range(1, n - i + 2)]
    covers = []
    for i in range(1, n):
        for j in range(1, n - i + 1):
            upper = root_label(i + 1, j)
            covers.append((root_label(i, j), upper))
            covers.append((root_label(i, j + 1), upper))
    return Poset.from_covers(labels, covers, max_size=max_size)


def direct_sum(p: Poset, q: Poset) -> Poset:
    """Disjoint union with no relations between the summands."""
    _check_disjoint(p, q)
    return Poset.from_covers(
        p.labels + q.labels,
        p.cover_pairs() + q.cover_pairs(),
        p.external_labels() | q.external_labels(),
        max_size=None,
    )


def ordinal_sum(p: Poset, q: Poset) -> Poset:
    """Every element of ``p`` placed below every element of ``q``."""
    _check_disjoint(p, q)
    bridge = [(lo, hi) for lo in p.maximal() for hi in q.minimal()]
    return Poset.from_covers(
        p.labels + q.labels,
        p.cover_pairs() + q.cover_pairs() + bridge,
        p.external_labels() | q.external_labels(),
        max_size=None,
    )


def _check_disjoint(p: Poset, q: Poset) -> None:
    shared = set(p.labels) & set(q.labels)
    if shared:
        raise LabelCollision(f"summands share labels {sorted(shared)}")


def _sorted_points(points: Iterable[object]) -> list[object]:
    points = list(points)
    if len({str(p) for p in points}) != len(points):
        raise DuplicateLabel(f"points with clashing names: {points!r}")
    if all(isinstance(p, int) and not isinstance(p, bool) for p in points):
        return sorted(points)
    return sorted(points, key=str)
