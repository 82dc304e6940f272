"""Finite posets stored as dense bitsets, with principal order ideals.

Elements are indexed densely in label order; every set of elements is a
Python ``int`` used as a bit vector keyed by index.  A poset is immutable
once built.  Reachability (the order itself) is precomputed at
construction, so ``leq`` and ``order_ideal`` are constant-time lookups.

Infinite ambient posets (divisibility on the naturals, subsets of an
infinite set) are emulated with *external* markers: an element marked
external is treated as having at least one cover outside the represented
universe.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .errors import (
    CyclicRelation,
    DuplicateLabel,
    NotAntisymmetric,
    NotTransitive,
    ScarfError,
    UniverseTooLarge,
    UnknownLabel,
)

MAX_UNIVERSE = 4096


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


@dataclass(frozen=True)
class IdealDecomposition:
    """A principal ideal split into its boundary and interior."""

    apex: str
    ideal: frozenset[str]
    boundary: frozenset[str]
    interior: frozenset[str]


class Poset:
    """An immutable finite poset given by its Hasse diagram.

    Use :meth:`from_covers` or :meth:`from_relation` rather than calling the
    constructor directly.
    """

    __slots__ = ("labels", "_index", "_up", "_lower", "_down", "external")

    def __init__(
        self,
        labels: Sequence[str],
        up: Sequence[int],
        down: Sequence[int],
        external: int,
    ) -> None:
        self.labels: tuple[str, ...] = tuple(labels)
        self._index = {label: i for i, label in enumerate(self.labels)}
        self._up: tuple[int, ...] = tuple(up)
        self._down: tuple[int, ...] = tuple(down)
        lower = [0] * len(self.labels)
        for v, mask in enumerate(self._up):
            for c in iter_bits(mask):
                lower[c] |= 1 << v
        self._lower: tuple[int, ...] = tuple(lower)
        self.external = external

    # construction -------------------------------------------------------

    @classmethod
    def from_covers(
        cls,
        labels: Sequence[str],
        cover_pairs: Iterable[tuple[str, str]],
        external: Iterable[str] = (),
        *,
        max_size: int | None = MAX_UNIVERSE,
    ) -> Poset:
        """Build a poset from (lower, upper) cover pairs.

        Pairs implied by transitivity are dropped, so the stored covers are
        always the transitive reduction of the input.

        Raises:
          DuplicateLabel, UnknownLabel, CyclicRelation, UniverseTooLarge.
        """
        labels = _check_labels(labels, max_size)
        index = {label: i for i, label in enumerate(labels)}
        n = len(labels)
        up = [0] * n
        for lo, hi in cover_pairs:
            i, j = _lookup(index, lo), _lookup(index, hi)
            if i == j:
                raise CyclicRelation(f"self-cover on {lo!r}")
            up[i] |= 1 << j
        down = _reachability(labels, up)
        ext = bits_of(_lookup(index, e) for e in external)
        return cls(labels, _reduce(down), down, ext)

    @classmethod
    def from_relation(
        cls,
        labels: Sequence[str],
        leq_pairs: Iterable[tuple[str, str]],
        *,
        strict: bool = False,
        max_size: int | None = MAX_UNIVERSE,
    ) -> Poset:
        """Build a poset from order pairs ``(v, u)`` meaning ``v <= u``.

        Reflexive pairs are optional.  With ``strict=True`` the input must
        already be transitively closed.
        """
        labels = _check_labels(labels, max_size)
        index = {label: i for i, label in enumerate(labels)}
        n = len(labels)
        given = [0] * n
        for lo, hi in leq_pairs:
            i, j = _lookup(index, lo), _lookup(index, hi)
            if i != j:
                given[i] |= 1 << j
        for i in range(n):
            for j in iter_bits(given[i]):
                if given[j] >> i & 1:
                    raise NotAntisymmetric(
                        f"{labels[i]!r} and {labels[j]!r} are mutually related"
                    )
        try:
            down = _reachability(labels, given)
        except CyclicRelation as exc:
            raise NotAntisymmetric(str(exc)) from None
        if strict:
            for u in range(n):
                implied = down[u] & ~(1 << u)
                for v in iter_bits(implied):
                    if not given[v] >> u & 1:
                        raise NotTransitive(
                            f"{labels[v]!r} <= {labels[u]!r} is implied but absent"
                        )
        return cls(labels, _reduce(down), down, 0)

    # queries -------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __repr__(self) -> str:
        return f"Poset({len(self)} elements, {len(self.cover_pairs())} covers)"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return (
            set(self.labels) == set(other.labels)
            and set(self.cover_pairs()) == set(other.cover_pairs())
            and self.external_labels() == other.external_labels()
        )

    def __hash__(self) -> int:
        return hash((frozenset(self.labels), frozenset(self.cover_pairs())))

    def index(self, label: str) -> int:
        return _lookup(self._index, label)

    def mask(self, labels: Iterable[str]) -> int:
        return bits_of(self.index(label) for label in labels)

    def names(self, mask: int) -> frozenset[str]:
        return frozenset(self.labels[i] for i in iter_bits(mask))

    def leq(self, v: str, u: str) -> bool:
        """Return whether ``v <= u``."""
        return bool(self._down[self.index(u)] >> self.index(v) & 1)

    def covers_of(self, label: str) -> frozenset[str]:
        """Elements covering ``label``."""
        return self.names(self._up[self.index(label)])

    def cover_pairs(self) -> list[tuple[str, str]]:
        return [
            (self.labels[v], self.labels[c])
            for v, mask in enumerate(self._up)
            for c in iter_bits(mask)
        ]

    def leq_pairs(self) -> list[tuple[str, str]]:
        return [
            (self.labels[v], self.labels[u])
            for u, mask in enumerate(self._down)
            for v in iter_bits(mask)
        ]

    def external_labels(self) -> frozenset[str]:
        return self.names(self.external)

    def minimal(self) -> list[str]:
        return [self.labels[i] for i, m in enumerate(self._lower) if not m]

    def maximal(self) -> list[str]:
        return [self.labels[i] for i, m in enumerate(self._up) if not m]

    # ideals --------------------------------------------------------------

    def ideal_mask(self, u: int) -> int:
        return self._down[u]

    def up_mask(self, v: int) -> int:
        return self._up[v]

    def lower_mask(self, v: int) -> int:
        return self._lower[v]

    def boundary_mask(self, u: int, apex_in_boundary: bool = True) -> int:
        """Bitset of ideal members with a cover outside the ideal of ``u``."""
        ideal = self._down[u]
        outside = ~ideal
        boundary = 0
        for v in iter_bits(ideal):
            if self._up[v] & outside or self.external >> v & 1:
                boundary |= 1 << v
        if apex_in_boundary:
            boundary |= 1 << u
        return boundary

    def order_ideal(self, u: str) -> frozenset[str]:
        """All elements below or equal to ``u``."""
        return self.names(self._down[self.index(u)])

    def ideal_decomposition(
        self, u: str, apex_in_boundary: bool = True
    ) -> IdealDecomposition:
        i = self.index(u)
        ideal = self._down[i]
        boundary = self.boundary_mask(i, apex_in_boundary)
        return IdealDecomposition(
            apex=u,
            ideal=self.names(ideal),
            boundary=self.names(boundary),
            interior=self.names(ideal & ~boundary),
        )

    # serialization -------------------------------------------------------

    def to_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "labels": list(self.labels),
            "covers": [list(p) for p in self.cover_pairs()],
        }
        if self.external:
            data["external"] = [self.labels[i] for i in iter_bits(self.external)]
        return data

    @classmethod
    def from_json(cls, data: Any, *, max_size: int | None = MAX_UNIVERSE) -> Poset:
        if not isinstance(data, dict):
            raise ScarfError("poset JSON must be an object")
        unknown = set(data) - {"labels", "covers", "external"}
        if unknown:
            raise ScarfError(f"unknown poset keys: {sorted(unknown)}")
        if "labels" not in data or "covers" not in data:
            raise ScarfError("poset JSON needs 'labels' and 'covers'")
        labels = data["labels"]
        if not isinstance(labels, list) or not all(isinstance(s, str) for s in labels):
            raise ScarfError("'labels' must be a list of strings")
        pairs = []
        for pair in data["covers"]:
            if (
                not isinstance(pair, list)
                or len(pair) != 2
                or not all(isinstance(s, str) for s in pair)
            ):
                raise ScarfError(f"bad cover pair {pair!r}")
            pairs.append((pair[0], pair[1]))
        external = data.get("external", [])
        if not isinstance(external, list):
            raise ScarfError("'external' must be a list of strings")
        return cls.from_covers(labels, pairs, external, max_size=max_size)

    def dump(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=2) + "\n")

    @classmethod
    def load(cls, path: str | Path, *, max_size: int | None = MAX_UNIVERSE) -> Poset:
        return cls.from_json(json.loads(Path(path).read_text()), max_size=max_size)


def order_ideal(poset: Poset, u: str) -> frozenset[str]:
    return poset.order_ideal(u)


def ideal_decomposition(
    poset: Poset, u: str, apex_in_boundary: bool = True
) -> IdealDecomposition:
    return poset.ideal_decomposition(u, apex_in_boundary)


def _lookup(index: dict[str, int], label: str) -> int:
    try:
        return index[label]
    except (KeyError, TypeError):
        raise UnknownLabel(f"unknown label {label!r}") from None


def _check_labels(labels: Sequence[str], max_size: int | None) -> list[str]:
    labels = list(labels)
    seen = set()
    for label in labels:
        if not isinstance(label, str):
            raise ScarfError(f"labels must be strings, got {label!r}")
        if label in seen:
            raise DuplicateLabel(f"duplicate label {label!r}")
        seen.add(label)
    if max_size is not None and len(labels) > max_size:
        raise UniverseTooLarge(f"{len(labels)} elements exceeds the limit of {max_size}")
    return labels


def _reachability(labels: Sequence[str], up: Sequence[int]) -> list[int]:
    """Down-sets (reflexive) of every element; raises on a directed cycle."""
    n = len(up)
    indegree = [0] * n
    lower: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        for c in iter_bits(up[v]):
            indegree[c] += 1
            lower[c].append(v)
    stack = [v for v in range(n) if indegree[v] == 0]
    down = [1 << v for v in range(n)]
    done = 0
    while stack:
        v = stack.pop()
        done += 1
        for c in iter_bits(up[v]):
            indegree[c] -= 1
            if indegree[c] == 0:
                for w in lower[c]:
                    down[c] |= down[w]
                stack.append(c)
    if done != n:
        stuck = sorted(labels[v] for v in range(n) if indegree[v])
        raise CyclicRelation(f"directed cycle through {stuck[:5]}")
    return down


def _reduce(down: Sequence[int]) -> list[int]:
    """Transitive reduction: keep v -> c only if nothing lies strictly between."""
    n = len(down)
    strict_up = [0] * n
    for u in range(n):
        for v in iter_bits(down[u] & ~(1 << u)):
            strict_up[v] |= 1 << u
    reduced = [0] * n
    for v in range(n):
        above = strict_up[v]
        for c in iter_bits(above):
            # c is a cover iff no w with v < w < c
            if not (above & down[c] & ~(1 << c)):
                reduced[v] |= 1 << c
    return reduced
