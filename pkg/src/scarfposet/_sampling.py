"""Random posets and complexes for differential and round-trip checks."""

from __future__ import annotations

import random

from .families import digraph_poset
from .poset import Poset
from .scarf import SimplicialComplex


def random_poset(
    rng: random.Random, max_size: int = 12, prefix: str = "p"
) -> Poset:
    n = rng.randint(1, max_size)
    density = rng.uniform(0.0, 0.6)
    ext_rate = rng.choice([0.0, 0.0, 0.2, 0.5])
    labels = [f"{prefix}{i}" for i in range(n)]
    order = labels[:]
    rng.shuffle(order)
    edges = [
        (order[i], order[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < density
    ]
    poset = digraph_poset(labels, edges)
    external = [x for x in labels if rng.random() < ext_rate]
    return Poset.from_covers(labels, poset.cover_pairs(), external)


def random_subset(rng: random.Random, labels: tuple[str, ...]) -> list[str]:
    k = rng.randint(1, len(labels))
    return sorted(rng.sample(labels, k))


def random_complex(
    rng: random.Random, max_vertices: int = 6, max_facets: int = 8
) -> SimplicialComplex:
    pool = [chr(ord("a") + i) for i in range(rng.randint(1, max_vertices))]
    faces = []
    for _ in range(rng.randint(1, max_facets)):
        faces.append(rng.sample(pool, rng.randint(1, len(pool))))
    return SimplicialComplex.from_faces(faces)
