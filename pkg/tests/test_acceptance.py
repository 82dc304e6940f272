"""Exit criteria: one test per acceptance criterion, all exact (no tolerances).

Each test records a ``criterion N: PASS|FAIL`` line that is printed in the
terminal summary.  Items where the published statement disagrees with the
definition are recorded as ``EXPECTED-DIVERGENCE``; for those the test
requires engine/oracle agreement and pins the computed complex.
"""

import random

import pytest

from scarfposet import (
    SimplicialComplex,
    antichain,
    closed_faces,
    complete_bipartite_digraph,
    complexes_isomorphic,
    direct_sum,
    divisibility_closure,
    even_cycle_digraph,
    oracle_scarf,
    ordinal_sum,
    powerset_closure,
    realize_complex,
    roundtrip_verify,
    scarf_facets,
    type_a_root_poset,
)
from scarfposet import _sampling
from scarfposet.families import root_label as a
from scarfposet.scarf import cycle_complex, is_downward_closed, path_complex, simplex
from scarfposet.suite import run_suite

from conftest import ACCEPTANCE_LINES

PRODUCED: list[list[tuple[str, ...]]] = []


@pytest.fixture
def record(request):
    number = request.node.get_closest_marker("criterion").args[0]
    state = {"note": ""}

    def note(text):
        state["note"] = text

    yield note
    failed = getattr(request.node, "rep_call", None)
    verdict = "FAIL" if failed is None or failed.failed else "PASS"
    suffix = f" ({state['note']})" if state["note"] else ""
    ACCEPTANCE_LINES.append(f"criterion {number:>2}: {verdict}{suffix}")


def engine(poset, subset, apex=True):
    result = scarf_facets(poset, subset, apex)
    faces = closed_faces(result)
    oracle = oracle_scarf(poset, subset, apex)
    assert faces == oracle, "engine and oracle disagree"
    PRODUCED.append(faces)
    PRODUCED.append(oracle)
    return result


@pytest.mark.criterion(1)
def test_cycle_example(record):
    p, src = even_cycle_digraph(3)
    assert engine(p, src).facets == (("a1", "a2"), ("a1", "a3"), ("a2", "a3"))


@pytest.mark.criterion(2)
def test_cycle_proposition(record):
    for n in range(2, 9):
        p, src = even_cycle_digraph(n)
        got = engine(p, src)
        if n == 2:
            assert got.facets == (("a1", "a2"),)
        assert complexes_isomorphic(got, cycle_complex(src)) is not None


@pytest.mark.criterion(3)
def test_bipartite(record):
    for m in range(2, 7):
        p, src, _ = complete_bipartite_digraph(m, 2)
        assert engine(p, src) == simplex(src)
        p, src, _ = complete_bipartite_digraph(m, 1)
        assert engine(p, src).facets == tuple((x,) for x in src)


@pytest.mark.criterion(4)
def test_divisibility(record):
    for gens in ([6, 10, 15], [2, 4]):
        subset = [str(g) for g in gens]
        assert engine(divisibility_closure(gens), subset) == simplex(subset)


@pytest.mark.criterion(5)
def test_primes(record):
    primes = ["2", "3", "5", "7"]
    assert engine(antichain(primes), primes).facets == tuple((x,) for x in primes)


@pytest.mark.criterion(6)
def test_powerset(record):
    p = powerset_closure([{1}, {2}, {1, 3}], ambient_infinite=True)
    subset = ["{1}", "{2}", "{1,3}"]
    assert engine(p, subset) == simplex(subset)


@pytest.mark.criterion(7)
def test_a_path(record):
    for n in (5, 6, 7):
        ordered = [a(2, 1)] + [a(1, j) for j in range(2, n)] + [a(2, n - 1)]
        got = engine(type_a_root_poset(n), ordered)
        assert got == path_complex(ordered)
        assert len(got.vertices) == n


@pytest.mark.criterion(8)
def test_a_rows(record):
    p = type_a_root_poset(5)
    row = lambda i: [a(i, j) for j in range(1, 7 - i)]
    # paper: path on n-i-1 vertices plus two points
    assert engine(p, row(1)).facets == (
        (a(1, 1),), (a(1, 2), a(1, 3)), (a(1, 3), a(1, 4)), (a(1, 5),)
    )
    assert engine(p, row(2)).facets == ((a(2, 1),), (a(2, 2), a(2, 3)), (a(2, 4),))
    assert engine(p, row(3)).facets == ((a(3, 1),), (a(3, 2),), (a(3, 3),))
    record("matches the published statement for i = 1, 2, 3")


@pytest.mark.criterion(9)
def test_boundary_formula(record):
    for n in range(5, 11):
        boundary = type_a_root_poset(n).ideal_decomposition(a(n - 2, 2)).boundary
        assert len(boundary) == 2 * n - 5


@pytest.mark.criterion(10)
def test_m_simplex(record):
    p = type_a_root_poset(5)
    subset = sorted(p.order_ideal(a(1, 3)))
    assert subset == [a(1, 3)]
    assert engine(p, subset).facets == ((a(1, 3),),)
    record("EXPECTED-DIVERGENCE: single vertex, not a 5-simplex; engine = oracle")


@pytest.mark.criterion(11)
def test_realization(record):
    x = SimplicialComplex.from_faces([("a", "b", "c"), ("c", "d"), ("d", "e"), ("c", "e")])
    out = realize_complex(x)
    assert (len(out.sources), len(out.sinks), len(out.edges)) == (5, 8, 18)
    assert roundtrip_verify(x).passed
    PRODUCED.append(closed_faces(scarf_facets(out.to_poset(), out.sources)))

    rng = random.Random(11)
    for _ in range(100):
        c = _sampling.random_complex(rng)
        report = roundtrip_verify(c)
        assert report.passed, c
        PRODUCED.append(closed_faces(SimplicialComplex.from_faces(report.scarf_facets)))
    for c in (
        SimplicialComplex.from_faces([("a", "b"), ("c",)]),
        SimplicialComplex.from_faces([("a", "b", "c"), ("d", "e", "f")]),
        SimplicialComplex.from_faces([("a",), ("b",), ("c",)]),
    ):
        assert roundtrip_verify(c).passed
    record("example 5/8/18; 103 round trips incl. disconnected inputs")


@pytest.mark.criterion(12)
def test_oracle_equivalence(record):
    rng = random.Random(12)
    for _ in range(200):
        p = _sampling.random_poset(rng, 12)
        subset = _sampling.random_subset(rng, p.labels)
        engine(p, subset)


@pytest.mark.criterion(14)
def test_sums(record):
    rng = random.Random(14)
    ordinal_counterexamples = 0
    for _ in range(50):
        p = _sampling.random_poset(rng, 6, "p")
        q = _sampling.random_poset(rng, 6, "q")
        sa, sb = _sampling.random_subset(rng, p.labels), _sampling.random_subset(rng, q.labels)
        parts = sorted(engine(p, sa).facets + engine(q, sb).facets)
        assert list(engine(direct_sum(p, q), sa + sb).facets) == parts
        ordinal_counterexamples += list(engine(ordinal_sum(p, q), sa + sb).facets) != parts
    # smallest counterexample: the chain p < q
    chain = ordinal_sum(antichain(["p"]), antichain(["q"]))
    assert engine(chain, ["p", "q"]).facets == (("p",),)
    record(f"direct sums split 50/50; ordinal sums split "
           f"{50 - ordinal_counterexamples}/50 (reported, not failing)")


@pytest.mark.criterion(15)
def test_cycle_rows(record):
    p, _ = even_cycle_digraph(3)
    row2 = ["a1", "a2", "b1"]
    row3 = list(p.labels)
    assert engine(p, row2, True).facets == (("a1", "a2", "b1"),)
    assert engine(p, row2, False).facets == (("a1",), ("a2",))
    assert engine(p, row3, True).facets == (("a1", "a2", "b1"), ("a1", "a3", "b3"), ("a2", "a3", "b2"))
    assert engine(p, row3, False).facets == (("a1",), ("a2",), ("a3",))
    record("EXPECTED-DIVERGENCE under both conventions; engine = oracle")


@pytest.mark.criterion(13)
def test_downward_closure(record):
    # runs after the others in file order, so PRODUCED holds every complex above
    assert len(PRODUCED) > 500
    assert all(is_downward_closed(faces) for faces in PRODUCED)
    record(f"{len(PRODUCED)} complexes checked")


def test_paper_suite_clean():
    report = run_suite()
    assert report.ok, report.format()
    assert not run_suite(strict=True).ok
