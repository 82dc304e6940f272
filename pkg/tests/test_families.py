from itertools import combinations

import pytest
from hypothesis import given

from scarfposet import (
    Poset,
    antichain,
    complete_bipartite_digraph,
    digraph_poset,
    direct_sum,
    divisibility_closure,
    even_cycle_digraph,
    ordinal_sum,
    powerset_closure,
    type_a_root_poset,
)
from scarfposet.errors import (
    CyclicDigraph,
    DuplicateLabel,
    EmptyInput,
    LabelCollision,
    Overflow,
    TooSmall,
    UniverseTooLarge,
)
from scarfposet.families import root_label as a

from conftest import posets


def test_antichain():
    p = antichain(["2", "3", "5"])
    for x in p.labels:
        assert p.order_ideal(x) == {x}
    assert len(antichain(["x"])) == 1
    with pytest.raises(DuplicateLabel):
        antichain(["2", "2"])
    with pytest.raises(EmptyInput):
        antichain([])


def test_divisibility_universe():
    p = divisibility_closure([6, 10, 15])
    assert len(p) == 27
    assert {int(x) for x in p.labels} == {d for d in range(1, 901) if 900 % d == 0}
    assert p.external_labels() == set(p.labels)


def test_divisibility_covers_are_prime_steps():
    p = divisibility_closure([12, 5])
    nums = {int(x) for x in p.labels}
    primes = [2, 3, 5]
    expected = {(str(d), str(d * q)) for d in nums for q in primes if d * q in nums}
    assert set(p.cover_pairs()) == expected
    # divisor-closed
    for d in nums:
        assert all(e in nums for e in range(1, d + 1) if d % e == 0)


def test_divisibility_small():
    p = divisibility_closure([7])
    assert p.cover_pairs() == [("1", "7")]
    assert set(divisibility_closure([4, 2]).labels) == {"1", "2", "4", "8"}


def test_divisibility_errors():
    with pytest.raises(EmptyInput):
        divisibility_closure([])
    with pytest.raises(Overflow):
        divisibility_closure([2**40, 2**40])
    with pytest.raises(ValueError):
        divisibility_closure([0])


def test_powerset():
    p = powerset_closure([{1}, {2}])
    assert set(p.labels) == {"{}", "{1}", "{2}", "{1,2}"}
    assert p.external_labels() == set(p.labels)
    assert set(powerset_closure([{1}]).labels) == {"{}", "{1}"}
    finite = powerset_closure([{1, 2}], ambient_infinite=False)
    assert finite.external_labels() == set()
    assert finite.leq("{1}", "{1,2}")


def test_powerset_guard():
    with pytest.raises(UniverseTooLarge):
        powerset_closure([set(range(21))], max_size=None)
    with pytest.raises(EmptyInput):
        powerset_closure([])


def test_digraph_poset():
    edges = [("a1", "b1"), ("a2", "b1"), ("a2", "b2"), ("a3", "b2"), ("a1", "b3"), ("a3", "b3")]
    p = digraph_poset(["a1", "a2", "a3", "b1", "b2", "b3"], edges)
    assert set(p.cover_pairs()) == set(edges)
    assert digraph_poset(["x", "y"], []).cover_pairs() == []
    with pytest.raises(CyclicDigraph):
        digraph_poset(["a", "b"], [("a", "b"), ("b", "a")])


def test_digraph_reachability_reduces():
    p = digraph_poset(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
    assert p.leq("a", "c")
    assert sorted(p.cover_pairs()) == [("a", "b"), ("b", "c")]


@given(posets())
def test_hasse_digraph_roundtrip(p):
    assert digraph_poset(list(p.labels), p.cover_pairs()).leq_pairs() == p.leq_pairs()


@pytest.mark.parametrize("n", range(2, 9))
def test_even_cycle_shape(n):
    p, sources = even_cycle_digraph(n)
    sinks = [x for x in p.labels if x not in sources]
    assert len(sources) == len(sinks) == n
    assert all(not p.order_ideal(s) - {s} for s in sources)
    assert all(not p.covers_of(b) for b in sinks)
    assert all(len(p.order_ideal(b)) == 3 for b in sinks)


def test_even_cycle_small():
    p, _ = even_cycle_digraph(2)
    assert p.order_ideal("b1") == {"a1", "a2", "b1"}
    assert p.order_ideal("b2") == {"a1", "a2", "b2"}
    with pytest.raises(TooSmall):
        even_cycle_digraph(1)


def test_complete_bipartite():
    p, src, snk = complete_bipartite_digraph(3, 2)
    for b in snk:
        d = p.ideal_decomposition(b)
        assert d.boundary == set(src) | {b}
        assert d.interior == set()
    p, src, snk = complete_bipartite_digraph(1, 2)
    assert p.order_ideal("b1") == {"a1", "b1"}
    p, src, snk = complete_bipartite_digraph(3, 1)
    assert p.ideal_decomposition("b1").interior == set(src)
    with pytest.raises(TooSmall):
        complete_bipartite_digraph(0, 2)


@pytest.mark.parametrize("n", range(1, 9))
def test_type_a_sizes(n):
    p = type_a_root_poset(n)
    assert len(p) == n * (n + 1) // 2
    assert len(p.cover_pairs()) == n * (n - 1)
    for i in range(1, n + 1):
        for j in range(1, n - i + 2):
            assert len(p.order_ideal(a(i, j))) == i * (i + 1) // 2


def test_type_a_five():
    p = type_a_root_poset(5)
    assert len(p) == 15
    assert p.covers_of(a(1, 1)) == {a(2, 1)}
    assert p.covers_of(a(2, 2)) == {a(3, 1), a(3, 2)}
    assert p.maximal() == [a(5, 1)]
    assert len(type_a_root_poset(1)) == 1
    with pytest.raises(TooSmall):
        type_a_root_poset(0)


def test_direct_sum():
    s = direct_sum(antichain(["x"]), antichain(["y"]))
    assert s == antichain(["x", "y"])
    with pytest.raises(LabelCollision):
        direct_sum(antichain(["x"]), antichain(["x"]))


def test_ordinal_sum_of_chains():
    p = Poset.from_covers(["a", "b"], [("a", "b")])
    q = Poset.from_covers(["c", "d"], [("c", "d")])
    s = ordinal_sum(p, q)
    assert sorted(s.cover_pairs()) == [("a", "b"), ("b", "c"), ("c", "d")]


@given(posets(6, "p"), posets(6, "q"))
def test_ordinal_sum_order(p, q):
    s = ordinal_sum(p, q)
    for x, y in combinations(s.labels, 2):
        if x in p and y in q:
            assert s.leq(x, y)
        elif x in p and y in p or x in q and y in q:
            assert s.leq(x, y) == (p if x in p else q).leq(x, y)
