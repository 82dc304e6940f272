from scarfposet import Poset, SimplicialComplex, divisibility_closure, type_a_root_poset
from scarfposet.render import complex_dot, poset_dot
from scarfposet.scarf import cycle_complex


def _nodes(text):
    return [l for l in text.splitlines() if l.strip().endswith(";") and "->" not in l
            and "--" not in l and "rankdir" not in l]


def test_one_point():
    text = poset_dot(Poset.from_covers(["a"], []))
    assert _nodes(text) == ['  "a";']
    assert "->" not in text


def test_a5_counts():
    text = poset_dot(type_a_root_poset(5))
    assert len(_nodes(text)) == 15
    assert text.count("->") == 20


def test_external_annotated():
    text = poset_dot(divisibility_closure([2]))
    assert '"1" [style=dashed, xlabel="ext"];' in text
    assert '"1" -> "2";' in text


def test_triangle_complex():
    text = complex_dot(cycle_complex(["a", "b", "c"]))
    assert len(_nodes(text)) == 3
    assert text.count(" -- ") == 3
    assert "higher facets" not in text


def test_higher_faces_in_comment():
    text = complex_dot(SimplicialComplex.from_faces([("a", "b", "c"), ("c", "d")]))
    assert "{a, b, c}" in text
    assert text.count(" -- ") == 4


def test_byte_stable():
    p = type_a_root_poset(4)
    assert poset_dot(p) == poset_dot(Poset.from_json(p.to_json()))
