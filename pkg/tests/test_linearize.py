import json

import pytest
from hypothesis import given, settings, strategies as st

from mcat.freemon import Morphism, Path, Triple, expr_to_morphism, normal_form, relation_morphisms
from mcat.linearize import (
    EndomorphismHypothesisError,
    TruncationError,
    end_algebra,
    end_algebra_of_power,
    linearize,
    tensor_instance,
    termwise_instance,
    whisker_relation,
)
from mcat.presentation import BUILTIN_NAMES, builtin, parse_presentation

A, AA, ONE = ("a",), ("a", "a"), ()


def sym():
    return builtin("symmetric")


def test_linearize_two_strands():
    L = linearize(sym(), 2)
    assert [str(t) for t in L.generators] == ["(- | s | -)"]
    assert [r.name for r in L.relations] == ["involution(- | -)"]
    assert L.interchange == []


def test_linearize_three_strands():
    L = linearize(sym(), 3)
    assert [str(t) for t in L.generators] == ["(- | s | -)", "(- | s | a)", "(a | s | -)"]
    assert L.interchange == []
    names = [r.name for r in L.whiskered]
    assert names == ["braid(- | -)", "involution(- | -)", "involution(- | a)", "involution(a | -)"]


def test_linearize_four_strands_has_far_commutation():
    L = linearize(sym(), 4)
    assert len(L.generators) == 6
    assert len(L.interchange) == 1
    (c,) = L.interchange
    swapped = {tuple(str(t) for t in p.steps) for _, p in c.morphism.terms}
    assert swapped == {("(- | s | a a)", "(a a | s | -)"), ("(a a | s | -)", "(- | s | a a)")}
    assert len(L.whiskered) == 9


def test_linearize_rejects_tiny_bound():
    with pytest.raises(TruncationError):
        linearize(sym(), 1)


def test_linearize_json_is_deterministic():
    doc = linearize(sym(), 4).to_json()
    assert json.dumps(doc) == json.dumps(linearize(sym(), 4).to_json())
    kinds = [r["kind"] for r in doc["relations"]]
    assert kinds.count("C") == 1 and kinds.count("R'") == 9


def test_whisker_relation_examples():
    r = relation_morphisms(sym())["involution"]
    assert whisker_relation(r, ONE, ONE) == normal_form(r)
    s1 = Triple(A, builtin("symmetric").edge("s"), ONE)
    expected = Morphism.from_path(Path(("a",) * 3, (s1, s1))) - Morphism.identity(("a",) * 3)
    assert whisker_relation(r, A, ONE) == expected
    braid = relation_morphisms(sym())["braid"]
    inst = whisker_relation(braid, ONE, A)
    L = linearize(sym(), 4)
    (emitted,) = [x for x in L.whiskered if x.name == "braid(- | a)"]
    assert normal_form(emitted.morphism) == inst


def frames(draw, objects, room):
    n = draw(st.integers(0, room))
    a = tuple(draw(st.sampled_from(objects)) for _ in range(n))
    m = draw(st.integers(0, room - n))
    b = tuple(draw(st.sampled_from(objects)) for _ in range(m))
    return a, b


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(BUILTIN_NAMES), st.data())
def test_termwise_matches_tensor(name, data):
    P = builtin(name)
    rels = [(r.name, expr_to_morphism(r.expr, P.field.one)) for r in P.relations]
    _, r = data.draw(st.sampled_from(rels))
    a, b = frames(data.draw, P.objects, 5)
    assert normal_form(termwise_instance(r, a, b)) == normal_form(tensor_instance(r, a, b, P.field.one))


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_symmetric_generator_count(d):
    assert len(end_algebra_of_power(sym(), "a", d).generators) == d - 1


@pytest.mark.parametrize("algebra, size", [("Z2", 2), ("Z3", 3), ("trivial", 1)])
@pytest.mark.parametrize("d", [1, 2, 3])
def test_wreath_generator_count(algebra, size, d):
    A = end_algebra_of_power(builtin("wreath", algebra=algebra), "a", d)
    assert len(A.generators) == (d - 1) + d * size


def test_end_algebra_three_strands():
    A = end_algebra(sym(), ("a",) * 3)
    assert A.names == ["s[0]", "s[1]"]
    assert A.indices_from_right() == {"s[0]": 2, "s[1]": 1}
    texts = sorted(r.polynomial(A.default_order()).format(A.names) for r in A.relations)
    assert texts == sorted(["s[0]*s[0] - 1", "s[1]*s[1] - 1", "- s[1]*s[0]*s[1] + s[0]*s[1]*s[0]"])
    assert "3 - 1 - k" in A.to_text()


def test_end_algebra_four_strands_commutation():
    A = end_algebra(sym(), ("a",) * 4)
    assert len(A.generators) == 3
    comm = [r for r in A.relations if r.source == "interchange"]
    assert [r.polynomial(A.default_order()).format(A.names) for r in comm] == ["s[2]*s[0] - s[0]*s[2]"]


def test_braid_inverse_pair():
    A = end_algebra(builtin("braid"), AA)
    assert A.names == ["sigma[0]", "sigma_inv[0]"]
    texts = sorted(r.polynomial(A.default_order()).format(A.names) for r in A.relations)
    assert texts == ["sigma[0]*sigma_inv[0] - 1", "sigma_inv[0]*sigma[0] - 1"]


def test_non_endomorphism_edge_is_rejected():
    P = parse_presentation("object a\nmorphism cup : - -> a a\n")
    with pytest.raises(EndomorphismHypothesisError, match="endomorphism"):
        end_algebra(P, AA)


@pytest.mark.parametrize("name", BUILTIN_NAMES)
@pytest.mark.parametrize("d", [2, 3])
def test_round_trip_fidelity(name, d):
    P = builtin(name)
    A = end_algebra(P, ("a",) * d)
    sources = relation_morphisms(P)
    for rel in A.relations:
        back = normal_form(A.relation_morphism(rel))
        if rel.source == "interchange":
            assert back.is_zero()
        else:
            assert back == normal_form(termwise_instance(sources[rel.source], rel.left, rel.right))


def test_algebra_json():
    doc = end_algebra(builtin("hecke"), AA).to_json()
    assert doc["coefficients"] == "Q(q)"
    assert [g["name"] for g in doc["generators"]] == ["sigma[0]", "sigma_inv[0]"]
    skein = [r for r in doc["relations"] if r["source"] == "skein"]
    (skein,) = skein
    assert {t["coeff"] for t in skein["terms"]} == {"1", "-1", "(-q^2 + 1)/q"}
