from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from cbstruct.classifier import (
    CoTriangleFree,
    CycleExpansion,
    NotCBFree,
    PathExpansion,
    alpha_at_most_two,
    classification_from_record,
    classification_to_record,
    classify,
    corollary_check,
    has_triangle,
    is_complete_bipartite,
    verify_certificate,
)
from cbstruct.errors import Disconnected, EmptyGraph, NotTriangleFree
from cbstruct.expansion import ExpansionCert, expand
from cbstruct.forbidden import BullWitness, ClawWitness
from cbstruct.graph import (
    Graph,
    bull_graph,
    claw_graph,
    complement,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edge_list,
    is_connected,
    path_graph,
    petersen_graph,
)
from cbstruct.oracles import brute_force_cb_free, independence_number

from .conftest import graphs, random_graph


def _unit(n):
    return tuple((v,) for v in range(n))


def test_alpha_examples():
    assert alpha_at_most_two(cycle_graph(5))
    assert not alpha_at_most_two(path_graph(5))
    for n in range(1, 8):
        assert alpha_at_most_two(complete_graph(n))


def test_alpha_test_matches_independence_number():
    rng = random.Random(7)
    for _ in range(10_000):
        n = rng.randint(0, 10)
        g = random_graph(rng, n, rng.choice((0.3, 0.5, 0.7, 0.85)))
        assert alpha_at_most_two(g) == (independence_number(g) <= 2)


def test_classify_examples():
    assert classify(path_graph(5)) == PathExpansion(ExpansionCert("path", _unit(5)))
    assert classify(cycle_graph(6)) == CycleExpansion(ExpansionCert("cycle", _unit(6)))
    assert classify(cycle_graph(5)) == CoTriangleFree()
    assert classify(claw_graph()) == NotCBFree(ClawWitness(0, (1, 2, 3)))
    pet = classify(petersen_graph())
    assert isinstance(pet, NotCBFree) and pet.witness.kind == "claw"
    assert classify(bull_graph()) == NotCBFree(BullWitness((0, 1, 2), (3, 4)))
    # P_4 has independence number 2, so it is co-triangle-free, not a path expansion
    assert classify(path_graph(4)) == CoTriangleFree()
    assert classify(Graph(1, (0,))) == CoTriangleFree()


def test_classify_errors():
    with pytest.raises(EmptyGraph):
        classify(Graph(0, ()))
    with pytest.raises(Disconnected):
        classify(empty_graph(2))


def test_classify_expansions():
    g, bags = expand(path_graph(6), [1, 3, 1, 1, 2, 1])
    assert classify(g) == PathExpansion(ExpansionCert("path", bags))
    g, _ = expand(cycle_graph(6), [1, 2, 1, 2, 1, 2])
    assert isinstance(classify(g), CycleExpansion)


@settings(max_examples=400)
@given(graphs(min_n=1, max_n=9))
def test_classify_agrees_with_oracle_and_certifies(g):
    if not is_connected(g):
        return
    c = classify(g)
    assert isinstance(c, NotCBFree) == (brute_force_cb_free(g) is not None)
    assert verify_certificate(g, c)
    assert classification_from_record(classification_to_record(c)) == c


def test_verify_certificate_examples():
    c6 = cycle_graph(6)
    assert verify_certificate(c6, classify(c6))
    assert not verify_certificate(c6, CoTriangleFree())
    assert verify_certificate(claw_graph(), NotCBFree(ClawWitness(0, (1, 2, 3))))
    assert not verify_certificate(c6, PathExpansion(ExpansionCert("path", _unit(6))))
    assert not verify_certificate(c6, NotCBFree(ClawWitness(0, (1, 2, 9))))
    # path certificate smuggled into the cycle variant
    assert not verify_certificate(path_graph(5), CycleExpansion(ExpansionCert("path", _unit(5))))
    assert not verify_certificate(empty_graph(2), CoTriangleFree())


def test_record_shape():
    rec = classification_to_record(classify(cycle_graph(6)))
    assert rec == {"class": "cycle_expansion", "certificate": {"kind": "cycle", "bags": [[v] for v in range(6)]}}
    assert classification_to_record(CoTriangleFree()) == {"class": "co_triangle_free", "certificate": {"kind": "alpha_le_2"}}
    with pytest.raises(ValueError):
        classification_from_record({"class": "nope", "certificate": {}})
    with pytest.raises(ValueError):
        classification_from_record({"class": "not_cb_free", "certificate": {"kind": "claw"}})
    with pytest.raises(ValueError):
        classification_from_record({"class": "path_expansion", "certificate": None})


def test_triangle_and_bipartite_helpers():
    assert has_triangle(complete_graph(3)) and not has_triangle(cycle_graph(5))
    assert is_complete_bipartite(complete_bipartite(3, 3))
    assert is_complete_bipartite(complete_bipartite(1, 1))
    assert is_complete_bipartite(cycle_graph(4))
    assert not is_complete_bipartite(path_graph(4))
    assert not is_complete_bipartite(Graph(1, (0,)))
    assert not is_complete_bipartite(empty_graph(3))


def test_corollary_examples():
    r = corollary_check(complete_bipartite(3, 3))
    assert r.is_complete_bipartite and not r.counterexample
    r = corollary_check(cycle_graph(5))
    assert not r.is_complete_bipartite and r.complement_class == CoTriangleFree()
    assert not r.counterexample
    # complement(P_5) is C_5 plus the chord 04: connected with independence number 2
    h = complement(path_graph(5))
    assert h == from_edge_list(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0), (0, 4)])
    assert is_connected(h) and independence_number(h) == 2
    r = corollary_check(path_graph(5))
    assert r.complement_class == CoTriangleFree() and not r.counterexample
    with pytest.raises(NotTriangleFree):
        corollary_check(complete_graph(3))


def test_corollary_on_random_triangle_free_graphs():
    rng = random.Random(99)
    seen = 0
    while seen < 300:
        g = random_graph(rng, rng.randint(1, 10), 0.3)
        if has_triangle(g):
            continue
        seen += 1
        assert not corollary_check(g).counterexample
