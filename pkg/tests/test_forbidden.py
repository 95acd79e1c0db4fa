from __future__ import annotations

import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from cbstruct.errors import IndexOutOfRange
from cbstruct.forbidden import (
    BullWitness,
    ClawWitness,
    find_induced_bull,
    find_induced_claw,
    find_witness,
    verify_witness,
    witness_from_record,
    witness_to_record,
)
from cbstruct.graph import (
    bull_graph,
    claw_graph,
    complement,
    complete_graph,
    cycle_graph,
    induced_subgraph,
    petersen_graph,
)
from cbstruct.oracles import brute_force_cb_free

from .conftest import graphs, random_graph


def test_claw_examples():
    assert find_induced_claw(claw_graph()) == ClawWitness(0, (1, 2, 3))
    assert find_induced_claw(cycle_graph(6)) is None
    w = find_induced_claw(petersen_graph())
    assert w is not None and verify_witness(petersen_graph(), w)
    # girth 5: every closed neighbourhood is a claw; {0, 1, 2, 6} = N[1] is
    # the lexicographically least of them
    assert w == ClawWitness(1, (0, 2, 6))


def test_bull_examples():
    bull = bull_graph()
    assert find_induced_bull(bull) == BullWitness((0, 1, 2), (3, 4))
    assert find_induced_bull(cycle_graph(5)) is None
    co = complement(bull)
    w = find_induced_bull(co)
    assert w is not None and verify_witness(co, w)
    assert w.vertices == (0, 1, 2, 3, 4)


def test_verify_witness_examples():
    assert verify_witness(claw_graph(), ClawWitness(0, (1, 2, 3)))
    assert not verify_witness(complete_graph(4), ClawWitness(0, (1, 2, 3)))
    assert verify_witness(bull_graph(), BullWitness((0, 1, 2), (3, 4)))
    # pendants swapped onto the wrong triangle vertices
    assert not verify_witness(bull_graph(), BullWitness((0, 1, 2), (4, 3)))
    assert not verify_witness(claw_graph(), ClawWitness(0, (1, 1, 2)))
    with pytest.raises(IndexOutOfRange):
        verify_witness(claw_graph(), ClawWitness(0, (1, 2, 7)))


def _least_claw_by_subsets(g):
    for s in combinations(range(g.n), 4):
        for c in s:
            leaves = tuple(v for v in s if v != c)
            if verify_witness(g, ClawWitness(c, leaves)):
                return ClawWitness(c, leaves)
    return None


@settings(max_examples=300)
@given(graphs(max_n=9))
def test_witnesses_sound_and_least(g):
    claw = find_induced_claw(g)
    assert claw == _least_claw_by_subsets(g)
    bull = find_induced_bull(g)
    if bull is not None:
        assert verify_witness(g, bull)
        assert bull.triangle[0] < bull.triangle[1]
    w = find_witness(g)
    assert w == (claw if claw is not None else bull)


def test_agrees_with_oracle_on_random_graphs():
    rng = random.Random(11)
    for _ in range(2000):
        n = rng.randint(0, 12)
        g = random_graph(rng, n, rng.choice((0.2, 0.4, 0.5, 0.6, 0.8)))
        oracle = brute_force_cb_free(g)
        ours = find_witness(g)
        assert (oracle is None) == (ours is None)
        if isinstance(oracle, ClawWitness):
            # both return the lexicographically least claw
            assert ours == oracle
        elif oracle is not None:
            # claw-free, so both report the least bull
            assert ours == oracle


def test_claw_freeness_is_hereditary():
    rng = random.Random(3)
    checked = 0
    while checked < 200:
        g = random_graph(rng, rng.randint(4, 10), 0.6)
        if find_induced_claw(g) is not None:
            continue
        checked += 1
        for _ in range(5):
            s = [v for v in range(g.n) if rng.random() < 0.6]
            assert find_induced_claw(induced_subgraph(g, s)) is None


def test_record_round_trip():
    for w in (ClawWitness(0, (1, 2, 3)), BullWitness((0, 1, 2), (3, 4))):
        rec = witness_to_record(w)
        assert witness_from_record(rec) == w
    assert witness_to_record(ClawWitness(4, (0, 1, 2))) == {"kind": "claw", "center": 4, "leaves": [0, 1, 2]}
    with pytest.raises(ValueError):
        witness_from_record({"kind": "star"})
    with pytest.raises(ValueError):
        witness_from_record({"kind": "claw", "center": 0, "leaves": [1, 2]})
