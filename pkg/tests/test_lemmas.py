from __future__ import annotations

import pytest

from cbstruct.errors import Disconnected, InvalidCycle, InvalidInput, NotAnEdge, PreconditionFailed
from cbstruct.expansion import expand
from cbstruct.graph import (
    claw_graph,
    complement,
    complete_graph,
    cycle_graph,
    diameter,
    from_edge_list,
    path_graph,
    petersen_graph,
)
from cbstruct.lemmas import (
    LemmaReport,
    check_lemma_cycle_neighbors,
    check_lemma_diam2,
    check_lemma_dominating,
    check_lemma_layers,
    check_lemma_long,
    check_lemma_mid,
    check_lemma_short,
    check_prop_chord_forcing,
    cycle_length_of,
)
from cbstruct.oracles import InducedCycle, brute_force_cb_free, independence_number


def _holds(report: LemmaReport) -> bool:
    return report.holds and report.violation is None


def test_report_requires_violation_when_failing():
    with pytest.raises(ValueError):
        LemmaReport("x", False)


# -- BFS layers ------------------------------------------------------------

def test_layers_examples():
    assert _holds(check_lemma_layers(path_graph(5), 0, 1))
    g, bags = expand(path_graph(5), [2, 1, 3, 1, 2])
    assert _holds(check_lemma_layers(g, bags[0][0], bags[0][1]))
    assert _holds(check_lemma_layers(cycle_graph(6), 0, 1))
    with pytest.raises(NotAnEdge):
        check_lemma_layers(path_graph(5), 0, 2)
    with pytest.raises(PreconditionFailed):
        check_lemma_layers(claw_graph(), 0, 1)


def test_layers_refuses_graphs_with_a_claw():
    # the conclusion genuinely fails on a claw-containing graph; the checker
    # refuses it rather than reporting a violation
    star = from_edge_list(5, [(0, 1), (1, 2), (1, 3), (1, 4)])
    with pytest.raises(InvalidInput):
        check_lemma_layers(star, 0, 1)


# -- cycle neighbourhoods ---------------------------------------------------

def test_cycle_neighbors_examples():
    c6 = cycle_graph(6)
    assert _holds(check_lemma_cycle_neighbors(c6, InducedCycle(tuple(range(6)))))
    g, bags = expand(cycle_graph(6), [2, 1, 1, 1, 1, 1])
    skeleton = InducedCycle(tuple(b[0] for b in bags))
    assert _holds(check_lemma_cycle_neighbors(g, skeleton))
    # C_4 with a vertex 4 hanging off 0 and two pendants on 4: claw at 4
    bad = from_edge_list(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (4, 6)])
    assert brute_force_cb_free(bad) is not None
    with pytest.raises(InvalidInput):
        check_lemma_cycle_neighbors(bad, InducedCycle((0, 1, 2, 3)))


def test_cycle_checkers_reject_non_cycles():
    with pytest.raises(InvalidCycle):
        check_lemma_cycle_neighbors(path_graph(5), InducedCycle((0, 1, 2, 3)))
    with pytest.raises(InvalidCycle):
        check_lemma_dominating(path_graph(5), InducedCycle((0, 1, 2, 3)))
    with pytest.raises(InvalidCycle):
        check_lemma_cycle_neighbors(complete_graph(3), InducedCycle((0, 1, 2)))


def test_dominating_examples():
    assert _holds(check_lemma_dominating(cycle_graph(6), InducedCycle(tuple(range(6)))))
    g, bags = expand(cycle_graph(6), [1, 2, 1, 2, 1, 2])
    for pick in range(2):
        skeleton = InducedCycle(tuple(b[min(pick, len(b) - 1)] for b in bags))
        assert _holds(check_lemma_dominating(g, skeleton))
    c6_plus_k1 = from_edge_list(7, cycle_graph(6).edges())
    with pytest.raises(Disconnected):
        check_lemma_dominating(c6_plus_k1, InducedCycle(tuple(range(6))))


# -- chord forcing ------------------------------------------------------------

def test_chord_forcing_examples():
    fan = from_edge_list(5, [(0, 1), (1, 2), (2, 3)] + [(4, v) for v in range(4)])
    assert cycle_length_of(fan) == 3
    assert _holds(check_prop_chord_forcing(fan, 4, (0, 1, 2, 3)))
    k4 = complete_graph(4)
    assert _holds(check_prop_chord_forcing(k4, 3, (0, 1)))
    # 0-1-2 is not an induced path of K_4 (0 and 2 are adjacent)
    with pytest.raises(PreconditionFailed) as info:
        check_prop_chord_forcing(k4, 3, (0, 1, 2))
    assert info.value.hypothesis == "induced path"
    with pytest.raises(PreconditionFailed) as info:
        check_prop_chord_forcing(cycle_graph(5), 0, (1, 2, 3, 4))
    assert "cycle" in info.value.hypothesis


def test_chord_forcing_needs_induced_path():
    # the diamond: triangles 0-1-2 and 0-2-3; u = 3 sees both ends of the
    # non-induced path 0-1-2 but not 1, so dropping inducedness would be wrong
    diamond = from_edge_list(4, [(0, 1), (1, 2), (0, 2), (0, 3), (2, 3)])
    assert cycle_length_of(diamond) == 3
    with pytest.raises(PreconditionFailed):
        check_prop_chord_forcing(diamond, 3, (0, 1, 2))
    with pytest.raises(PreconditionFailed):
        check_prop_chord_forcing(diamond, 1, (0, 3))


# -- whole-graph lemmas --------------------------------------------------------

def test_diam2_examples():
    with pytest.raises(PreconditionFailed):
        check_lemma_diam2(cycle_graph(6))
    for k in (1, 2, 3):
        g, _ = expand(cycle_graph(6), [k] * 6)
        assert diameter(g) == 3
        with pytest.raises(PreconditionFailed):
            check_lemma_diam2(g)


def test_short_examples():
    assert _holds(check_lemma_short(path_graph(5)))
    g, _ = expand(path_graph(6), [1, 2, 2, 1, 1, 1])
    assert _holds(check_lemma_short(g))
    with pytest.raises(PreconditionFailed):
        check_lemma_short(cycle_graph(6))


def test_short_needs_connectivity():
    # P_3 + P_3 is (claw, bull)-free with no cycle and independence number 4,
    # yet has infinite diameter
    g = from_edge_list(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    with pytest.raises(PreconditionFailed):
        check_lemma_short(g)


def test_mid_examples():
    assert _holds(check_lemma_mid(cycle_graph(5)))
    assert _holds(check_lemma_mid(cycle_graph(4)))
    co_pet = complement(petersen_graph())
    # triangle-free Petersen: complement has no claw, and no bull since the
    # bull is self-complementary; its outer 5-cycle survives complementation
    assert brute_force_cb_free(co_pet) is None
    assert cycle_length_of(co_pet) == 5
    assert independence_number(co_pet) == 2
    assert _holds(check_lemma_mid(co_pet))
    with pytest.raises(PreconditionFailed):
        check_lemma_mid(cycle_graph(6))


def test_mid_without_connectivity_fails_on_c4_plus_k1():
    # the hypotheses as stated omit connectivity; C_4 + K_1 meets them and has
    # independence number 3, so the checker reports a violation
    g = from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0)])
    report = check_lemma_mid(g)
    assert not report.holds
    assert report.violation == {"alpha": 3, "ell": 4}


def test_long_examples():
    assert _holds(check_lemma_long(cycle_graph(6)))
    g, _ = expand(cycle_graph(7), [1, 1, 2, 1, 1, 1, 1])
    assert cycle_length_of(g) == 7
    assert _holds(check_lemma_long(g))
    with pytest.raises(PreconditionFailed):
        check_lemma_long(cycle_graph(5))
