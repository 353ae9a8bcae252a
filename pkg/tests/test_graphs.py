import pytest

from arcgraphs.graphs import (
    Graph,
    GroupAction,
    count_s_arcs,
    is_normal_cover,
    is_s_arc_transitive,
    least_s_arc,
    quotient_graph,
    semiregular_quotient_check,
)
from arcgraphs.group import PermGroup
from arcgraphs.perm import Permutation
from arcgraphs.constructions import build_cyclic, build_dihedral, build_sym

from _brute import s_arcs_brute


def complete_graph(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_count_s_arcs_examples():
    assert count_s_arcs(complete_graph(4), 2) == 24
    assert count_s_arcs(cycle_graph(5), 2) == 10
    assert count_s_arcs(cycle_graph(5), 0) == 5
    assert count_s_arcs(cycle_graph(5), 1) == 10


def test_count_s_arcs_matches_bruteforce():
    petersen_edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                      (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                      (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    petersen = Graph.from_edges(10, petersen_edges)
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    for graph in (complete_graph(4), cycle_graph(6), petersen, star):
        for s in range(5):
            assert count_s_arcs(graph, s) == len(s_arcs_brute(graph, s))


def test_least_s_arc_is_lexicographically_minimal():
    graph = cycle_graph(5)
    assert least_s_arc(graph, 2) == (0, 1, 2)
    all_arcs = sorted(s_arcs_brute(graph, 3))
    assert least_s_arc(graph, 3) == all_arcs[0]
    single_edge = Graph.from_edges(2, [(0, 1)])
    assert least_s_arc(single_edge, 2) is None


def test_s_arc_transitivity_k4():
    k4 = complete_graph(4)
    action = GroupAction(build_sym(4), k4)
    report = is_s_arc_transitive(action, 2)
    assert report.transitive
    assert report.orbit_size == report.total_arcs == 24
    assert report.orbit_size * report.arc_stabilizer_order == 24


def test_rotation_group_is_not_arc_transitive_on_c5():
    c5 = cycle_graph(5)
    rot = build_cyclic(5)
    report = is_s_arc_transitive(GroupAction(rot, c5), 1)
    assert not report.transitive
    assert report.orbit_size == 5 and report.total_arcs == 10
    full = is_s_arc_transitive(GroupAction(build_dihedral(5), c5), 1)
    assert full.transitive


def test_s_arc_transitive_errors_on_edgeless():
    edgeless = Graph.from_edges(3, [])
    action = GroupAction(build_sym(3), edgeless)
    with pytest.raises(ValueError, match="no 1-arcs"):
        is_s_arc_transitive(action, 1)


def test_connectivity():
    assert complete_graph(4).is_connected()
    assert not Graph.from_edges(4, [(0, 1), (2, 3)]).is_connected()


def test_valency():
    assert cycle_graph(5).valency() == 2
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert star.valency() is None
    assert complete_graph(5).is_complete()
    assert not cycle_graph(5).is_complete()


def test_group_action_rejects_non_automorphisms():
    path = Graph.from_edges(3, [(0, 1), (1, 2)])
    swap = PermGroup([Permutation.from_cycles(3, [(0, 1)])])
    with pytest.raises(ValueError, match="does not preserve adjacency"):
        GroupAction(swap, path)


def test_quotient_examples():
    c6 = cycle_graph(6)
    d6 = build_dihedral(6)
    action = GroupAction(d6, c6)

    # full group: one orbit, single vertex, no edges
    q_full, _ = quotient_graph(action, d6)
    assert q_full.vertex_count == 1 and q_full.edge_count() == 0

    # trivial group: the graph itself
    q_triv, omap = quotient_graph(action, PermGroup.trivial(6))
    assert q_triv == c6 and omap == list(range(6))

    # antipodal rotation: C3, valency preserved
    M = PermGroup([Permutation.from_cycles(6, [(0, 3), (1, 4), (2, 5)])])
    q, omap = quotient_graph(action, M)
    assert q.vertex_count == 3
    assert q == cycle_graph(3)
    assert is_normal_cover(c6, q)
    # hand oracle: orbit {0,3} meets {1,4} via edge 0-1 and {2,5} via 5-0
    assert sorted(q.edges()) == [(0, 1), (0, 2), (1, 2)]


def test_quotient_requires_subgroup():
    c6 = cycle_graph(6)
    action = GroupAction(build_cyclic(6), c6)
    M = PermGroup([Permutation.from_cycles(6, [(0, 1)])])
    with pytest.raises(ValueError, match="not a subgroup"):
        quotient_graph(action, M)


def test_normal_cover_examples():
    assert is_normal_cover(cycle_graph(6), cycle_graph(3))
    assert is_normal_cover(cycle_graph(6), cycle_graph(6))
    k4 = complete_graph(4)
    M = PermGroup([Permutation.from_cycles(4, [(0, 1), (2, 3)])])
    q, _ = quotient_graph(GroupAction(M, k4), M)
    assert q.vertex_count == 2 and q.valency() == 1
    assert not is_normal_cover(k4, q)  # valency 3 collapses to 1
    with pytest.raises(ValueError, match="regular"):
        is_normal_cover(Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)]), k4)


def test_semiregular_quotient_check_pass():
    c6 = cycle_graph(6)
    action = GroupAction(build_dihedral(6), c6)
    M = PermGroup([Permutation.from_cycles(6, [(0, 3), (1, 4), (2, 5)])])
    report = semiregular_quotient_check(action, M)
    assert report.hypotheses_met
    assert report.semiregular and report.valency_preserved
    assert report.conclusions_hold
    assert not report.internal_edges_dropped


def test_semiregular_quotient_check_flags_violation():
    k4 = complete_graph(4)
    M = PermGroup([Permutation.from_cycles(4, [(2, 3)])])
    report = semiregular_quotient_check(GroupAction(M, k4), M)
    assert not report.semiregular
    assert report.conclusions_hold is False
    assert any("stabilizer" in note for note in report.notes)


def test_semiregular_quotient_check_hypotheses_unmet():
    c6 = cycle_graph(6)
    action = GroupAction(build_dihedral(6), c6)
    M = PermGroup([Permutation.from_cycles(6, [(1, 5), (2, 4)])])  # reflection
    report = semiregular_quotient_check(action, M)
    assert not report.normal
    assert not report.hypotheses_met
    assert any("not normal" in note for note in report.notes)


def test_trivial_m_satisfies_conclusions():
    c6 = cycle_graph(6)
    action = GroupAction(build_dihedral(6), c6)
    report = semiregular_quotient_check(action, PermGroup.trivial(6))
    assert report.hypotheses_met  # normal, orbit count = 6 >= 3
    assert report.semiregular and report.valency_preserved
    assert report.conclusions_hold


def test_two_arc_report_invariants():
    k4 = complete_graph(4)
    action = GroupAction(build_sym(4), k4)
    report = is_s_arc_transitive(action, 2)
    assert report.orbit_size * report.arc_stabilizer_order == 24
    assert report.sample_arc == (0, 1, 2)
    assert report.to_dict()["transitive"]


def test_exports_and_imports():
    g = cycle_graph(4)
    assert g.to_edgelist() == "0 1\n0 3\n1 2\n2 3\n"
    assert Graph.from_edgelist(g.to_edgelist()) == g
    assert Graph.from_json(g.to_json()) == g
    dot = g.to_dot()
    assert dot.startswith("graph G {") and "0 -- 1;" in dot


def test_edgelist_parse_errors_name_lines():
    with pytest.raises(ValueError, match="line 2"):
        Graph.from_edgelist("0 1\n0 one\n")
    with pytest.raises(ValueError, match="line 1"):
        Graph.from_edgelist("0 1 2\n")


def test_graph_validation():
    with pytest.raises(ValueError, match="loop"):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError, match="vertex range"):
        Graph.from_edges(3, [(0, 5)])
