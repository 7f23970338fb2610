import pytest

from lipaths._shared.models import GadgetRole, Interval, IntervalSystem, OrderedGraph
from lipaths.lowerbound import service
from lipaths.lowerbound.use_case import LowerboundUseCase
from lipaths.ordered import service as ordered_service
from lipaths.utils.exceptions import LipathsException
from lipaths.utils.graph_io import write_edge_list


@pytest.fixture(scope="module")
def g1():
    return service.build_construction(1)


@pytest.fixture(scope="module")
def g2():
    return service.build_construction(2)


def test_h_values():
    assert [service.h_fn(ell) for ell in (1, 2, 3)] == [3, 8, 18]
    with pytest.raises(LipathsException):
        service.h_fn(0)


def test_first_interval_systems():
    assert service.build_intervals(1).pairs() == [(1, 3)]
    assert service.build_intervals(2).pairs() == [(1, 8), (2, 4), (5, 7)]


def test_n3_matches_the_golden_file(golden):
    system = service.build_intervals(3)
    assert set(system.pairs()) == {(1, 18), (2, 9), (10, 17), (3, 5), (6, 8), (11, 13), (14, 16)}
    golden("N3.intervals", "".join(f"{iv.i} {iv.j} {iv.rank}\n" for iv in system.intervals))


@pytest.mark.parametrize("ell", range(1, 7))
def test_nested_interval_properties(ell):
    system = service.build_intervals(ell)
    assert service.check_interval_system(system) == []
    assert len(system.intervals) == 2 ** ell - 1


def test_crossing_intervals_are_reported():
    system = IntervalSystem(ell=1, intervals=(Interval(1, 3, 1), Interval(2, 4, 1)))
    problems = service.check_interval_system(system)
    assert any("cross" in p for p in problems)


def test_gadget_has_seventeen_edges():
    assert len(service.GADGET_EDGES) == 17
    assert len({frozenset(e) for e in service.GADGET_EDGES}) == 17


def test_g1_sizes(g1):
    assert g1.node_count == 7
    assert g1.vertex_count == 112
    assert g1.rib_count == 32
    assert g1.edge_count == 17 * 7 + 4 * 3 + 32


def test_g2_sizes(g2):
    assert g2.node_count == 255
    assert g2.vertex_count == 4080
    assert g2.vertex_count >= 2 ** 4


def test_ell_out_of_range_is_rejected():
    with pytest.raises(LipathsException) as error:
        service.build_construction(0)
    assert error.value.exit_code == 2


def test_ribs_follow_the_rib_rule(g1):
    right_out = g1.vertex(1, GadgetRole.RIGHT_OUT)
    left_out = g1.vertex(1, GadgetRole.LEFT_OUT)
    for leaf in range(4, 8):
        assert service.has_edge(g1, right_out, g1.vertex(leaf, GadgetRole.NESE_B))
        assert service.has_edge(g1, left_out, g1.vertex(leaf, GadgetRole.SSW_A))
        assert not service.has_edge(g1, left_out, g1.vertex(leaf, GadgetRole.SSW_B))
    # a profundidade 2 não fecha intervalo de N_1
    assert not service.has_edge(g1, right_out, g1.vertex(2, GadgetRole.NESE_B))


def test_tree_edges_pair_connectors_with_child_out_ports(g1):
    assert service.has_edge(g1, g1.vertex(1, GadgetRole.SSW_C), g1.vertex(2, GadgetRole.RIGHT_OUT))
    assert service.has_edge(g1, g1.vertex(1, GadgetRole.NWSW_C), g1.vertex(2, GadgetRole.LEFT_OUT))
    assert service.has_edge(g1, g1.vertex(1, GadgetRole.SSE_C), g1.vertex(3, GadgetRole.LEFT_OUT))
    assert service.has_edge(g1, g1.vertex(1, GadgetRole.NESE_C), g1.vertex(3, GadgetRole.RIGHT_OUT))


def test_edge_order_and_preimages(g1, g2):
    for graph in (g1, g2):
        assert service.check_edge_order(graph) == []
        assert service.check_preimages(graph)


def test_hamiltonian_path_contract(g1):
    path = service.ham_path(g1)
    assert len(path) == 112
    assert path[0] == g1.vertex(1, GadgetRole.LEFT_OUT)
    assert path[-1] == g1.vertex(1, GadgetRole.RIGHT_OUT)
    assert not any(service.is_rib(g1, u, v) for u, v in zip(path, path[1:]))
    assert service.validate_ham_path(g1, path) == []


def test_g2_hamiltonian_path_is_valid(g2):
    path = service.ham_path(g2)
    assert service.validate_ham_path(g2, path) == []
    assert service.validate_ham_path(g2, path[:-1])


def test_leaf_gadget_is_traversed_through_both_connector_edges(g1):
    path = list(service.ham_path(g1))
    leaf = [v for v in path if g1.node_of(v) == 4]
    assert len(leaf) == 16
    start = path.index(leaf[0])
    assert path[start:start + 16] == leaf
    roles = [g1.role_of(v) for v in leaf]
    assert roles.index(GadgetRole.SSW_C) == roles.index(GadgetRole.NWSW_C) + 1
    assert roles.index(GadgetRole.NESE_C) == roles.index(GadgetRole.SSE_C) + 1


def test_broken_path_is_reported(g1):
    path = list(service.ham_path(g1))
    path[3], path[4] = path[4], path[3]
    assert service.validate_ham_path(g1, path)


def test_traced_export(g1):
    traced = service.to_traced(g1)
    assert traced.n == 112
    assert traced.m == g1.edge_count
    assert traced.pattern_graph().m == g1.edge_count - 111
    assert traced.pattern_graph().m == 52


def test_two_degeneracy():
    triangle = OrderedGraph.from_edges(3, [(1, 2), (2, 3), (1, 3)])
    k4 = OrderedGraph.from_edges(4, [(u, v) for u in range(1, 5) for v in range(u + 1, 5)])
    assert service.check_two_degenerate(triangle) is not None
    assert service.check_two_degenerate(k4) is None


def test_construction_is_two_degenerate(g1, g2):
    for graph in (g1, g2):
        order = service.check_two_degenerate(graph)
        assert order is not None
        assert len(order) == graph.vertex_count


def test_sources(g2):
    assert service.sources(g2) == {1: 2, 2: 1, 5: 1}


def test_pattern_of_g1_is_a_constellation(g1):
    witness = service.pattern_is_constellation(g1)
    assert len(witness.forest.stars) == 20
    positions = service.path_positions(g1)
    assert positions[g1.vertex(1, GadgetRole.LEFT_OUT)] == 1
    assert service.depth_ordered_witness(g1, positions) == 20


def test_out_port_stars_point_into_their_segment(g1):
    positions = service.path_positions(g1)
    traced = service.to_traced(g1).pattern_graph()
    for node in range(1, g1.node_count + 1):
        left = positions[g1.vertex(node, GadgetRole.LEFT_OUT)]
        right = positions[g1.vertex(node, GadgetRole.RIGHT_OUT)]
        assert all(w > left for w in traced.neighbors(left))
        assert all(w < right for w in traced.neighbors(right))


def test_pattern_of_g2_is_a_constellation(g2):
    witness = service.pattern_is_constellation(g2)
    assert len(witness.forest.stars) == 764
    assert service.depth_ordered_witness(g2, service.path_positions(g2)) == 764


def test_g1_traced_golden(golden, g1):
    golden("G1.traced", write_edge_list(service.to_traced(g1)))


def test_g1_longest_induced_path_golden(golden, g1):
    golden("G1.longest-induced-path", f"{service.longest_induced_path_length(g1)}\n")


@pytest.mark.parametrize("height, pairs", [
    (2, ()),
    (2, ((1, 2),)),
    pytest.param(3, ((2, 3),), marks=pytest.mark.slow),
])
def test_induced_path_tables_agree_with_exhaustive_search(height, pairs):
    system = IntervalSystem(ell=1, intervals=tuple(Interval(i, j, 1) for i, j in pairs))
    graph = service.assemble_construction(height, system)
    length, witness, capped = ordered_service.longest_induced_path_oracle(service.to_traced(graph), cap=10_000)
    assert not capped
    assert service.longest_induced_path_length(graph) == length


@pytest.mark.slow
def test_g1_exhaustive_search_matches_the_tables(g1):
    length, witness, capped = ordered_service.longest_induced_path_oracle(service.to_traced(g1), cap=1000)
    assert not capped
    assert length == service.longest_induced_path_length(g1) == 60
    traced = service.to_traced(g1)
    index = {v: k for k, v in enumerate(witness)}
    assert all(
        abs(index[v] - index[w]) == 1 for v in witness for w in traced.neighbors(v) if w in index
    )


@pytest.mark.slow
def test_g2_has_no_long_induced_path(g1, g2):
    l1 = service.longest_induced_path_length(g1)
    l2 = service.longest_induced_path_length(g2)
    assert l2 <= 8 * l1
    assert l2 <= 0.05 * g2.vertex_count


def test_verify_report_for_ell_one():
    report = LowerboundUseCase().verify(1)
    assert report.passed
    assert report.vertices == 112
    names = [c.name for c in report.checks]
    assert "hamiltonian-path" in names and "constellation" in names


@pytest.mark.slow
def test_ell_three_construction():
    graph = service.build_construction(3)
    assert graph.vertex_count == 16 * (2 ** 18 - 1)
    assert graph.vertex_count >= 2 ** 8
    assert service.check_two_degenerate(graph) is not None
    path = service.ham_path(graph)
    assert service.depth_ordered_witness(graph, service.path_positions(graph)) > 0
    assert len(path) == graph.vertex_count
    assert service.validate_ham_path(graph, path) == []
