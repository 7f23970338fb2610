from itertools import combinations

from hypothesis import given, settings, strategies as st
import pytest

from lipaths._shared.models import Embedding, OrderedGraph, TracedGraph
from lipaths.constellation import service as constellation_service
from lipaths.ordered import service
from lipaths.utils.exceptions import LipathsException
from lipaths.utils.graph_io import parse_edge_list, write_edge_list

from tests.conftest import ordered_graphs, traced_graphs


def test_reverse_is_an_involution_on_a_fixed_graph():
    graph = OrderedGraph.from_edges(5, [(1, 3), (2, 5), (4, 5)])
    assert service.reverse(graph).edges == frozenset({(3, 5), (1, 4), (1, 2)})
    assert service.reverse(service.reverse(graph)) == graph


@given(ordered_graphs(max_n=10))
def test_reverse_twice_is_identity(graph):
    assert service.reverse(service.reverse(graph)) == graph


def test_reverse_keeps_traced_graphs_traced():
    graph = service.gen_halfgraph(6)
    assert isinstance(service.reverse(graph), TracedGraph)


def test_slice_reindexes_and_keeps_path_edges():
    graph = service.gen_halfgraph(8)
    piece = service.slice_graph(graph, 3, 6)
    assert piece.n == 4
    assert isinstance(piece, TracedGraph)
    # (3,4) (3,6) (5,6) (4,5) in the original
    assert piece.edges == frozenset({(1, 2), (2, 3), (3, 4), (1, 4)})


def test_slice_outside_the_graph_is_rejected():
    with pytest.raises(LipathsException) as error:
        service.slice_graph(service.gen_path(4), 2, 5)
    assert error.value.exit_code == 2


def test_concatenate_shifts_the_second_graph():
    a = OrderedGraph.from_edges(2, [(1, 2)])
    b = OrderedGraph.from_edges(3, [(1, 3)])
    assert service.concatenate(a, b).edges == frozenset({(1, 2), (3, 5)})


@given(ordered_graphs(max_n=10), ordered_graphs(max_n=10))
def test_concatenate_adds_sizes_and_splits_back(a, b):
    joined = service.concatenate(a, b)
    assert joined.n == a.n + b.n
    assert joined.m == a.m + b.m
    assert service.slice_graph(joined, 1, a.n) == a
    assert service.slice_graph(joined, a.n + 1, joined.n) == b


@given(st.data())
def test_slice_of_a_slice_is_a_slice(data):
    graph = data.draw(ordered_graphs(max_n=10))
    a = data.draw(st.integers(1, graph.n))
    b = data.draw(st.integers(a, graph.n))
    c = data.draw(st.integers(1, b - a + 1))
    d = data.draw(st.integers(c, b - a + 1))
    inner = service.slice_graph(service.slice_graph(graph, a, b), c, d)
    assert inner == service.slice_graph(graph, a + c - 1, a + d - 1)


@given(st.data())
def test_slice_preserves_adjacency_inside_the_window(data):
    graph = data.draw(ordered_graphs(max_n=10))
    a = data.draw(st.integers(1, graph.n))
    b = data.draw(st.integers(a, graph.n))
    piece = service.slice_graph(graph, a, b)
    for u, v in combinations(range(a, b + 1), 2):
        assert piece.has_edge(u - a + 1, v - a + 1) == graph.has_edge(u, v)


def test_pattern_graph_drops_path_edges_only():
    graph = service.gen_halfgraph(6)
    pattern = graph.pattern_graph()
    assert pattern.edges == frozenset({(1, 4), (1, 6), (3, 6)})
    assert pattern.m == graph.m - (graph.n - 1)


def test_crossing_matching_is_reported():
    graph = OrderedGraph.from_edges(4, [(1, 3), (2, 4)])
    assert service.has_crossing_edges(graph) == (1, 2, 3, 4)
    assert service.has_crossing_edges(OrderedGraph.from_edges(4, [(1, 4), (2, 3)])) is None


def test_one_sided_detection():
    assert service.is_one_sided(OrderedGraph.from_edges(4, [(1, 3), (1, 4)]))
    assert not service.is_one_sided(OrderedGraph.from_edges(3, [(1, 2), (2, 3)]))


@pytest.mark.parametrize("n", range(2, 21))
def test_halfgraph_pattern_is_one_sided(n):
    assert service.is_one_sided(service.gen_halfgraph(n).pattern_graph())


def test_embedding_gap_convention():
    assert Embedding(positions=(2, 5, 7), host_n=9).gap() == 2
    assert Embedding(positions=(4,), host_n=9).gap() == 9
    with pytest.raises(LipathsException):
        Embedding(positions=(3, 3), host_n=9)


def test_contains_pattern_finds_a_planted_copy():
    pattern = OrderedGraph.from_edges(4, [(1, 3), (2, 4)])
    host = service.plant_pattern(pattern, 12, [2, 5, 8, 11])
    embedding = service.contains_pattern(host.pattern_graph(), pattern)
    assert embedding is not None
    assert constellation_service.embeds_in_pattern_graph(host, pattern, embedding)


def test_contains_pattern_honours_min_gap():
    pattern = OrderedGraph.from_edges(2, [(1, 2)])
    host = OrderedGraph.from_edges(6, [(1, 2), (3, 6)])
    assert service.contains_pattern(host, pattern, min_gap=2).positions == (3, 6)
    assert service.contains_pattern(host, pattern, min_gap=4) is None


def _first_embedding(host, pattern, min_gap):
    for positions in combinations(range(1, host.n + 1), pattern.n):
        if any(y - x < min_gap for x, y in zip(positions, positions[1:])):
            continue
        if all(host.has_edge(positions[u - 1], positions[v - 1]) for u, v in pattern.edges):
            return positions
    return None


@settings(max_examples=300, deadline=None)
@given(ordered_graphs(max_n=10), ordered_graphs(max_n=4), st.integers(min_value=1, max_value=3))
def test_contains_pattern_agrees_with_brute_force(host, pattern, min_gap):
    embedding = service.contains_pattern(host, pattern, min_gap=min_gap)
    expected = _first_embedding(host, pattern, min_gap)
    assert (embedding.positions if embedding else None) == expected


def test_plant_pattern_refuses_path_edges():
    pattern = OrderedGraph.from_edges(2, [(1, 2)])
    with pytest.raises(LipathsException):
        service.plant_pattern(pattern, 5, [2, 3])


def test_path_validator():
    graph = service.gen_halfgraph(8)
    assert service.validate_increasing_induced_path(graph, [2, 3])
    assert service.validate_increasing_induced_path(graph, [1, 2])
    # 1 is adjacent to 4
    assert not service.validate_increasing_induced_path(graph, [1, 2, 3, 4])
    assert not service.validate_increasing_induced_path(graph, [3, 2])
    assert not service.validate_increasing_induced_path(graph, [])


@pytest.mark.parametrize("n", [8, 9, 16, 24, 32])
def test_halfgraph_longest_induced_path_is_four(n):
    length, witness, capped = service.longest_induced_path_oracle(service.gen_halfgraph(n), cap=100)
    assert (length, capped) == (4, False)
    assert len(witness) == 4


@pytest.mark.slow
@pytest.mark.parametrize("n", [48, 64])
def test_halfgraph_longest_induced_path_is_four_on_larger_hosts(n):
    length, _, capped = service.longest_induced_path_oracle(service.gen_halfgraph(n), cap=100)
    assert (length, capped) == (4, False)


def test_oracle_on_a_pattern_free_path_and_the_cap():
    assert service.longest_induced_path_oracle(service.gen_path(7), cap=100)[0] == 7
    length, witness, capped = service.longest_induced_path_oracle(service.gen_path(30), cap=5)
    assert (length, capped) == (5, True)
    assert len(witness) == 5


@settings(max_examples=50, deadline=None)
@given(traced_graphs(max_n=12))
def test_oracle_finds_at_least_the_first_path_edge(graph):
    length, _, capped = service.longest_induced_path_oracle(graph, cap=100)
    assert not capped
    # o caminho 1, 2 é sempre induzido num grafo traçado
    assert length >= 2


def test_random_traced_is_deterministic_per_seed():
    a = service.gen_random_traced(30, 40, seed=7)
    b = service.gen_random_traced(30, 40, seed=7)
    assert a == b
    assert a.m == 29 + 40


def test_random_traced_rejects_too_many_edges():
    with pytest.raises(LipathsException):
        service.gen_random_traced(4, 4, seed=0)


@given(traced_graphs(max_n=20))
def test_edge_list_write_then_read(graph):
    assert parse_edge_list(write_edge_list(graph), traced=True) == graph


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 1\n1 x\n", 2),
        ("3 1\n2 1\n", 2),
        ("# header\n3 2\n1 2\n1 2\n", 4),
        ("3\n", 1),
    ],
)
def test_malformed_edge_lists_report_the_line(text, line):
    with pytest.raises(LipathsException) as error:
        parse_edge_list(text)
    assert error.value.exit_code == 2
    assert error.value.detail.startswith(f"line {line}:")


def test_traced_input_needs_every_path_edge():
    with pytest.raises(LipathsException) as error:
        parse_edge_list("3 1\n1 2\n", traced=True)
    assert "path edge (2,3)" in error.value.detail
