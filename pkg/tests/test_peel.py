import math

from hypothesis import assume, given, settings, strategies as st
import pytest

from lipaths._shared.models import (
    P1,
    P2,
    P3,
    Anchor,
    ConstellationShape,
    Embedding,
    IncreasingInducedPath,
    OrderedGraph,
    PeelConfig,
    PeelTrace,
    ToyThresholds,
    TracedGraph,
)
from lipaths.constellation import service as constellation_service
from lipaths.ordered import service as ordered_service
from lipaths.peel import service
from lipaths.peel.service import Frame
from lipaths.utils.exceptions import LipathsException

from tests.conftest import traced_graphs


def toy(r: int) -> PeelConfig:
    return PeelConfig(r=r, quantitative=False, toy=ToyThresholds.logarithmic(r))


RIGHT_ONE_STAR = OrderedGraph.from_edges(2, [(1, 2)])
CROSSING = OrderedGraph.from_edges(4, [(1, 3), (2, 4)])


def test_frame_coordinates_round_trip():
    graph = ordered_service.gen_halfgraph(12)
    frame = Frame(graph, 3, 10, flipped=True)
    assert frame.size == 8
    assert [frame.to_local(frame.to_global(i)) for i in range(1, 9)] == list(range(1, 9))
    assert frame.to_global(1) == 10
    # 10 é vizinho de 3, 5, 7, 9 (e 11 fora da janela)
    assert frame.neighbors(1) == [2, 4, 6, 8]
    assert frame.pattern_neighbors(1) == [4, 6, 8]


def test_stretch_of_a_pattern_free_path():
    assert service.stretch(ordered_service.gen_path(10)) == (8, (2, 9))


def test_stretch_when_the_first_vertex_sees_everything():
    graph = TracedGraph.from_edges(5, [(1, j) for j in range(2, 6)] + [(i, i + 1) for i in range(2, 5)])
    assert service.stretch(graph)[0] == 1


def test_stretch_of_the_half_graph_takes_the_first_maximal_gap():
    assert service.stretch(ordered_service.gen_halfgraph(8)) == (2, (2, 3))


def test_stretch_needs_two_vertices():
    with pytest.raises(LipathsException) as error:
        service.stretch(ordered_service.gen_path(1))
    assert error.value.exit_code == 2


def test_stretch_path_on_a_pattern_free_path():
    path, held = service.stretch_path(ordered_service.gen_path(64), 2, 32)
    assert held
    assert len(path) >= 5
    assert path.vertices[:3] == (1, 2, 3)


def test_stretch_path_with_m_one_is_the_first_vertex():
    path, held = service.stretch_path(ordered_service.gen_path(64), 2, 1)
    assert path.vertices == (1,)
    assert held


@settings(max_examples=100, deadline=None)
@given(traced_graphs(max_n=60), st.integers(min_value=1, max_value=6), st.integers(min_value=1, max_value=40))
def test_stretch_path_is_always_an_increasing_induced_path(graph, s, m):
    path, _ = service.stretch_path(graph, s, m)
    assert path.vertices[0] == 1
    assert ordered_service.validate_increasing_induced_path(graph, path.vertices)


def test_validate_rejects_a_pattern_edge_on_the_path():
    graph = ordered_service.gen_halfgraph(8)
    outcome = P3(embedding=Embedding(positions=(1, 2), host_n=8), gap=1)
    assert not service.validate_outcome(graph, RIGHT_ONE_STAR, outcome)
    good = P3(embedding=Embedding(positions=(1, 4), host_n=8), gap=3)
    assert service.validate_outcome(graph, RIGHT_ONE_STAR, good)
    assert not service.validate_outcome(graph, RIGHT_ONE_STAR, good, claimed_gap=4)


def test_validate_checks_anchoring():
    graph = ordered_service.gen_path(6)
    single = P1(path=IncreasingInducedPath(vertices=(1,)), anchored=Anchor.START)
    assert service.validate_outcome(graph, RIGHT_ONE_STAR, single)
    shifted = P1(path=IncreasingInducedPath(vertices=(2, 3)), anchored=Anchor.START)
    assert not service.validate_outcome(graph, RIGHT_ONE_STAR, shifted)
    assert service.validate_outcome(graph, RIGHT_ONE_STAR, P2(path=shifted.path))
    ending = P1(path=IncreasingInducedPath(vertices=(5, 6)), anchored=Anchor.END)
    assert service.validate_outcome(graph, RIGHT_ONE_STAR, ending)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_validate_matches_a_direct_check_on_mutated_embeddings(data):
    pattern = CROSSING
    host = ordered_service.plant_pattern(pattern, 16, [2, 6, 10, 14])
    positions = list(data.draw(st.lists(st.integers(1, 16), min_size=4, max_size=4, unique=True)))
    positions.sort()
    embedding = Embedding(positions=tuple(positions), host_n=16)
    expected = all(
        positions[v - 1] - positions[u - 1] != 1 and host.has_edge(positions[u - 1], positions[v - 1])
        for u, v in pattern.edges
    )
    outcome = P3(embedding=embedding, gap=embedding.gap())
    assert service.validate_outcome(host, pattern, outcome) == expected


def test_quantitative_mode_short_circuits_at_desk_scale():
    trace = PeelTrace()
    outcome = service.peel(ordered_service.gen_path(10), RIGHT_ONE_STAR, PeelConfig(r=1), trace=trace)
    assert isinstance(outcome, P1)
    assert outcome.path.vertices == (1, 2)
    assert outcome.anchored == Anchor.START
    assert trace.short_circuits >= 1


def test_toy_base_case_walks_the_successor_chain():
    outcome = service.peel(ordered_service.gen_path(1024), RIGHT_ONE_STAR, toy(1))
    assert isinstance(outcome, P1)
    assert outcome.path.vertices[:4] == (1, 2, 3, 4)
    # log m / log 2r com m = 2^f(1024, 1, 0) = 2^5
    assert len(outcome.path) >= 5


@pytest.mark.parametrize("n", [2 ** e for e in range(6, 17)])
def test_toy_base_case_meets_the_successor_bound(n):
    outcome = service.peel(ordered_service.gen_path(n), RIGHT_ONE_STAR, toy(1))
    assert isinstance(outcome, P1)
    assert outcome.anchored == Anchor.START
    # s = 2r = 2 e m = 2^f com f = log2(n) / 2
    assert len(outcome.path) >= math.ceil(math.log2(n) / 2)
    assert outcome.path.vertices == tuple(range(1, len(outcome.path) + 1))


class _InnerEmbedsTightly(service.PeelService):
    """H^- sempre cai nos últimos vértices da janela do meio, com gap 1."""

    def _prop(self, frame, pattern, p, depth):
        if depth == 1:
            return super()._prop(frame, pattern, p, depth)
        positions = tuple(range(frame.size - pattern.n + 1, frame.size + 1))
        return P3(embedding=Embedding(positions=positions, host_n=frame.size), gap=1)


def test_right_case_successor_chain_stays_anchored_at_the_first_vertex():
    graph = ordered_service.gen_path(600)
    peeler = _InnerEmbedsTightly(toy(1))
    outcome = peeler._prop(Frame(graph, 1, graph.n), CROSSING, 0, 1)
    assert isinstance(outcome, P1)
    assert outcome.anchored == Anchor.START
    steps = peeler.trace.successor_steps
    assert steps >= 1
    # um vértice por passo, a partir do vértice 1 da janela inteira, e a cabeça final
    assert outcome.path.vertices == tuple(range(1, steps + 3))
    assert service.validate_outcome(graph, CROSSING, outcome)


def test_toy_base_case_finds_a_star_in_a_small_stretch_window():
    outcome = service.peel(ordered_service.gen_halfgraph(64), RIGHT_ONE_STAR, toy(1))
    assert isinstance(outcome, P3)
    assert outcome.embedding.positions[0] == 1
    assert outcome.gap == outcome.embedding.gap()


def test_left_constellations_anchor_at_the_last_vertex():
    pattern = OrderedGraph.from_edges(3, [(1, 3), (2, 3)])
    graph = ordered_service.gen_path(512)
    outcome = service.peel(graph, pattern, toy(2))
    assert isinstance(outcome, P1)
    assert outcome.anchored == Anchor.END
    assert outcome.path.vertices[-1] == 512


def test_crossing_matching_on_the_half_graph():
    graph = ordered_service.gen_halfgraph(1024)
    outcome = service.peel(graph, CROSSING, toy(1))
    assert service.validate_outcome(graph, CROSSING, outcome)


@pytest.mark.parametrize("shape", list(ConstellationShape))
def test_tr_constellations_on_a_random_host(shape):
    pattern = constellation_service.build_tr_constellation(3, 2, shape)
    graph = ordered_service.gen_random_traced(400, 4000, seed=3)
    trace = PeelTrace()
    outcome = service.peel(graph, pattern, toy(2), trace=trace)
    assert service.validate_outcome(graph, pattern, outcome)
    assert trace.max_depth <= 3 * 3 + 1


def test_peel_rejects_non_constellations():
    pattern = OrderedGraph.from_edges(6, [(2, 4), (2, 6), (1, 5), (3, 5)])
    with pytest.raises(LipathsException) as error:
        service.peel(ordered_service.gen_path(20), pattern, toy(2))
    assert error.value.exit_code == 2


def test_peel_rejects_mixed_arities_and_wrong_r():
    mixed = OrderedGraph.from_edges(5, [(1, 2), (3, 4), (3, 5)])
    with pytest.raises(LipathsException) as error:
        service.peel(ordered_service.gen_path(20), mixed, toy(1))
    assert "mixes" in error.value.detail
    with pytest.raises(LipathsException):
        service.peel(ordered_service.gen_path(20), RIGHT_ONE_STAR, toy(2))


def test_peel_rejects_isolated_pattern_vertices():
    pattern = OrderedGraph.from_edges(3, [(1, 2)])
    with pytest.raises(LipathsException):
        service.peel(ordered_service.gen_path(20), pattern, toy(1))


def _fuzz_case(draw):
    n = draw(st.integers(min_value=2, max_value=300))
    extra = draw(st.integers(min_value=0, max_value=min(4 * n, (n - 1) * (n - 2) // 2)))
    graph = ordered_service.gen_random_traced(n, extra, draw(st.integers(0, 2**31)))
    t = draw(st.integers(min_value=1, max_value=4))
    r = draw(st.integers(min_value=1, max_value=3))
    pattern = constellation_service.random_constellation(t, r, draw(st.integers(0, 2**31)))
    p = draw(st.integers(min_value=0, max_value=3))
    return graph, pattern, t, r, p


def _check_sound(graph, pattern, t, r, p):
    trace = PeelTrace()
    outcome = service.peel(graph, pattern, toy(r), p=p, trace=trace)
    assert service.validate_outcome(graph, pattern, outcome)
    assert trace.max_depth <= 3 * t + 1


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_toy_peel_is_sound_on_random_inputs(data):
    _check_sound(*_fuzz_case(data.draw))


@pytest.mark.slow
@settings(max_examples=10_000, deadline=None)
@given(st.data())
def test_toy_peel_is_sound_on_ten_thousand_random_inputs(data):
    _check_sound(*_fuzz_case(data.draw))


@pytest.mark.slow
@settings(max_examples=10_000, deadline=None)
@given(st.data())
def test_validate_matches_a_direct_check_on_mutated_constellation_embeddings(data):
    t = data.draw(st.integers(min_value=1, max_value=4))
    r = data.draw(st.integers(min_value=1, max_value=3))
    pattern = constellation_service.random_constellation(t, r, data.draw(st.integers(0, 2**31)))
    half = data.draw(st.integers(min_value=pattern.n, max_value=4 * pattern.n))
    n = 2 * half + 1
    slots = data.draw(st.lists(st.integers(1, half), min_size=pattern.n, max_size=pattern.n, unique=True))
    planted = [2 * x for x in sorted(slots)]
    host = ordered_service.plant_pattern(pattern, n, planted)

    positions = list(planted)
    k = data.draw(st.integers(min_value=0, max_value=pattern.n - 1))
    positions[k] += data.draw(st.integers(min_value=-2, max_value=2))
    assume(all(1 <= x <= n for x in positions))
    assume(all(a < b for a, b in zip(positions, positions[1:])))

    embedding = Embedding(positions=tuple(positions), host_n=n)
    expected = all(
        positions[v - 1] - positions[u - 1] != 1 and host.has_edge(positions[u - 1], positions[v - 1])
        for u, v in pattern.edges
    )
    outcome = P3(embedding=embedding, gap=embedding.gap())
    assert service.validate_outcome(host, pattern, outcome) == expected
    if positions == planted:
        assert expected
