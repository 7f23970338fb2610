import os
from pathlib import Path
from typing import Callable

from hypothesis import strategies as st
from hypothesis.strategies import DrawFn, composite
import pytest

from lipaths._shared.models import OrderedGraph, TracedGraph
from lipaths.constellation import service as constellation_service


GOLDEN_DIR = Path(__file__).parent / "golden"


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run tests marked slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def golden() -> Callable[[str, str], None]:
    """Compara com tests/golden/<name>; só grava (e pula) com LIPATHS_UPDATE_GOLDEN=1."""

    def check(name: str, text: str) -> None:
        path = GOLDEN_DIR / name
        if os.environ.get("LIPATHS_UPDATE_GOLDEN") == "1":
            path.write_text(text, encoding="utf-8")
            pytest.skip(f"recorded golden file {name}")
        if not path.exists():
            pytest.fail(f"golden file {name} is missing; rerun with LIPATHS_UPDATE_GOLDEN=1 to record it")
        assert text == path.read_text(encoding="utf-8")

    return check


@composite
def ordered_graphs(draw: DrawFn, min_n: int = 1, max_n: int = 8) -> OrderedGraph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return OrderedGraph(n=n, edges=frozenset(edges))


@composite
def traced_graphs(draw: DrawFn, min_n: int = 2, max_n: int = 40) -> TracedGraph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 2, n + 1)]
    extra = draw(st.sets(st.sampled_from(pairs), max_size=3 * n)) if pairs else set()
    path = {(i, i + 1) for i in range(1, n)}
    return TracedGraph(n=n, edges=frozenset(path | extra))


@composite
def constellations(draw: DrawFn, max_t: int = 4, max_r: int = 3) -> OrderedGraph:
    t = draw(st.integers(min_value=1, max_value=max_t))
    r = draw(st.integers(min_value=1, max_value=max_r))
    seed = draw(st.integers(min_value=0, max_value=2**31))
    return constellation_service.random_constellation(t, r, seed)


@composite
def star_forests(draw: DrawFn, min_n: int = 2, max_n: int = 14) -> OrderedGraph:
    """Floresta de estrelas ordenada qualquer (não necessariamente constelação)."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    order = draw(st.permutations(list(range(1, n + 1))))
    edges = []
    k = 0
    while k + 1 < n:
        size = draw(st.integers(min_value=2, max_value=min(4, n - k)))
        block = order[k:k + size]
        center = draw(st.sampled_from(block))
        edges.extend((center, leaf) for leaf in block if leaf != center)
        k += size
    return OrderedGraph.from_edges(n, edges)


@composite
def perfect_matchings(draw: DrawFn, max_pairs: int = 8) -> OrderedGraph:
    pairs = draw(st.integers(min_value=1, max_value=max_pairs))
    order = draw(st.permutations(list(range(1, 2 * pairs + 1))))
    return OrderedGraph.from_edges(2 * pairs, [(order[k], order[k + 1]) for k in range(0, 2 * pairs, 2)])
