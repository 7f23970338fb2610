from collections import deque
import logging
import random
from typing import Iterable, Iterator, List, Optional, Sequence, Set, Tuple, Union

from lipaths._shared.models import Embedding, IncreasingInducedPath, OrderedGraph, TracedGraph
from lipaths.utils.exceptions import exception_2_INVALID_ARGUMENT


logger = logging.getLogger(__name__)

GraphType = Union[OrderedGraph, TracedGraph]


def _same_kind(graph: GraphType, n: int, edges: Iterable[Tuple[int, int]]) -> GraphType:
    cls = TracedGraph if isinstance(graph, TracedGraph) else OrderedGraph
    return cls(n=n, edges=frozenset(edges))


def concatenate(a: OrderedGraph, b: OrderedGraph) -> OrderedGraph:
    shifted = ((u + a.n, v + a.n) for u, v in b.edges)
    return OrderedGraph(n=a.n + b.n, edges=a.edges | frozenset(shifted))


def reverse(graph: GraphType) -> GraphType:
    """Inverte a ordem: i -> n + 1 - i (troca estrelas esquerdas e direitas)."""
    n = graph.n
    return _same_kind(graph, n, ((n + 1 - v, n + 1 - u) for u, v in graph.edges))


def slice_graph(graph: GraphType, a: int, b: int) -> GraphType:
    """G[a, b] reindexado para 1..b-a+1; arestas do caminho são mantidas."""
    if not 1 <= a <= b <= graph.n:
        raise exception_2_INVALID_ARGUMENT(f"slice [{a},{b}] outside [1,{graph.n}]")
    shift = a - 1
    kept = ((u - shift, v - shift) for u, v in graph.edges if a <= u and v <= b)
    return _same_kind(graph, b - a + 1, kept)


def is_one_sided(graph: OrderedGraph) -> bool:
    for v in range(1, graph.n + 1):
        nbrs = graph.neighbors(v)
        if nbrs and nbrs[0] < v < nbrs[-1]:
            return False
    return True


def has_crossing_edges(graph: OrderedGraph) -> Optional[Tuple[int, int, int, int]]:
    """Testemunha a < b < c < d com arestas ac e bd, ou None."""
    edges = graph.sorted_edges()
    for a, c in edges:
        for b, d in edges:
            if a < b < c < d:
                return a, b, c, d
    return None


def gen_path(n: int) -> TracedGraph:
    if n < 1:
        raise exception_2_INVALID_ARGUMENT(f"path needs n >= 1, got {n}")
    return TracedGraph(n=n, edges=frozenset((i, i + 1) for i in range(1, n)))


def gen_halfgraph(n: int) -> TracedGraph:
    """Caminho 1..n mais (i, j) com i ímpar, j par e i < j."""
    if n < 2:
        raise exception_2_INVALID_ARGUMENT(f"half-graph needs n >= 2, got {n}")
    edges = {(i, i + 1) for i in range(1, n)}
    edges.update((i, j) for i in range(1, n + 1, 2) for j in range(i + 1, n + 1, 2))
    return TracedGraph(n=n, edges=frozenset(edges))


def gen_random_traced(n: int, extra: int, seed: int) -> TracedGraph:
    """Caminho 1..n mais ``extra`` arestas de padrão sorteadas uniformemente."""
    if n < 2:
        raise exception_2_INVALID_ARGUMENT(f"random traced graph needs n >= 2, got {n}")
    available = (n - 1) * (n - 2) // 2
    if extra < 0 or extra > available:
        raise exception_2_INVALID_ARGUMENT(f"extra edges must lie in [0,{available}], got {extra}")
    rng = random.Random(seed)
    edges = {(i, i + 1) for i in range(1, n)}
    target = len(edges) + extra
    while len(edges) < target:
        u, v = sorted(rng.sample(range(1, n + 1), 2))
        if v - u >= 2:
            edges.add((u, v))
    return TracedGraph(n=n, edges=frozenset(edges))


def plant_pattern(pattern: OrderedGraph, n: int, positions: Sequence[int]) -> TracedGraph:
    """Caminho 1..n com as arestas de ``pattern`` levadas para ``positions``."""
    if len(positions) != pattern.n:
        raise exception_2_INVALID_ARGUMENT(f"need {pattern.n} positions, got {len(positions)}")
    Embedding(positions=tuple(positions), host_n=n)
    edges = {(i, i + 1) for i in range(1, n)}
    for u, v in pattern.edges:
        a, b = positions[u - 1], positions[v - 1]
        if b - a == 1:
            raise exception_2_INVALID_ARGUMENT(f"pattern edge ({u},{v}) would land on path edge ({a},{b})")
        edges.add((a, b))
    return TracedGraph(n=n, edges=frozenset(edges))


def contains_pattern(host: OrderedGraph, pattern: OrderedGraph, min_gap: int = 1) -> Optional[Embedding]:
    """
    Primeira injeção monótona (ordem lexicográfica) que leva cada aresta do
    padrão a uma aresta do hospedeiro com gap >= min_gap.
    """
    if pattern.n < 1:
        raise exception_2_INVALID_ARGUMENT("pattern must have at least one vertex")
    if min_gap < 1:
        raise exception_2_INVALID_ARGUMENT(f"min_gap must be >= 1, got {min_gap}")
    k = pattern.n
    # vizinhos anteriores de cada vértice do padrão
    earlier = [tuple(u for u in pattern.neighbors(i) if u < i) for i in range(k + 1)]
    positions = [0] * (k + 1)

    def candidates(i: int) -> Iterable[int]:
        lo = positions[i - 1] + min_gap if i > 1 else 1
        hi = host.n - (k - i) * min_gap
        if lo > hi:
            return ()
        if not earlier[i]:
            return range(lo, hi + 1)
        anchor = min(earlier[i], key=lambda u: host.degree(positions[u]))
        pool = [x for x in host.neighbors(positions[anchor]) if lo <= x <= hi]
        return [x for x in pool if all(host.has_edge(positions[u], x) for u in earlier[i])]

    def search(i: int) -> bool:
        if i > k:
            return True
        for x in candidates(i):
            positions[i] = x
            if search(i + 1):
                return True
        return False

    if search(1):
        return Embedding(positions=tuple(positions[1:]), host_n=host.n)
    return None


def validate_increasing_induced_path(graph: OrderedGraph, vertices: Sequence[int]) -> bool:
    if not vertices:
        return False
    if any(not 1 <= v <= graph.n for v in vertices):
        return False
    if any(a >= b for a, b in zip(vertices, vertices[1:])):
        return False
    index = {v: i for i, v in enumerate(vertices)}
    for i, v in enumerate(vertices):
        for w in graph.neighbors(v):
            j = index.get(w)
            if j is not None and abs(i - j) != 1:
                return False
    return all(graph.has_edge(a, b) for a, b in zip(vertices, vertices[1:]))


def as_path(vertices: Sequence[int]) -> IncreasingInducedPath:
    return IncreasingInducedPath(vertices=tuple(vertices))


def longest_induced_path_oracle(graph: OrderedGraph, cap: int) -> Tuple[int, List[int], bool]:
    """
    Busca exaustiva de caminhos induzidos (estendendo a cauda), truncada em
    ``cap``. Retorna (comprimento, testemunha lexicograficamente mínima, capped).
    """
    if cap < 1:
        raise exception_2_INVALID_ARGUMENT(f"cap must be >= 1, got {cap}")
    n = graph.n
    if n == 0:
        return 0, [], False
    adjacency = graph.adjacency
    # blocked[w] > 0: w é vizinho de um vértice do caminho que não é a cauda
    blocked = [0] * (n + 1)
    on_path = [False] * (n + 1)
    best: List[int] = [1]

    def reachable_bound(tail: int) -> int:
        seen: Set[int] = {tail}
        queue = deque([tail])
        while queue:
            v = queue.popleft()
            for w in adjacency[v]:
                if w not in seen and not on_path[w] and blocked[w] == 0:
                    seen.add(w)
                    queue.append(w)
        return len(seen) - 1

    def level(tail: int) -> Iterator[int]:
        # poda: nem todos os alcançáveis superariam o melhor caminho
        if len(path) + reachable_bound(tail) <= len(best):
            return iter(())
        return iter(adjacency[tail])

    for start in range(1, n + 1):
        path = [start]
        on_path[start] = True
        # pilha de iteradores sobre os candidatos de cada nível
        stack = [level(start)]
        while stack:
            if len(path) >= cap:
                logger.info("induced-path search reached cap=%d", cap)
                return cap, path[:cap], True
            tail = path[-1]
            advanced = False
            for w in stack[-1]:
                if on_path[w] or blocked[w]:
                    continue
                # tail deixa de ser cauda: seus vizinhos ficam bloqueados
                for x in adjacency[tail]:
                    blocked[x] += 1
                path.append(w)
                on_path[w] = True
                if len(path) > len(best):
                    best = list(path)
                stack.append(level(w))
                advanced = True
                break
            if advanced:
                continue
            stack.pop()
            last = path.pop()
            on_path[last] = False
            if path:
                for x in adjacency[path[-1]]:
                    blocked[x] -= 1
    return len(best), best, False
