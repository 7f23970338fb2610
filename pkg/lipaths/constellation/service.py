from functools import lru_cache
import heapq
import logging
import random
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from lipaths._shared.models import (
    ConstellationShape,
    ConstellationWitness,
    Embedding,
    OrderedGraph,
    Orientation,
    OrientedStar,
    StarForest,
    TracedGraph,
)
from lipaths.utils.exceptions import exception_1_PROPERTY_VIOLATION, exception_2_INVALID_ARGUMENT


logger = logging.getLogger(__name__)


def decompose_star_forest(graph: OrderedGraph) -> Optional[StarForest]:
    """Estrelas orientadas de ``graph`` ou None; 1-estrelas saem como Right."""
    stars: List[OrientedStar] = []
    for v in range(1, graph.n + 1):
        nbrs = graph.neighbors(v)
        if len(nbrs) >= 2:
            if any(graph.degree(w) != 1 for w in nbrs):
                return None
            if nbrs[0] > v:
                orientation = Orientation.RIGHT
            elif nbrs[-1] < v:
                orientation = Orientation.LEFT
            else:
                return None
            stars.append(OrientedStar(center=v, leaves=nbrs, orientation=orientation))
        elif len(nbrs) == 1 and nbrs[0] > v and graph.degree(nbrs[0]) == 1:
            stars.append(OrientedStar(center=v, leaves=nbrs, orientation=Orientation.RIGHT))
    return StarForest(n=graph.n, stars=tuple(stars))


def star_arity(forest: StarForest) -> Optional[int]:
    arities = {s.r for s in forest.stars}
    return arities.pop() if len(arities) == 1 else None


def _inside(c: int, star: OrientedStar) -> bool:
    lo, hi = star.span
    return lo < c < hi


def order_stars(forest: StarForest) -> Optional[ConstellationWitness]:
    """
    Ordena as estrelas de modo que cada centro anterior fique fora de toda
    estrela posterior. Uma estrela pode ir primeiro quando algum centro
    candidato seu não está dentro do span de outra estrela restante; as
    1-estrelas têm os dois extremos como candidatos.
    """
    stars = forest.stars
    t = len(stars)
    candidates = [
        (s.center,) if s.r >= 2 else (s.center, s.leaves[0])
        for s in stars
    ]
    # blockers[k][c]: quantas estrelas restantes contêm o candidato c de k
    blockers: List[List[int]] = [[0] * len(c) for c in candidates]
    for k in range(t):
        for idx, c in enumerate(candidates[k]):
            blockers[k][idx] = sum(1 for x in range(t) if x != k and _inside(c, stars[x]))

    remaining = set(range(t))
    ready = [k for k in range(t) if 0 in blockers[k]]
    heapq.heapify(ready)
    order: List[int] = []
    chosen: Dict[int, OrientedStar] = {}
    while ready:
        k = heapq.heappop(ready)
        if k not in remaining:
            continue
        idx = blockers[k].index(0)
        star = stars[k] if idx == 0 else stars[k].flipped()
        remaining.discard(k)
        order.append(k)
        chosen[k] = star
        for y in remaining:
            became_ready = False
            for jdx, c in enumerate(candidates[y]):
                if _inside(c, stars[k]):
                    blockers[y][jdx] -= 1
                    became_ready = became_ready or blockers[y][jdx] == 0
            if became_ready:
                heapq.heappush(ready, y)
    if remaining:
        logger.debug("no star can go first among %d remaining stars", len(remaining))
        return None
    oriented = StarForest(n=forest.n, stars=tuple(chosen[k] for k in range(t)))
    return ConstellationWitness(forest=oriented, star_order=tuple(order))


def is_constellation(graph: OrderedGraph) -> Optional[ConstellationWitness]:
    forest = decompose_star_forest(graph)
    if forest is None:
        return None
    return order_stars(forest)


def verify_star_order(witness: ConstellationWitness) -> bool:
    """Checagem par a par da ordem: centro de S_i fora de S_j para i < j."""
    ordered = witness.ordered_stars()
    if sorted(witness.star_order) != list(range(len(witness.forest.stars))):
        return False
    seen = set()
    for star in ordered:
        if seen.intersection(star.vertices):
            return False
        seen.update(star.vertices)
    for i, earlier in enumerate(ordered):
        for later in ordered[i + 1:]:
            if _inside(earlier.center, later):
                return False
    return True


class _Fenwick:
    def __init__(self, size: int):
        self.size = size
        self.tree = [0] * (size + 1)

    def add(self, i: int) -> None:
        while i <= self.size:
            self.tree[i] += 1
            i += i & -i

    def prefix(self, i: int) -> int:
        total = 0
        while i > 0:
            total += self.tree[i]
            i -= i & -i
        return total


def verify_star_order_sweep(centers: Sequence[int], spans: Sequence[Tuple[int, int]], n: int) -> bool:
    """
    Mesma checagem em O(t log n): processando na ordem, nenhum centro já
    inserido pode cair dentro do span da estrela atual.
    """
    fenwick = _Fenwick(n)
    for center, (lo, hi) in zip(centers, spans):
        if hi - lo >= 2 and fenwick.prefix(hi - 1) - fenwick.prefix(lo) > 0:
            return False
        fenwick.add(center)
    return True


def is_constellation_inductive(graph: OrderedGraph) -> bool:
    """Recursão direta na definição indutiva, com memo por subconjunto de estrelas."""
    forest = decompose_star_forest(graph)
    if forest is None:
        return False
    stars = forest.stars
    owner = {v: k for k, s in enumerate(stars) for v in s.vertices}

    @lru_cache(maxsize=None)
    def accepts(subset: FrozenSet[int]) -> bool:
        if len(subset) <= 1:
            return True
        first = min(stars[k].span[0] for k in subset)
        last = max(stars[k].span[1] for k in subset)
        head, tail = stars[owner[first]], stars[owner[last]]
        if (head.center == first or head.r == 1) and accepts(subset - {owner[first]}):
            return True
        if (tail.center == last or tail.r == 1) and accepts(subset - {owner[last]}):
            return True
        by_start = sorted(subset, key=lambda k: stars[k].span[0])
        reach = 0
        for cut in range(1, len(by_start)):
            reach = max(reach, stars[by_start[cut - 1]].span[1])
            if reach < stars[by_start[cut]].span[0]:
                if accepts(frozenset(by_start[:cut])) and accepts(frozenset(by_start[cut:])):
                    return True
        return False

    return accepts(frozenset(range(len(stars))))


def build_tr_constellation(t: int, r: int, shape: ConstellationShape) -> OrderedGraph:
    if t < 1 or r < 1:
        raise exception_2_INVALID_ARGUMENT(f"(t, r) must be positive, got ({t}, {r})")
    if shape == ConstellationShape.SEQUENTIAL:
        edges = [
            (b * (r + 1) + 1, b * (r + 1) + 1 + k)
            for b in range(t) for k in range(1, r + 1)
        ]
    else:
        edges = [(c, t + (c - 1) * r + k) for c in range(1, t + 1) for k in range(1, r + 1)]
    return OrderedGraph.from_edges(t * (r + 1), edges)


def topminor_leaf_positions(t: int) -> Dict[Tuple[int, int], int]:
    """Posição de cada folha l_{i,j}: pares i < j em ordem lexicográfica."""
    positions: Dict[Tuple[int, int], int] = {}
    nxt = t + 1
    for i in range(1, t + 1):
        for j in range(i + 1, t + 1):
            positions[(i, j)] = nxt
            positions[(j, i)] = nxt + 1
            nxt += 2
    return positions


def build_topminor_pattern(t: int) -> OrderedGraph:
    if t < 2:
        raise exception_2_INVALID_ARGUMENT(f"topological-minor pattern needs t >= 2, got {t}")
    leaves = topminor_leaf_positions(t)
    return OrderedGraph.from_edges(t * t, ((i, pos) for (i, _), pos in leaves.items()))


def embeds_in_pattern_graph(host: TracedGraph, pattern: OrderedGraph, embedding: Embedding) -> bool:
    """Cada aresta do padrão cai numa aresta de G - E(P)."""
    if len(embedding.positions) != pattern.n or embedding.host_n != host.n:
        return False
    a = embedding.positions
    for u, v in pattern.edges:
        x, y = a[u - 1], a[v - 1]
        if y - x == 1 or not host.has_edge(x, y):
            return False
    return True


def subdivision_certificate(host: TracedGraph, embedding: Embedding, t: int) -> List[List[int]]:
    """
    Caminhos P_{i,j} = c_i, l_{i,j}, ..., l_{j,i}, c_j (subcaminho de P entre
    as folhas) certificando K_t como menor topológico.
    """
    pattern = build_topminor_pattern(t)
    if not embeds_in_pattern_graph(host, pattern, embedding):
        raise exception_2_INVALID_ARGUMENT("embedding does not realize the topological-minor pattern")
    a = embedding.positions
    leaves = topminor_leaf_positions(t)
    paths: List[List[int]] = []
    for i in range(1, t + 1):
        for j in range(i + 1, t + 1):
            first, second = a[leaves[(i, j)] - 1], a[leaves[(j, i)] - 1]
            paths.append([a[i - 1]] + list(range(first, second + 1)) + [a[j - 1]])

    branch = set(a[:t])
    used = set()
    subdivision = nx.Graph()
    for path in paths:
        inner = path[1:-1]
        if used.intersection(inner) or branch.intersection(inner):
            raise exception_1_PROPERTY_VIOLATION(f"path {path} is not internally disjoint")
        used.update(inner)
        for x, y in zip(path, path[1:]):
            if not host.has_edge(x, y):
                raise exception_1_PROPERTY_VIOLATION(f"path {path} uses non-edge ({x},{y})")
            subdivision.add_edge(x, y)

    # suaviza os vértices internos e compara com K_t
    smoothed = nx.Graph()
    smoothed.add_nodes_from(branch)
    smoothed.add_edges_from((path[0], path[-1]) for path in paths)
    degrees_ok = all(subdivision.degree(v) == (t - 1 if v in branch else 2) for v in subdivision.nodes)
    if not degrees_ok or not nx.is_isomorphic(smoothed, nx.complete_graph(t)):
        raise exception_1_PROPERTY_VIOLATION("paths do not form a subdivision of K_t")
    logger.debug("certified K_%d topological minor with %d paths", t, len(paths))
    return paths


def random_constellation(t: int, r: int, seed: int) -> OrderedGraph:
    """(t, r)-constelação aleatória montada pelas três regras indutivas."""
    if t < 1 or r < 1:
        raise exception_2_INVALID_ARGUMENT(f"(t, r) must be positive, got ({t}, {r})")
    rng = random.Random(seed)
    counter = iter(range(t))

    # cada token é (id da estrela, é_centro)
    def build(size: int) -> List[Tuple[int, bool]]:
        rule = rng.choice(("right", "left", "concat") if size >= 2 else ("right", "left"))
        if rule == "concat":
            left = rng.randint(1, size - 1)
            return build(left) + build(size - left)
        star = next(counter)
        rest = build(size - 1) if size >= 2 else []
        for _ in range(r):
            rest.insert(rng.randint(0, len(rest)), (star, False))
        if rule == "right":
            return [(star, True)] + rest
        return rest + [(star, True)]

    tokens = build(t)
    centers = {sid: pos for pos, (sid, is_center) in enumerate(tokens, start=1) if is_center}
    edges = [(centers[sid], pos) for pos, (sid, is_center) in enumerate(tokens, start=1) if not is_center]
    return OrderedGraph.from_edges(len(tokens), edges)
