"""
Algoritmo de descascamento: dado um grafo traçado G e uma (t, r)-constelação
H, devolve um caminho induzido crescente (P1/P2) ou uma cópia de H em
G - E(P) (P3), sempre com certificado verificável.

A recursão trabalha sobre ``Frame``s: janelas [lo, hi] do caminho,
possivelmente espelhadas. Cada chamada devolve o resultado nas coordenadas
locais do frame recebido.
"""
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from lipaths._shared.models import (
    P1,
    P2,
    P3,
    Anchor,
    BoundContext,
    Embedding,
    IncreasingInducedPath,
    OrderedGraph,
    OrientedStar,
    PeelConfig,
    PeelTrace,
    PropOutcome,
    TracedGraph,
)
from lipaths.bounds import service as bounds_service
from lipaths.constellation import service as constellation_service
from lipaths.ordered import service as ordered_service
from lipaths.utils.bigreal import big, log_base, lower, precision, upper
from lipaths.utils.exceptions import exception_1_PROPERTY_VIOLATION, exception_2_INVALID_ARGUMENT


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Frame:
    graph: TracedGraph
    lo: int
    hi: int
    flipped: bool = False

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def to_global(self, i: int) -> int:
        return self.hi - i + 1 if self.flipped else self.lo + i - 1

    def to_local(self, v: int) -> int:
        return self.hi - v + 1 if self.flipped else v - self.lo + 1

    def neighbors(self, i: int) -> List[int]:
        adjacency = self.graph.neighbors(self.to_global(i))
        window = adjacency[bisect_left(adjacency, self.lo):bisect_right(adjacency, self.hi)]
        return sorted(self.to_local(w) for w in window)

    def pattern_neighbors(self, i: int) -> List[int]:
        return [x for x in self.neighbors(i) if abs(x - i) != 1]

    def sub(self, a: int, b: int) -> "Frame":
        if self.flipped:
            return Frame(self.graph, self.hi - b + 1, self.hi - a + 1, True)
        return Frame(self.graph, self.lo + a - 1, self.lo + b - 1, False)

    def flip(self) -> "Frame":
        return Frame(self.graph, self.lo, self.hi, not self.flipped)


def window_stretch(frame: Frame) -> Tuple[int, int, int]:
    """(stretch, a, b): stretch do frame e sua janela sucessora [a, b] local."""
    n = frame.size
    if n < 2:
        raise exception_2_INVALID_ARGUMENT(f"stretch needs n >= 2, got {n}")
    # a_0 = 1 e a_{d+1} = n
    a = [1] + frame.neighbors(1) + [n]
    gaps = [a[i + 1] - a[i] for i in range(len(a) - 1)]
    value = max(gaps[1:])
    best = gaps.index(max(gaps))
    return value, a[best], a[best + 1] - 1


def stretch(graph: TracedGraph) -> Tuple[int, Tuple[int, int]]:
    value, a, b = window_stretch(Frame(graph, 1, graph.n))
    return value, (a, b)


def _successor_chain(frame: Frame, m: float, s: int):
    """
    Itera sucessores enquanto |janela| > n/m; produz (janela, stretch,
    sucessor) de cada passo.
    """
    n = frame.size
    current = frame
    while current.size >= 2 and current.size * m > n:
        value, a, b = window_stretch(current)
        yield current, value, (a, b)
        if a == 1:
            # sucessor [1, 1]: o primeiro vértice não tem para onde avançar
            return
        current = current.sub(a, b)


def stretch_path(graph: TracedGraph, s: int, m: float) -> Tuple[IncreasingInducedPath, bool]:
    """
    Caminho dos primeiros vértices da cadeia de sucessores e se todo passo
    teve stretch >= |janela| / s (a hipótese que garante log m / log s vértices).
    """
    if s < 1 or m < 1:
        raise exception_2_INVALID_ARGUMENT(f"stretch path needs s, m >= 1, got s={s} m={m}")
    frame = Frame(graph, 1, graph.n)
    path = [1]
    held = True
    for window, value, (a, b) in _successor_chain(frame, m, s):
        if value * s < window.size:
            held = False
        if a > 1:
            path.append(frame.to_local(window.to_global(a)))
    return IncreasingInducedPath(vertices=tuple(path)), held


def _path_outcome(vertices: Sequence[int], anchored: Optional[Anchor]) -> PropOutcome:
    path = IncreasingInducedPath(vertices=tuple(vertices))
    if anchored is None:
        return P2(path=path)
    return P1(path=path, anchored=anchored)


def _embedding_outcome(positions: Sequence[int], host_n: int) -> P3:
    embedding = Embedding(positions=tuple(positions), host_n=host_n)
    return P3(embedding=embedding, gap=embedding.gap())


def _lift(outcome: PropOutcome, child: Frame, parent: Frame) -> PropOutcome:
    """Leva o resultado das coordenadas de ``child`` para as de ``parent``."""
    convert = lambda i: parent.to_local(child.to_global(i))  # noqa: E731
    mirrored = child.flipped != parent.flipped
    if isinstance(outcome, P3):
        positions = [convert(i) for i in outcome.embedding.positions]
        if mirrored:
            positions.reverse()
        return _embedding_outcome(positions, parent.size)
    vertices = [convert(i) for i in outcome.path.vertices]
    if mirrored:
        vertices.reverse()
    if isinstance(outcome, P1):
        anchored = outcome.anchored
        if mirrored:
            anchored = Anchor.END if anchored == Anchor.START else Anchor.START
        return P1(path=IncreasingInducedPath(vertices=tuple(vertices)), anchored=anchored)
    return P2(path=IncreasingInducedPath(vertices=tuple(vertices)))


def _as_p2(outcome: PropOutcome) -> P2:
    return P2(path=outcome.path)


def _head(frame: Frame) -> List[int]:
    return [1, 2] if frame.size >= 2 else [1]


def _drop_star(pattern: OrderedGraph, star: OrientedStar) -> Tuple[OrderedGraph, List[int]]:
    """H - S e a lista (ordenada) dos vértices de H que sobraram."""
    removed = set(star.vertices)
    keep = [v for v in range(1, pattern.n + 1) if v not in removed]
    index = {v: i for i, v in enumerate(keep, start=1)}
    edges = [(index[u], index[v]) for u, v in pattern.edges if u in index]
    return OrderedGraph.from_edges(len(keep), edges), keep


def _split(pattern: OrderedGraph, stars: Sequence[OrientedStar]) -> Optional[int]:
    """Menor corte c tal que H = H[1, c] . H[c+1, k] separa estrelas inteiras."""
    reach = 0
    for star in sorted(stars, key=lambda s: s.span[0]):
        if reach and star.span[0] > reach:
            return reach
        reach = max(reach, star.span[1])
    return None


def _leaf_in_blocks(frame: Frame, x: int, y: int, count: int, block: int) -> Optional[List[int]]:
    """
    ``count`` vizinhos de padrão do primeiro vértice em (x, y), um em cada
    bloco ímpar [x + 1 + j*block, x + (j+1)*block], j = 1, 3, ...
    """
    if count == 0:
        return []
    if x + 2 * count * block >= y:
        return None
    nbrs = frame.pattern_neighbors(1)
    chosen = []
    for j in range(1, 2 * count, 2):
        lo, hi = x + 1 + j * block, x + (j + 1) * block
        k = bisect_left(nbrs, lo)
        if k == len(nbrs) or nbrs[k] > hi:
            return None
        chosen.append(nbrs[k])
    return chosen


def validate_outcome(graph: TracedGraph, pattern: OrderedGraph, outcome: PropOutcome, claimed_gap: int = 1) -> bool:
    """Certificado de P1/P2 (caminho induzido crescente) ou de P3 (cópia de H em G - E(P))."""
    if isinstance(outcome, (P1, P2)):
        vertices = outcome.path.vertices
        if not ordered_service.validate_increasing_induced_path(graph, vertices):
            return False
        if isinstance(outcome, P1):
            if outcome.anchored == Anchor.START and vertices[0] != 1:
                return False
            if outcome.anchored == Anchor.END and vertices[-1] != graph.n:
                return False
        return True
    embedding = outcome.embedding
    if embedding.host_n != graph.n or len(embedding.positions) != pattern.n:
        return False
    if not constellation_service.embeds_in_pattern_graph(graph, pattern, embedding):
        return False
    return outcome.gap <= embedding.gap() and outcome.gap >= claimed_gap


class PeelService:

    def __init__(self, config: PeelConfig, trace: Optional[PeelTrace] = None):
        self.config = config
        self.trace = trace or PeelTrace()
        self.params = config.params

    # --- limiares --------------------------------------------------------

    def _f(self, n: int, t: int, p: int) -> float:
        if not self.config.quantitative:
            return self.config.toy.f(n, t, p)
        value = bounds_service.f_val(self._context(n), t, p)
        return float(upper(value))

    def _context(self, n: int) -> BoundContext:
        return BoundContext(r=self.config.r, params=self.params, ell=log_base(big(n), self.config.r + 1))

    def _short_circuit(self, n: int, t: int, p: int) -> bool:
        """Limiar de p grande ou de n pequeno: P1 vale com qualquer aresta do primeiro vértice."""
        if n < 3:
            return True
        if not self.config.quantitative:
            toy = self.config.toy
            return p >= 2 * toy.f(n, t, 0) or toy.f(n, t, p) < 2
        ctx = self._context(n)
        if lower(2 * bounds_service.f_val(ctx, t, 0)) <= p:
            return True
        return lower(ctx.ell) < upper(bounds_service.bounds_threshold(self.params, t, p))

    # --- recursão --------------------------------------------------------

    def peel(self, graph: TracedGraph, pattern: OrderedGraph, p: int = 0) -> PropOutcome:
        if p < 0:
            raise exception_2_INVALID_ARGUMENT(f"p must be >= 0, got {p}")
        if graph.n < 1:
            raise exception_2_INVALID_ARGUMENT("host graph is empty")
        forest = constellation_service.decompose_star_forest(pattern)
        if forest is None or constellation_service.order_stars(forest) is None:
            raise exception_2_INVALID_ARGUMENT("pattern is not a constellation")
        if not forest.stars or any(pattern.degree(v) == 0 for v in range(1, pattern.n + 1)):
            raise exception_2_INVALID_ARGUMENT("pattern has isolated vertices")
        arity = constellation_service.star_arity(forest)
        if arity is None:
            raise exception_2_INVALID_ARGUMENT("pattern mixes star arities")
        if arity != self.config.r:
            raise exception_2_INVALID_ARGUMENT(f"pattern has {arity}-stars but r={self.config.r}")

        with precision():
            if self.config.quantitative and self.params is None:
                self.params = bounds_service.default_params()
            outcome = self._prop(Frame(graph, 1, graph.n), pattern, p, 1)

        if not validate_outcome(graph, pattern, outcome):
            raise exception_1_PROPERTY_VIOLATION(f"peel produced an invalid {outcome.kind} certificate")
        logger.info("peel on n=%d finished with %s after %d calls", graph.n, outcome.kind, self.trace.calls)
        return outcome

    def _prop(self, frame: Frame, pattern: OrderedGraph, p: int, depth: int) -> PropOutcome:
        self.trace.calls += 1
        self.trace.max_depth = max(self.trace.max_depth, depth)
        stars = constellation_service.decompose_star_forest(pattern).stars
        owner = {v: s for s in stars for v in s.vertices}
        head, tail = owner[1], owner[pattern.n]
        right = head.center == 1 or head.r == 1
        left = tail.center == pattern.n or tail.r == 1

        if len(stars) == 1 and right:
            return self._base(frame, p)
        if right:
            return self._right(frame, pattern, stars, head, p, depth)
        if left:
            logger.debug("depth %d: left constellation, mirroring the frame", depth)
            child = frame.flip()
            outcome = self._prop(child, ordered_service.reverse(pattern), p, depth + 1)
            return _lift(outcome, child, frame)
        return self._concatenation(frame, pattern, stars, p, depth)

    def _short_path(self, frame: Frame, prefix: Sequence[int] = ()) -> P1:
        self.trace.short_circuits += 1
        return P1(path=IncreasingInducedPath(vertices=tuple(prefix) + tuple(_head(frame))), anchored=Anchor.START)

    def _base(self, frame: Frame, p: int) -> PropOutcome:
        """t = 1: cadeia de sucessores com s = 2r e m = (2r)^f(n, 1, p)."""
        n, r = frame.size, self.config.r
        if self._short_circuit(n, 1, p):
            return self._short_path(frame)
        self.trace.base_cases += 1
        s = 2 * r
        m = float(s) ** min(self._f(n, 1, p), 64.0)
        path = [1]
        for window, value, (a, b) in _successor_chain(frame, m, s):
            w = window.size
            if value * s < w:
                leaves = []
                for k in range(1, r + 1):
                    lo = max(1 + -(-(2 * k - 1) * w // s), 3)
                    hi = -(-(2 * k) * w // s)
                    nbrs = [x for x in window.pattern_neighbors(1) if lo <= x <= hi]
                    if not nbrs:
                        break
                    leaves.append(nbrs[0])
                if len(leaves) == r:
                    positions = [frame.to_local(window.to_global(i)) for i in [1] + leaves]
                    logger.debug("base case: star found in window of size %d", w)
                    return _embedding_outcome(positions, n)
            if a > 1:
                path.append(frame.to_local(window.to_global(a)))
        return _path_outcome(path, Anchor.START)

    def _right(
        self, frame: Frame, pattern: OrderedGraph, stars: Sequence[OrientedStar],
        head: OrientedStar, p: int, depth: int,
    ) -> PropOutcome:
        """Centro da primeira estrela no primeiro vértice: H^- no terço do meio, depois sucessores."""
        t, r = len(stars), self.config.r
        star = head if head.center == 1 else head.flipped()
        reduced, keep = _drop_star(pattern, star)
        # região (entre vértices de H^-) de cada folha da primeira estrela
        regions: Dict[int, int] = {}
        for leaf in star.leaves:
            g = bisect_left(keep, leaf)
            regions[g] = regions.get(g, 0) + 1

        prefix: List[int] = []
        current = frame
        while True:
            n = current.size
            if self._short_circuit(n, t, p):
                self.trace.short_circuits += 1
                return self._anchored(prefix, current, frame)
            mid = current.sub(n // 3, -(-2 * n // 3))
            inner = self._prop(mid, reduced, p, depth + 1)
            if not isinstance(inner, P3):
                return _as_p2(_lift(inner, mid, frame))

            minus = [current.to_local(mid.to_global(i)) for i in inner.embedding.positions]
            block = (inner.gap - 1) // (2 * r + 1)
            assembled = self._assemble(current, minus, regions, block) if block >= 1 and minus[0] > 1 else None
            if assembled is not None:
                positions = [None] * pattern.n
                positions[0] = 1
                for u, x in zip(keep, minus):
                    positions[u - 1] = x
                for leaf, x in zip(sorted(star.leaves), assembled):
                    positions[leaf - 1] = x
                lifted = [frame.to_local(current.to_global(i)) for i in positions]
                logger.debug("depth %d: first star attached around H^- with block %d", depth, block)
                return _embedding_outcome(lifted, frame.size)

            _, a, b = window_stretch(current)
            if a == 1:
                self.trace.fallbacks += 1
                return self._anchored(prefix, current, frame)
            self.trace.successor_steps += 1
            prefix.append(frame.to_local(current.to_global(1)))
            current = current.sub(a, b)
            p += 1

    def _anchored(self, prefix: Sequence[int], current: Frame, frame: Frame) -> P1:
        tail = [frame.to_local(current.to_global(i)) for i in _head(current)]
        return P1(path=IncreasingInducedPath(vertices=tuple(prefix) + tuple(tail)), anchored=Anchor.START)

    def _assemble(self, frame: Frame, minus: Sequence[int], regions: Dict[int, int], block: int) -> Optional[List[int]]:
        bounds = [1] + list(minus) + [frame.size + 1]
        chosen: List[int] = []
        for g in sorted(regions):
            leaves = _leaf_in_blocks(frame, bounds[g], bounds[g + 1], regions[g], block)
            if leaves is None:
                return None
            chosen.extend(leaves)
        return chosen

    def _concatenation(
        self, frame: Frame, pattern: OrderedGraph, stars: Sequence[OrientedStar], p: int, depth: int,
    ) -> PropOutcome:
        n = frame.size
        cut = _split(pattern, stars)
        if cut is None:
            raise exception_2_INVALID_ARGUMENT("pattern is not a constellation")
        if n < 3:
            self.trace.fallbacks += 1
            return _path_outcome(_head(frame), None)
        self.trace.concatenations += 1
        first, second = frame.sub(1, -(-n // 3)), frame.sub(2 * n // 3, n)
        parts = (
            (first, ordered_service.slice_graph(pattern, 1, cut)),
            (second, ordered_service.slice_graph(pattern, cut + 1, pattern.n)),
        )
        positions: List[int] = []
        for window, part in parts:
            outcome = self._prop(window, part, p, depth + 1)
            if not isinstance(outcome, P3):
                return _as_p2(_lift(outcome, window, frame))
            positions.extend(_lift(outcome, window, frame).embedding.positions)
        if any(x >= y for x, y in zip(positions, positions[1:])):
            # janelas de frames minúsculos se tocam; cai para um caminho trivial
            self.trace.fallbacks += 1
            return _path_outcome(_head(frame), None)
        return _embedding_outcome(positions, n)


def peel(graph: TracedGraph, pattern: OrderedGraph, config: PeelConfig, p: int = 0,
         trace: Optional[PeelTrace] = None) -> PropOutcome:
    return PeelService(config, trace).peel(graph, pattern, p)
