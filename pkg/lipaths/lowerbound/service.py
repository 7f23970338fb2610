"""
Construção G_ell: árvore binária completa de profundidade h(ell), cada nó
trocado por um gadget de 16 vértices, arestas de árvore entre conectores e
out-ports dos filhos, e ribs de out-ports para in-ports de descendentes
conforme o sistema de intervalos N_ell.

Vértices são inteiros 0-based v = (node - 1) * 16 + role; a numeração dos
nós é a de heap (raiz 1, filhos 2s e 2s + 1).
"""
from array import array
from bisect import bisect_left
from collections import Counter, deque
from itertools import product
import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from lipaths._shared.models import (
    CHAINS,
    ROLES_PER_GADGET,
    ConstructionGraph,
    ConstellationWitness,
    Edge,
    GadgetRole,
    Interval,
    IntervalSystem,
    OrderedGraph,
    TracedGraph,
)
from lipaths.constellation import service as constellation_service
from lipaths.utils.exceptions import exception_1_PROPERTY_VIOLATION, exception_2_INVALID_ARGUMENT
from lipaths.utils.settings import LOWERBOUND_MAX_ELL


logger = logging.getLogger(__name__)

R = GadgetRole

GADGET_EDGES: Tuple[Tuple[GadgetRole, GadgetRole], ...] = (
    (R.LEFT_OUT, R.LEFT_TOP),
    (R.LEFT_OUT, R.RIGHT_TOP),
    (R.RIGHT_OUT, R.RIGHT_TOP),
    (R.RIGHT_OUT, R.LEFT_TOP),
    *((a, b) for a, b, _ in CHAINS),
    *((b, c) for _, b, c in CHAINS),
    (R.LEFT_TOP, R.NWSW_A),
    (R.RIGHT_TOP, R.NESE_A),
    (R.NWSW_C, R.SSW_C),
    (R.SSE_C, R.NESE_C),
    (R.SSW_A, R.SSE_A),
)

# (conector do pai, out-port do filho) para o filho esquerdo e o direito
LEFT_CHILD_EDGES = ((R.SSW_C, R.RIGHT_OUT), (R.NWSW_C, R.LEFT_OUT))
RIGHT_CHILD_EDGES = ((R.SSE_C, R.LEFT_OUT), (R.NESE_C, R.RIGHT_OUT))

CONNECTOR_PAIRS = ((R.NWSW_C, R.SSW_C), (R.SSE_C, R.NESE_C))


def h_fn(ell: int) -> int:
    if ell < 1:
        raise exception_2_INVALID_ARGUMENT(f"h(ell) needs ell >= 1, got {ell}")
    return 5 * 2 ** (ell - 1) - 2


def _rank_of_length(length: int, ell: int) -> Optional[int]:
    for a in range(1, ell + 1):
        if h_fn(a) == length:
            return a
    return None


def build_intervals(ell: int) -> IntervalSystem:
    if ell < 1:
        raise exception_2_INVALID_ARGUMENT(f"N_ell needs ell >= 1, got {ell}")
    pairs: List[Tuple[int, int]] = [(1, 3)]
    for level in range(2, ell + 1):
        shift = h_fn(level - 1) + 1
        pairs = (
            [(1, h_fn(level))]
            + [(i + 1, j + 1) for i, j in pairs]
            + [(i + shift, j + shift) for i, j in pairs]
        )
    intervals = tuple(
        Interval(i=i, j=j, rank=_rank_of_length(j - i + 1, ell))
        for i, j in sorted(pairs)
    )
    return IntervalSystem(ell=ell, intervals=intervals)


def check_interval_system(system: IntervalSystem) -> List[str]:
    """Violações das três propriedades (extremos distintos, sem cruzamento, forma (i, i+h(a)-1))."""
    problems: List[str] = []
    top = h_fn(system.ell)
    endpoints = [x for interval in system.intervals for x in (interval.i, interval.j)]
    if len(set(endpoints)) != len(endpoints):
        problems.append("endpoints are not pairwise distinct")
    if any(not 1 <= x <= top for x in endpoints):
        problems.append(f"endpoint outside [1,{top}]")
    pairs = system.pairs()
    for a, (i, j) in enumerate(pairs):
        for i2, j2 in pairs[a + 1:]:
            if i < i2 < j < j2:
                problems.append(f"intervals ({i},{j}) and ({i2},{j2}) cross")
    for interval in system.intervals:
        rank = interval.rank
        if rank is None or not 1 <= rank <= system.ell or interval.j != interval.i + h_fn(rank) - 1:
            problems.append(f"interval ({interval.i},{interval.j}) has no valid rank")
    return problems


def _v(node: int, role: GadgetRole) -> int:
    return (node - 1) * ROLES_PER_GADGET + role


def iter_edges(ell: int, height: int, system: IntervalSystem) -> Iterator[Tuple[int, int, bool]]:
    """(u, v, é_rib) para todas as arestas, cada uma uma vez."""
    node_count = (1 << height) - 1
    for s in range(1, node_count + 1):
        for a, b in GADGET_EDGES:
            yield _v(s, a), _v(s, b), False
        if 2 * s <= node_count:
            for conn, port in LEFT_CHILD_EDGES:
                yield _v(s, conn), _v(2 * s, port), False
            for conn, port in RIGHT_CHILD_EDGES:
                yield _v(s, conn), _v(2 * s + 1, port), False
    for interval in system.intervals:
        i, j = interval.i, interval.j
        for s in range(1 << (i - 1), 1 << i):
            for t in range(s << (j - i), (s + 1) << (j - i)):
                for in_a, in_b, _ in CHAINS:
                    yield _v(s, R.RIGHT_OUT), _v(t, in_b), True
                    yield _v(s, R.LEFT_OUT), _v(t, in_a), True


def build_construction(ell: int) -> ConstructionGraph:
    if not 1 <= ell <= LOWERBOUND_MAX_ELL:
        raise exception_2_INVALID_ARGUMENT(f"ell must lie in [1,{LOWERBOUND_MAX_ELL}], got {ell}")
    return assemble_construction(h_fn(ell), build_intervals(ell))


def assemble_construction(height: int, system: IntervalSystem) -> ConstructionGraph:
    """Árvore de gadgets de profundidade ``height`` com as ribs de ``system``."""
    ell = system.ell
    vertex_count = ROLES_PER_GADGET * ((1 << height) - 1)

    # CSR em duas passadas: graus, depois alvos
    degree = array("i", bytes(4 * (vertex_count + 1)))
    edge_count = rib_count = 0
    for u, v, rib in iter_edges(ell, height, system):
        degree[u] += 1
        degree[v] += 1
        edge_count += 1
        rib_count += rib
    offsets = array("i", bytes(4 * (vertex_count + 1)))
    for v in range(vertex_count):
        offsets[v + 1] = offsets[v] + degree[v]
    fill = array("i", offsets)
    targets = array("i", bytes(4 * offsets[vertex_count]))
    for u, v, _ in iter_edges(ell, height, system):
        targets[fill[u]] = v
        fill[u] += 1
        targets[fill[v]] = u
        fill[v] += 1
    for v in range(vertex_count):
        lo, hi = offsets[v], offsets[v + 1]
        targets[lo:hi] = array("i", sorted(targets[lo:hi]))

    logger.info("built G_%d: %d vertices, %d edges, %d ribs", ell, vertex_count, edge_count, rib_count)
    return ConstructionGraph(
        ell=ell, height=height, intervals=system, offsets=offsets, targets=targets,
        edge_count=edge_count, rib_count=rib_count,
    )


def has_edge(graph: ConstructionGraph, u: int, v: int) -> bool:
    lo, hi = graph.offsets[u], graph.offsets[u + 1]
    k = bisect_left(graph.targets, v, lo, hi)
    return k < hi and graph.targets[k] == v


def _comparable(a: int, b: int) -> bool:
    if a > b:
        a, b = b, a
    return b >> (b.bit_length() - a.bit_length()) == a


def is_rib(graph: ConstructionGraph, u: int, v: int) -> bool:
    if graph.node_of(u) == graph.node_of(v):
        return False
    return graph.role_of(u).is_in_port or graph.role_of(v).is_in_port


def check_edge_order(graph: ConstructionGraph) -> List[str]:
    """Toda aresta liga nós comparáveis; na mesma profundidade, o mesmo gadget."""
    problems: List[str] = []
    for u in range(graph.vertex_count):
        a = graph.node_of(u)
        for v in graph.neighbors(u):
            b = graph.node_of(v)
            if not _comparable(a, b):
                problems.append(f"edge ({u},{v}) joins incomparable nodes {a} and {b}")
            elif a != b and a.bit_length() == b.bit_length():
                problems.append(f"edge ({u},{v}) joins distinct gadgets at depth {a.bit_length()}")
            if len(problems) >= 10:
                return problems
    return problems


def check_preimages(graph: ConstructionGraph) -> bool:
    counts = [0] * (graph.node_count + 1)
    for v in range(graph.vertex_count):
        counts[graph.node_of(v)] += 1
    return all(c == ROLES_PER_GADGET for c in counts[1:])


def _gadget_order(graph: ConstructionGraph, s: int) -> List[int]:
    """Sequência local do gadget s; -c marca a excursão pelo filho c."""
    leaf = 2 * s > graph.node_count
    head = [_v(s, x) for x in (R.LEFT_OUT, R.LEFT_TOP, R.NWSW_A, R.NWSW_B, R.NWSW_C)]
    bottom = [_v(s, x) for x in (R.SSW_C, R.SSW_B, R.SSW_A, R.SSE_A, R.SSE_B, R.SSE_C)]
    tail = [_v(s, x) for x in (R.NESE_C, R.NESE_B, R.NESE_A, R.RIGHT_TOP, R.RIGHT_OUT)]
    if leaf:
        return head + bottom + tail
    return head + [-2 * s] + bottom + [-(2 * s + 1)] + tail


def build_ham_path(graph: ConstructionGraph) -> array:
    path = array("i")
    stack = [-1]
    while stack:
        item = stack.pop()
        if item >= 0:
            path.append(item)
            continue
        stack.extend(reversed(_gadget_order(graph, -item)))
    return path


def validate_ham_path(graph: ConstructionGraph, path: Sequence[int]) -> List[str]:
    problems: List[str] = []
    if len(path) != graph.vertex_count:
        problems.append(f"path has {len(path)} vertices, expected {graph.vertex_count}")
    seen = bytearray(graph.vertex_count)
    for v in path:
        if seen[v]:
            problems.append(f"vertex {v} visited twice")
            break
        seen[v] = 1
    if path and (path[0] != _v(1, R.LEFT_OUT) or path[-1] != _v(1, R.RIGHT_OUT)):
        problems.append("path does not run from the root left out-port to the root right out-port")
    for u, v in zip(path, path[1:]):
        if not has_edge(graph, u, v):
            problems.append(f"consecutive vertices {u} and {v} are not adjacent")
            break
        if is_rib(graph, u, v):
            problems.append(f"path uses rib ({u},{v})")
            break
    return problems


def ham_path(graph: ConstructionGraph) -> array:
    if graph.ham_path is None:
        path = build_ham_path(graph)
        problems = validate_ham_path(graph, path)
        if problems:
            raise exception_1_PROPERTY_VIOLATION(f"canonical Hamiltonian path is invalid: {problems[0]}")
        graph.ham_path = path
        logger.info("validated the rib-free Hamiltonian path of G_%d", graph.ell)
    return graph.ham_path


def path_positions(graph: ConstructionGraph) -> array:
    """positions[v] = posição 1-based de v no caminho hamiltoniano."""
    positions = array("i", bytes(4 * graph.vertex_count))
    for index, v in enumerate(ham_path(graph), start=1):
        positions[v] = index
    return positions


def iter_graph_edges(graph: ConstructionGraph, traced: bool = False) -> Iterator[Edge]:
    """Arestas 1-based (u < v): ids + 1, ou posições no caminho quando ``traced``."""
    label = path_positions(graph) if traced else None
    for u in range(graph.vertex_count):
        for v in graph.neighbors(u):
            if u < v:
                a, b = (label[u], label[v]) if traced else (u + 1, v + 1)
                yield (a, b) if a < b else (b, a)


def to_traced(graph: ConstructionGraph) -> TracedGraph:
    return TracedGraph(n=graph.vertex_count, edges=frozenset(iter_graph_edges(graph, traced=True)))


def check_two_degenerate(graph: Union[OrderedGraph, ConstructionGraph]) -> Optional[List[int]]:
    """Ordem de eliminação com grau <= 2 na remoção, ou None."""
    if isinstance(graph, ConstructionGraph):
        ids = range(graph.vertex_count)
        neighbors = graph.neighbors
        size = graph.vertex_count
    else:
        ids = range(1, graph.n + 1)
        neighbors = graph.neighbors
        size = graph.n + 1

    degree = array("i", bytes(4 * size))
    for v in ids:
        degree[v] = len(neighbors(v))
    removed = bytearray(size)
    queue = deque(v for v in ids if degree[v] <= 2)
    order: List[int] = []
    while queue:
        v = queue.popleft()
        if removed[v]:
            continue
        removed[v] = 1
        order.append(v)
        for w in neighbors(v):
            if not removed[w]:
                degree[w] -= 1
                if degree[w] == 2:
                    queue.append(w)
    if len(order) != len(ids):
        logger.debug("2-degeneracy fails with %d vertices left", len(ids) - len(order))
        return None
    return order


def sources(graph: ConstructionGraph) -> Dict[int, int]:
    """Profundidade -> rank, para as profundidades que abrem um intervalo de N_ell."""
    return {interval.i: interval.rank for interval in graph.intervals.intervals}


def _pattern_neighbors(graph: ConstructionGraph, v: int, positions: Sequence[int]) -> List[int]:
    return [w for w in graph.neighbors(v) if abs(positions[w] - positions[v]) != 1]


def depth_ordered_witness(graph: ConstructionGraph, positions: Sequence[int]) -> int:
    """
    Estrelas de out-port e 1-estrelas de conectores de G - E(P), ordenadas
    pela profundidade do centro; devolve quantas estrelas foram checadas.
    """
    centers: List[int] = []
    spans: List[Tuple[int, int]] = []
    covered = 0
    for s in range(1, graph.node_count + 1):
        for port in (R.LEFT_OUT, R.RIGHT_OUT):
            v = _v(s, port)
            leaves = [positions[w] for w in _pattern_neighbors(graph, v, positions)]
            if not leaves:
                raise exception_1_PROPERTY_VIOLATION(f"out-port {v} has no pattern edge")
            covered += len(leaves)
            centers.append(positions[v])
            spans.append((min(leaves + [positions[v]]), max(leaves + [positions[v]])))
        if 2 * s <= graph.node_count:
            for a, b in CONNECTOR_PAIRS:
                x, y = sorted((positions[_v(s, a)], positions[_v(s, b)]))
                covered += 1
                centers.append(x)
                spans.append((x, y))

    pattern_edges = graph.edge_count - (graph.vertex_count - 1)
    if covered != pattern_edges:
        raise exception_1_PROPERTY_VIOLATION(
            f"stars cover {covered} pattern edges, G - E(P) has {pattern_edges}"
        )
    if not constellation_service.verify_star_order_sweep(centers, spans, graph.vertex_count):
        raise exception_1_PROPERTY_VIOLATION("depth order of the stars violates the star order")
    return len(centers)


def pattern_is_constellation(graph: ConstructionGraph) -> ConstellationWitness:
    traced = to_traced(graph)
    witness = constellation_service.is_constellation(traced.pattern_graph())
    if witness is None or not constellation_service.verify_star_order(witness):
        raise exception_1_PROPERTY_VIOLATION(f"G_{graph.ell} - E(P) is not recognized as a constellation")
    logger.info("G_%d - E(P) is a constellation with %d stars", graph.ell, len(witness.forest.stars))
    return witness


# --- caminho induzido mais longo ---------------------------------------------
#
# Programação dinâmica sobre a árvore de gadgets. A tabela de uma subárvore
# resume S ∩ subárvore (S = vértices do caminho) pelos segmentos que ela deixa:
# cada segmento é um trecho do caminho cujas pontas são FREE (extremo do
# caminho) ou arestas forçadas para fora da subárvore (conector do pai ou hub
# de um ancestral). Como toda aresta entre vértices de S é do caminho, basta
# decidir S; as arestas vêm junto. Subárvores da mesma profundidade são
# isomorfas, então cada profundidade tem uma tabela só.

FREE, UP_LEFT, UP_RIGHT = -1, -2, -3
_TOKEN = 100
_IN_A = frozenset(a for a, _, _ in CHAINS)
_IN_B = frozenset(b for _, b, _ in CHAINS)

# ordem de varredura do gadget; cada filho entra depois dos seus dois conectores
_SWEEP: Tuple[Union[GadgetRole, str], ...] = (
    R.LEFT_OUT, R.RIGHT_OUT, R.LEFT_TOP, R.RIGHT_TOP, R.NWSW_A, R.NWSW_B, R.NWSW_C, R.SSW_C,
    "left", R.SSW_B, R.SSW_A, R.SSE_A, R.SSE_B, R.SSE_C, R.NESE_C,
    "right", R.NESE_B, R.NESE_A,
)
_CHILD_PORTS = {
    "left": {UP_LEFT if port == R.LEFT_OUT else UP_RIGHT: conn for conn, port in LEFT_CHILD_EDGES},
    "right": {UP_LEFT if port == R.LEFT_OUT else UP_RIGHT: conn for conn, port in RIGHT_CHILD_EDGES},
}

Segments = Tuple[Tuple[int, int], ...]
Assumption = Tuple[int, ...]
DepthTable = Dict[Assumption, Dict[Segments, int]]


def _hub_label(depth: int, port: GadgetRole) -> int:
    return -(10 + 2 * depth + port)


def _relevant_hubs(system: IntervalSystem, depth: int) -> List[Tuple[int, GadgetRole]]:
    """Hubs de ancestrais com ribs dentro de uma subárvore enraizada em ``depth``."""
    return [
        (iv.i, port)
        for iv in sorted(system.intervals, key=lambda iv: iv.i)
        if iv.i < depth <= iv.j
        for port in (R.LEFT_OUT, R.RIGHT_OUT)
    ]


def _find(segs: List[List[int]], end: int) -> int:
    for k, seg in enumerate(segs):
        if seg[0] == end or seg[1] == end:
            return k
    return -1


def _join(deg: Dict[int, int], segs: List[List[int]], x: int, y: int) -> bool:
    """Aresta entre as pontas x e y; falha em grau 3 ou ciclo."""
    if deg.get(x) == 2 or deg.get(y) == 2:
        return False
    kx, ky = _find(segs, x), _find(segs, y)
    if kx < 0 or ky < 0 or kx == ky:
        return False
    a = segs[kx][1] if segs[kx][0] == x else segs[kx][0]
    b = segs[ky][1] if segs[ky][0] == y else segs[ky][0]
    for k in sorted((kx, ky), reverse=True):
        del segs[k]
    segs.append([a, b])
    for end in (x, y):
        if end in deg:
            deg[end] += 1
    return True


def _attach(deg: Dict[int, int], segs: List[List[int]], x: int, label: int) -> bool:
    """Aresta de x para fora da subárvore."""
    if deg[x] == 2:
        return False
    seg = segs[_find(segs, x)]
    seg[0 if seg[0] == x else 1] = label
    deg[x] += 1
    return True


def _forget(deg: Dict[int, int], segs: List[List[int]], x: int) -> None:
    if x not in deg:
        return
    if deg.pop(x) < 2:
        for seg in segs:
            for side in (0, 1):
                if seg[side] == x:
                    seg[side] = FREE


def _normal(deg: Dict[int, int], segs: List[List[int]]) -> Optional[Tuple[Tuple[Tuple[int, int], ...], Segments]]:
    ends = Counter(end for seg in segs for end in seg)
    if ends[FREE] > 2 or any(count > 2 for end, count in ends.items() if end <= -10):
        return None
    for a, b in segs:
        if a == b and a <= -10:
            return None
        if a == b == FREE and len(segs) > 1:
            return None
    members = tuple(sorted(deg.items()))
    return members, tuple(sorted((min(a, b), max(a, b)) for a, b in segs))


def _depth_table(system: IntervalSystem, height: int, depth: int, child: Optional[DepthTable]) -> DepthTable:
    leaf = depth == height
    hubs = _relevant_hubs(system, depth)
    child_hubs = _relevant_hubs(system, depth + 1)
    closing = [iv.i for iv in system.intervals if iv.j == depth]
    source = any(iv.i == depth for iv in system.intervals)
    steps = [x for x in _SWEEP if not (leaf and isinstance(x, str))]
    index = {x: k for k, x in enumerate(steps)}

    adjacency: Dict[GadgetRole, List[GadgetRole]] = {role: [] for role in R}
    for a, b in GADGET_EDGES:
        adjacency[a].append(b)
        adjacency[b].append(a)
    last: Dict[int, List[GadgetRole]] = {}
    for role in R:
        k = max([index[role]] + [index[y] for y in adjacency[role]])
        if not leaf:
            if role in _CHILD_PORTS["left"].values():
                k = max(k, index["left"])
            if role in _CHILD_PORTS["right"].values():
                k = max(k, index["right"])
            if source and role in (R.LEFT_OUT, R.RIGHT_OUT):
                k = max(k, index["right"])
        last.setdefault(k, []).append(role)

    ups = [(0, 0)] if depth == 1 else list(product((0, 1), repeat=2))
    states: Dict[Tuple, int] = {
        (bits + up, (), ()): 0 for bits in product((0, 1), repeat=len(hubs)) for up in ups
    }

    def emit(out: Dict[Tuple, int], bits: Assumption, deg, segs, count: int, k: int) -> None:
        for role in last.get(k, ()):
            _forget(deg, segs, role)
        key = _normal(deg, segs)
        if key is None:
            return
        state = (bits, *key)
        if out.get(state, -1) < count:
            out[state] = count

    for k, step in enumerate(steps):
        out: Dict[Tuple, int] = {}
        for (bits, members, segs), count in states.items():
            if isinstance(step, str):
                ports = _CHILD_PORTS[step]
                deg = dict(members)
                child_bits = tuple(
                    int(port in deg) if i == depth else bits[hubs.index((i, port))]
                    for i, port in child_hubs
                ) + (int(ports[UP_LEFT] in deg), int(ports[UP_RIGHT] in deg))
                resolve = {label: conn for label, conn in ports.items()}
                resolve[_hub_label(depth, R.LEFT_OUT)] = R.LEFT_OUT
                resolve[_hub_label(depth, R.RIGHT_OUT)] = R.RIGHT_OUT
                for child_segs, child_count in child[child_bits].items():
                    deg = dict(members)
                    merged = [list(seg) for seg in segs]
                    pending: List[Tuple[int, int]] = []
                    for seg in child_segs:
                        ends = []
                        for end in seg:
                            if end in resolve:
                                token = _TOKEN + len(pending)
                                pending.append((token, resolve[end]))
                                end = token
                            ends.append(end)
                        merged.append(ends)
                    if all(_join(deg, merged, token, role) for token, role in pending):
                        emit(out, bits, deg, merged, count + child_count, k)
                continue

            # step fora de S
            emit(out, bits, dict(members), [list(seg) for seg in segs], count, k)
            if (FREE, FREE) in segs:
                continue
            deg = dict(members)
            merged = [list(seg) for seg in segs]
            deg[step] = 0
            merged.append([step, step])
            ok = all(_join(deg, merged, step, y) for y in adjacency[step] if y in deg)
            up_left, up_right = bits[-2], bits[-1]
            if ok and step == R.LEFT_OUT and up_left:
                ok = _attach(deg, merged, step, UP_LEFT)
            if ok and step == R.RIGHT_OUT and up_right:
                ok = _attach(deg, merged, step, UP_RIGHT)
            port = R.LEFT_OUT if step in _IN_A else R.RIGHT_OUT if step in _IN_B else None
            for i in closing:
                if ok and port is not None and bits[hubs.index((i, port))]:
                    ok = _attach(deg, merged, step, _hub_label(i, port))
            if ok:
                emit(out, bits, deg, merged, count + 1, k)
        states = out
        logger.debug("depth %d step %d: %d states", depth, k, len(states))

    table: DepthTable = {}
    for (bits, members, segs), count in states.items():
        entry = table.setdefault(bits, {})
        if entry.get(segs, -1) < count:
            entry[segs] = count
    return table


def longest_induced_path_length(graph: ConstructionGraph) -> int:
    """
    L(G) exato. Usa só a forma da construção (altura e intervalos), não a
    CSR; o teste contra a busca exaustiva em G_1 amarra as duas.
    """
    table: Optional[DepthTable] = None
    for depth in range(graph.height, 0, -1):
        table = _depth_table(graph.intervals, graph.height, depth, table)
        logger.info("induced-path table for depth %d has %d entries", depth, sum(map(len, table.values())))
    length = table[(0, 0)].get(((FREE, FREE),), 0)
    logger.info("longest induced path of G_%d has %d vertices", graph.ell, length)
    return length
