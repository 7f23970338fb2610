from array import array
from dataclasses import dataclass, field
from enum import Enum as PyEnum, IntEnum
from functools import cached_property
import logging
import math
from typing import Callable, ClassVar, FrozenSet, Iterable, List, Optional, Tuple, Union

from mpmath import iv

from lipaths.utils.exceptions import exception_2_INVALID_ARGUMENT


logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


class Orientation(str, PyEnum):
    LEFT = "L"
    RIGHT = "R"


class Anchor(str, PyEnum):
    START = "start"
    END = "end"


class ConstellationShape(str, PyEnum):
    NESTED = "nested"
    SEQUENTIAL = "sequential"


class FixtureKind(str, PyEnum):
    HALFGRAPH = "halfgraph"
    PATH = "path"
    RANDOM = "random"
    CONSTELLATION = "constellation"
    RANDOM_CONSTELLATION = "random-constellation"
    TOPMINOR = "topminor"
    TOPMINOR_HOST = "topminor-host"


def get_orientations() -> List[str]:
    return [Orientation.LEFT.value, Orientation.RIGHT.value]


class GadgetRole(IntEnum):
    LEFT_OUT = 0
    RIGHT_OUT = 1
    LEFT_TOP = 2
    RIGHT_TOP = 3
    NWSW_A = 4
    NWSW_B = 5
    NWSW_C = 6
    SSW_A = 7
    SSW_B = 8
    SSW_C = 9
    SSE_A = 10
    SSE_B = 11
    SSE_C = 12
    NESE_A = 13
    NESE_B = 14
    NESE_C = 15

    @property
    def is_out_port(self) -> bool:
        return self in (GadgetRole.LEFT_OUT, GadgetRole.RIGHT_OUT)

    @property
    def is_in_port(self) -> bool:
        return self >= GadgetRole.NWSW_A and self not in CONNECTORS

    @property
    def is_left_connector(self) -> bool:
        return self in (GadgetRole.NWSW_C, GadgetRole.SSW_C)


# (InA, InB, Conn) de cada cadeia, na ordem NW-SW, S-SW, S-SE, NE-SE.
CHAINS: Tuple[Tuple[GadgetRole, GadgetRole, GadgetRole], ...] = (
    (GadgetRole.NWSW_A, GadgetRole.NWSW_B, GadgetRole.NWSW_C),
    (GadgetRole.SSW_A, GadgetRole.SSW_B, GadgetRole.SSW_C),
    (GadgetRole.SSE_A, GadgetRole.SSE_B, GadgetRole.SSE_C),
    (GadgetRole.NESE_A, GadgetRole.NESE_B, GadgetRole.NESE_C),
)
CONNECTORS = frozenset(chain[2] for chain in CHAINS)
ROLES_PER_GADGET = len(GadgetRole)


@dataclass(frozen=True)
class OrderedGraph:
    """Vértices 1..n na ordem dos índices; arestas (u, v) com u < v."""
    n: int
    edges: FrozenSet[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise exception_2_INVALID_ARGUMENT(f"vertex count must be >= 0, got {self.n}")
        for u, v in self.edges:
            if not 1 <= u < v <= self.n:
                raise exception_2_INVALID_ARGUMENT(
                    f"edge ({u},{v}) must satisfy 1 <= u < v <= {self.n}"
                )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]):
        normalized = set()
        for u, v in edges:
            if u == v:
                raise exception_2_INVALID_ARGUMENT(f"self-loop at vertex {u}")
            normalized.add((u, v) if u < v else (v, u))
        return cls(n=n, edges=frozenset(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        # adjacency[v] ordenado; a posição 0 fica vazia
        buckets: List[List[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            buckets[u].append(v)
            buckets[v].append(u)
        return tuple(tuple(sorted(b)) for b in buckets)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class TracedGraph(OrderedGraph):
    """Grafo cuja ordem é um caminho hamiltoniano P = 1, 2, ..., n."""

    def __post_init__(self):
        super().__post_init__()
        for i in range(1, self.n):
            if (i, i + 1) not in self.edges:
                raise exception_2_INVALID_ARGUMENT(f"traced graph is missing path edge ({i},{i + 1})")

    def pattern_graph(self) -> OrderedGraph:
        return OrderedGraph(n=self.n, edges=frozenset((u, v) for u, v in self.edges if v != u + 1))

    def pattern_neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(w for w in self.adjacency[v] if abs(w - v) != 1)


@dataclass(frozen=True)
class Embedding:
    positions: Tuple[int, ...]
    host_n: int

    def __post_init__(self):
        for a, b in zip(self.positions, self.positions[1:]):
            if a >= b:
                raise exception_2_INVALID_ARGUMENT(f"embedding positions must increase: {self.positions}")
        if self.positions and not (1 <= self.positions[0] and self.positions[-1] <= self.host_n):
            raise exception_2_INVALID_ARGUMENT(f"embedding positions outside [1,{self.host_n}]")

    def gap(self) -> int:
        # convenção: com k <= 1 o mínimo é vazio e vale host_n
        if len(self.positions) <= 1:
            return self.host_n
        return min(b - a for a, b in zip(self.positions, self.positions[1:]))


@dataclass(frozen=True)
class IncreasingInducedPath:
    vertices: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class OrientedStar:
    center: int
    leaves: Tuple[int, ...]
    orientation: Orientation

    def __post_init__(self):
        if not self.leaves:
            raise exception_2_INVALID_ARGUMENT(f"star centered at {self.center} has no leaves")
        if len(set(self.leaves)) != len(self.leaves) or self.center in self.leaves:
            raise exception_2_INVALID_ARGUMENT(f"star centered at {self.center} repeats a vertex")
        if self.orientation == Orientation.RIGHT and min(self.leaves) < self.center:
            raise exception_2_INVALID_ARGUMENT(f"right star centered at {self.center} has a leaf before it")
        if self.orientation == Orientation.LEFT and max(self.leaves) > self.center:
            raise exception_2_INVALID_ARGUMENT(f"left star centered at {self.center} has a leaf after it")

    @property
    def r(self) -> int:
        return len(self.leaves)

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted((self.center,) + self.leaves))

    @property
    def span(self) -> Tuple[int, int]:
        vs = self.vertices
        return vs[0], vs[-1]

    def flipped(self) -> "OrientedStar":
        """O mesmo 1-star com o outro extremo como centro."""
        if self.r != 1:
            raise exception_2_INVALID_ARGUMENT("only 1-stars can change their center")
        other = Orientation.LEFT if self.orientation == Orientation.RIGHT else Orientation.RIGHT
        return OrientedStar(center=self.leaves[0], leaves=(self.center,), orientation=other)


@dataclass(frozen=True)
class StarForest:
    n: int
    stars: Tuple[OrientedStar, ...]

    def edges(self) -> FrozenSet[Edge]:
        return frozenset(
            (min(s.center, leaf), max(s.center, leaf)) for s in self.stars for leaf in s.leaves
        )


@dataclass(frozen=True)
class ConstellationWitness:
    """Ordem das estrelas tal que cada centro anterior fica fora das estrelas seguintes."""
    forest: StarForest
    star_order: Tuple[int, ...]

    def ordered_stars(self) -> List[OrientedStar]:
        return [self.forest.stars[i] for i in self.star_order]


@dataclass(frozen=True)
class P1:
    kind: ClassVar[str] = "P1"
    path: IncreasingInducedPath
    anchored: Anchor


@dataclass(frozen=True)
class P2:
    kind: ClassVar[str] = "P2"
    path: IncreasingInducedPath


@dataclass(frozen=True)
class P3:
    kind: ClassVar[str] = "P3"
    embedding: Embedding
    gap: int


PropOutcome = Union[P1, P2, P3]


@dataclass(frozen=True)
class ParamFns:
    """phi, eta, gamma: t -> BigReal em (0, 1)."""
    phi: Callable[[int], "iv.mpf"]
    eta: Callable[[int], "iv.mpf"]
    gamma: Callable[[int], "iv.mpf"]
    compliant: bool = False
    # gamma(t) = gamma(t-1) + 8 phi(t-1) por construção
    cumulative_gamma: bool = False
    name: str = "custom"


@dataclass(frozen=True)
class BoundContext:
    r: int
    params: ParamFns
    ell: "iv.mpf"

    def __post_init__(self):
        if self.r < 1:
            raise exception_2_INVALID_ARGUMENT(f"r must be >= 1, got {self.r}")
        if not (self.ell > 0):
            raise exception_2_INVALID_ARGUMENT("log_{r+1} n must be positive")


@dataclass(frozen=True)
class InequalityCheck:
    name: str
    holds: bool
    margin: "iv.mpf"


@dataclass(frozen=True)
class BoundsGrid:
    rs: Tuple[int, ...] = (1, 2, 3, 5)
    t_max: int = 20
    ell_factors: Tuple[int, ...] = (1, 2, 10)
    precision: int = 256


@dataclass(frozen=True)
class ToyThresholds:
    """Substitutos monótonos de f, h, g (n, t, p) -> float para o modo toy."""
    f: Callable[[int, int, int], float]
    h: Callable[[int, int, int], float]
    g: Callable[[int, int, int], float]

    @classmethod
    def logarithmic(cls, r: int) -> "ToyThresholds":
        """f = log2(n)/(t+1) - p/2, h = log2(n)/(t+2) + p/2, g = n/(2r+1)^(t+1)."""
        return cls(
            f=lambda n, t, p: math.log2(max(n, 1)) / (t + 1) - p / 2,
            h=lambda n, t, p: math.log2(max(n, 1)) / (t + 2) + p / 2,
            g=lambda n, t, p: n / (2 * r + 1) ** (t + 1),
        )


@dataclass(frozen=True)
class PeelConfig:
    r: int
    params: Optional[ParamFns] = None
    quantitative: bool = True
    toy: Optional[ToyThresholds] = None

    def __post_init__(self):
        if self.r < 1:
            raise exception_2_INVALID_ARGUMENT(f"r must be >= 1, got {self.r}")
        if not self.quantitative and self.toy is None:
            raise exception_2_INVALID_ARGUMENT("toy mode needs a threshold oracle")


@dataclass
class PeelTrace:
    calls: int = 0
    max_depth: int = 0
    short_circuits: int = 0
    base_cases: int = 0
    concatenations: int = 0
    successor_steps: int = 0
    fallbacks: int = 0


@dataclass(frozen=True)
class Interval:
    i: int
    j: int
    rank: int


@dataclass(frozen=True)
class IntervalSystem:
    ell: int
    intervals: Tuple[Interval, ...]

    def pairs(self) -> List[Tuple[int, int]]:
        return sorted((iv_.i, iv_.j) for iv_ in self.intervals)


@dataclass
class ConstructionGraph:
    """
    G_ell em CSR: vértice v = (node - 1) * 16 + role, nós numerados como heap
    (raiz 1, filhos 2s e 2s+1, profundidade = node.bit_length()).
    """
    ell: int
    height: int
    intervals: IntervalSystem
    offsets: array
    targets: array
    edge_count: int
    rib_count: int
    ham_path: Optional[array] = field(default=None, repr=False)

    @property
    def node_count(self) -> int:
        return (1 << self.height) - 1

    @property
    def vertex_count(self) -> int:
        return ROLES_PER_GADGET * self.node_count

    def vertex(self, node: int, role: GadgetRole) -> int:
        return (node - 1) * ROLES_PER_GADGET + role

    def node_of(self, v: int) -> int:
        return v // ROLES_PER_GADGET + 1

    def role_of(self, v: int) -> GadgetRole:
        return GadgetRole(v % ROLES_PER_GADGET)

    def depth_of(self, v: int) -> int:
        return self.node_of(v).bit_length()

    def neighbors(self, v: int) -> array:
        return self.targets[self.offsets[v]:self.offsets[v + 1]]

    def degree(self, v: int) -> int:
        return self.offsets[v + 1] - self.offsets[v]


