import logging
from typing import Optional

from lipaths._shared.models import ConstellationShape, Embedding, FixtureKind, OrderedGraph
from lipaths._shared.schemas import OracleResult
from lipaths.constellation import service as constellation_service
from lipaths.ordered import service as ordered_service
from lipaths.utils.exceptions import exception_2_INVALID_ARGUMENT
from lipaths.utils.graph_io import GraphType, read_graph


logger = logging.getLogger(__name__)

service = ordered_service


class OrderedUseCase:

    def __init__(self):
        self.service = service

    def fixture(
        self,
        kind: FixtureKind,
        n: int = 10,
        seed: int = 0,
        extra: int = 0,
        t: int = 2,
        r: int = 1,
        shape: ConstellationShape = ConstellationShape.SEQUENTIAL,
    ) -> GraphType:
        if kind == FixtureKind.HALFGRAPH:
            return self.service.gen_halfgraph(n)
        if kind == FixtureKind.PATH:
            return self.service.gen_path(n)
        if kind == FixtureKind.RANDOM:
            return self.service.gen_random_traced(n, extra, seed)
        if kind == FixtureKind.CONSTELLATION:
            return constellation_service.build_tr_constellation(t, r, shape)
        if kind == FixtureKind.RANDOM_CONSTELLATION:
            return constellation_service.random_constellation(t, r, seed)
        if kind == FixtureKind.TOPMINOR:
            return constellation_service.build_topminor_pattern(t)

        # Regra: o padrão de menor topológico é plantado com folgas iguais,
        # o que exige n >= 2 * t^2 para que nenhuma aresta caia em P.
        pattern = constellation_service.build_topminor_pattern(t)
        if n < 2 * pattern.n:
            raise exception_2_INVALID_ARGUMENT(f"planting K_{t} needs n >= {2 * pattern.n}, got {n}")
        step = n // pattern.n
        positions = [1 + i * step for i in range(pattern.n)]
        return self.service.plant_pattern(pattern, n, positions)

    def find_pattern(
        self, graph_path: str, pattern_path: str, min_gap: int = 1, traced: bool = False
    ) -> Optional[Embedding]:
        host = read_graph(graph_path, traced=traced)
        pattern = read_graph(pattern_path)
        # Regra: em grafos traçados o padrão é buscado em G - E(P)
        if traced:
            host = host.pattern_graph()
        embedding = self.service.contains_pattern(host, pattern, min_gap)
        logger.info("pattern search on n=%d: %s", host.n, "found" if embedding else "absent")
        return embedding

    def oracle(self, graph_path: str, cap: int) -> OracleResult:
        graph: OrderedGraph = read_graph(graph_path)
        length, witness, capped = self.service.longest_induced_path_oracle(graph, cap)
        return OracleResult(length=length, capped=capped, witness=witness)
