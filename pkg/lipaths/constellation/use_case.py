import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from lipaths._shared.models import ConstellationWitness, OrderedGraph
from lipaths.constellation import service as constellation_service
from lipaths.ordered import service as ordered_service
from lipaths.utils.exceptions import exception_1_PROPERTY_VIOLATION
from lipaths.utils.graph_io import read_graph


logger = logging.getLogger(__name__)

service = constellation_service


@dataclass(frozen=True)
class Recognition:
    pattern: OrderedGraph
    witness: Optional[ConstellationWitness]
    arity: Optional[int]
    one_sided: bool
    crossing: Optional[Tuple[int, int, int, int]]
    stars: int = 0


class ConstellationUseCase:

    def __init__(self):
        self.service = service

    def recognize(self, pattern_path: str, cross_check: bool = False) -> Recognition:
        pattern = read_graph(pattern_path)
        witness = self.service.is_constellation(pattern)

        # Regra: a testemunha devolvida precisa passar na checagem (⋆) par a par
        if witness is not None and not self.service.verify_star_order(witness):
            raise exception_1_PROPERTY_VIOLATION("recognizer produced a witness that violates the star order")
        if cross_check:
            inductive = self.service.is_constellation_inductive(pattern)
            if inductive != (witness is not None):
                raise exception_1_PROPERTY_VIOLATION(
                    f"recognizers disagree: ordering={witness is not None} inductive={inductive}"
                )

        forest = self.service.decompose_star_forest(pattern)
        return Recognition(
            pattern=pattern,
            witness=witness,
            arity=self.service.star_arity(forest) if forest is not None else None,
            one_sided=ordered_service.is_one_sided(pattern),
            crossing=ordered_service.has_crossing_edges(pattern),
            stars=len(forest.stars) if forest is not None else 0,
        )
