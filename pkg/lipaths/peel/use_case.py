import logging
from typing import Optional, Tuple

from lipaths._shared.models import P1, P3, PeelConfig, PeelTrace, PropOutcome, ToyThresholds
from lipaths._shared.schemas import CertificateSchema
from lipaths.peel import service as peel_service
from lipaths.utils.exceptions import exception_2_INVALID_ARGUMENT
from lipaths.utils.graph_io import read_graph


logger = logging.getLogger(__name__)

service = peel_service


def to_certificate(outcome: PropOutcome, valid: bool) -> CertificateSchema:
    if isinstance(outcome, P3):
        return CertificateSchema(
            kind=outcome.kind,
            positions=list(outcome.embedding.positions),
            gap=outcome.gap,
            valid=valid,
        )
    return CertificateSchema(
        kind=outcome.kind,
        vertices=list(outcome.path.vertices),
        anchored=outcome.anchored.value if isinstance(outcome, P1) else None,
        valid=valid,
    )


class PeelUseCase:

    def __init__(self):
        self.service = service

    def run(
        self, graph_path: str, pattern_path: str, r: int, toy: bool = False, p: int = 0
    ) -> Tuple[CertificateSchema, PeelTrace]:
        if graph_path == "-" and pattern_path == "-":
            raise exception_2_INVALID_ARGUMENT("graph and pattern cannot both come from stdin")
        graph = read_graph(graph_path, traced=True)
        pattern = read_graph(pattern_path)

        toy_thresholds: Optional[ToyThresholds] = ToyThresholds.logarithmic(r) if toy else None
        config = PeelConfig(r=r, quantitative=not toy, toy=toy_thresholds)
        trace = PeelTrace()
        outcome = self.service.peel(graph, pattern, config, p=p, trace=trace)

        # Regra: o certificado é revalidado de forma independente antes de sair
        valid = self.service.validate_outcome(graph, pattern, outcome)
        logger.info(
            "peel trace: calls=%d depth=%d base=%d concat=%d successors=%d",
            trace.calls, trace.max_depth, trace.base_cases, trace.concatenations, trace.successor_steps,
        )
        return to_certificate(outcome, valid), trace
