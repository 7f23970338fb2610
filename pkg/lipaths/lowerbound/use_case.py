import logging
import sys
from typing import Callable, List

from lipaths._shared.models import ConstructionGraph
from lipaths._shared.schemas import CheckResult, LowerboundReport
from lipaths.lowerbound import service as lowerbound_service
from lipaths.utils.exceptions import LipathsException, exception_2_MALFORMED_INPUT
from lipaths.utils.graph_io import iter_edge_lines


logger = logging.getLogger(__name__)

service = lowerbound_service

# acima disso o reconhecedor completo materializa grafos grandes demais
FULL_RECOGNIZER_MAX_ELL = 2


class LowerboundUseCase:

    def __init__(self):
        self.service = service

    def generate(self, ell: int, out: str, traced: bool = False) -> ConstructionGraph:
        graph = self.service.build_construction(ell)
        lines = iter_edge_lines(
            graph.vertex_count, graph.edge_count, self.service.iter_graph_edges(graph, traced=traced)
        )
        if out == "-":
            sys.stdout.writelines(lines)
            return graph
        try:
            with open(out, "w", encoding="utf-8") as handle:
                handle.writelines(lines)
        except OSError as error:
            raise exception_2_MALFORMED_INPUT(f"cannot write {out}: {error.strerror}")
        logger.info("wrote G_%d (%s) to %s", ell, "traced" if traced else "construction order", out)
        return graph

    def _run(self, name: str, check: Callable[[], str]) -> CheckResult:
        try:
            return CheckResult(name=name, passed=True, detail=check())
        except LipathsException as error:
            logger.debug("check %s failed: %s", name, error.detail)
            return CheckResult(name=name, passed=False, detail=error.detail)

    def verify(self, ell: int) -> LowerboundReport:
        graph = self.service.build_construction(ell)
        checks: List[CheckResult] = []

        problems = self.service.check_interval_system(graph.intervals)
        checks.append(CheckResult(
            name="nested-intervals",
            passed=not problems,
            detail=problems[0] if problems else f"{len(graph.intervals.intervals)} intervals, h={graph.height}",
        ))

        expected = 16 * ((1 << graph.height) - 1)
        checks.append(CheckResult(
            name="vertex-count",
            passed=graph.vertex_count == expected and graph.vertex_count >= 2 ** (2 ** ell),
            detail=f"{graph.vertex_count} vertices, expected {expected}",
        ))
        checks.append(CheckResult(
            name="preimage-partition",
            passed=self.service.check_preimages(graph),
            detail=f"{graph.node_count} gadgets of 16 vertices",
        ))

        problems = self.service.check_edge_order(graph)
        checks.append(CheckResult(
            name="edge-order",
            passed=not problems,
            detail=problems[0] if problems else f"{graph.edge_count} edges join comparable nodes",
        ))

        order = self.service.check_two_degenerate(graph)
        checks.append(CheckResult(
            name="two-degenerate",
            passed=order is not None,
            detail="elimination order found" if order is not None else "some vertex keeps degree >= 3",
        ))

        def path_check() -> str:
            path = self.service.ham_path(graph)
            return f"{len(path)} vertices, rib-free, root out-port to root out-port"

        checks.append(self._run("hamiltonian-path", path_check))

        if checks[-1].passed:
            def depth_check() -> str:
                positions = self.service.path_positions(graph)
                count = self.service.depth_ordered_witness(graph, positions)
                return f"{count} stars in depth order"

            checks.append(self._run("depth-ordered-stars", depth_check))

            if ell <= FULL_RECOGNIZER_MAX_ELL:
                def recognizer_check() -> str:
                    witness = self.service.pattern_is_constellation(graph)
                    return f"{len(witness.forest.stars)} stars, pairwise order verified"

                checks.append(self._run("constellation", recognizer_check))

        depths = " ".join(f"{d}:{a}" for d, a in sorted(self.service.sources(graph).items()))
        checks.append(CheckResult(name="sources", passed=True, detail=depths))

        report = LowerboundReport(ell=ell, vertices=graph.vertex_count, edges=graph.edge_count, checks=checks)
        logger.info("verify G_%d: %s", ell, "passed" if report.passed else "failed")
        return report
