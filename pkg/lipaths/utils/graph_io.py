import json
import logging
import sys
from typing import IO, Iterable, Iterator, List, Optional, Tuple, Union

from pydantic import ValidationError

from lipaths._shared.models import (
    ConstellationWitness,
    Edge,
    OrderedGraph,
    Orientation,
    OrientedStar,
    StarForest,
    TracedGraph,
)
from lipaths._shared.schemas import StarSchema, WitnessSchema
from lipaths.utils.exceptions import LipathsException, exception_2_MALFORMED_INPUT


logger = logging.getLogger(__name__)

GraphType = Union[OrderedGraph, TracedGraph]


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    """Linhas úteis com o número (1-based) da linha original."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line.split()


def _parse_ints(tokens: List[str], expected: int, number: int) -> List[int]:
    if len(tokens) != expected:
        raise exception_2_MALFORMED_INPUT(f"expected {expected} integers, found {len(tokens)}", number)
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise exception_2_MALFORMED_INPUT(f"not an integer in {' '.join(tokens)!r}", number)


def parse_edge_list(text: str, traced: bool = False) -> GraphType:
    """
    Formato: linha "n m" seguida de m linhas "u v" com 1 <= u < v <= n.
    Comentários iniciados por '#' e linhas vazias são ignorados.
    """
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise exception_2_MALFORMED_INPUT("empty edge list, expected header 'n m'", 1)
    number, tokens = header
    n, m = _parse_ints(tokens, 2, number)
    if n < 1 or m < 0:
        raise exception_2_MALFORMED_INPUT(f"invalid header n={n} m={m}", number)

    edges = set()
    for number, tokens in lines:
        u, v = _parse_ints(tokens, 2, number)
        if not 1 <= u < v <= n:
            raise exception_2_MALFORMED_INPUT(f"edge ({u},{v}) must satisfy 1 <= u < v <= {n}", number)
        if (u, v) in edges:
            raise exception_2_MALFORMED_INPUT(f"duplicate edge ({u},{v})", number)
        edges.add((u, v))
    if len(edges) != m:
        raise exception_2_MALFORMED_INPUT(f"header announces {m} edges but {len(edges)} were listed", number)

    if traced:
        for i in range(1, n):
            if (i, i + 1) not in edges:
                raise exception_2_MALFORMED_INPUT(f"traced graph is missing path edge ({i},{i + 1})")
        return TracedGraph(n=n, edges=frozenset(edges))
    return OrderedGraph(n=n, edges=frozenset(edges))


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as error:
        raise exception_2_MALFORMED_INPUT(f"cannot read {path}: {error.strerror}")


def read_graph(path: str, traced: bool = False) -> GraphType:
    return parse_edge_list(read_text(path), traced=traced)


def iter_edge_lines(n: int, m: int, edges: Iterable[Edge]) -> Iterator[str]:
    yield f"{n} {m}\n"
    for u, v in edges:
        yield f"{u} {v}\n"


def write_edge_list(graph: GraphType, stream: Optional[IO[str]] = None) -> str:
    lines = iter_edge_lines(graph.n, graph.m, graph.sorted_edges())
    if stream is None:
        return "".join(lines)
    stream.writelines(lines)
    return ""


def witness_to_schema(witness: ConstellationWitness) -> WitnessSchema:
    return WitnessSchema(
        stars=[
            StarSchema(center=s.center, leaves=list(s.leaves), orientation=s.orientation.value)
            for s in witness.forest.stars
        ],
        order=list(witness.star_order),
    )


def dump_witness(witness: ConstellationWitness) -> str:
    return witness_to_schema(witness).model_dump_json()


def load_witness(text: str, n: int) -> ConstellationWitness:
    try:
        schema = WitnessSchema.model_validate(json.loads(text))
    except (json.JSONDecodeError, ValidationError) as error:
        raise exception_2_MALFORMED_INPUT(f"invalid witness JSON: {error}")
    try:
        stars = tuple(
            OrientedStar(center=s.center, leaves=tuple(sorted(s.leaves)), orientation=Orientation(s.orientation))
            for s in schema.stars
        )
    except LipathsException as error:
        raise exception_2_MALFORMED_INPUT(f"invalid star in witness: {error.detail}")
    return ConstellationWitness(forest=StarForest(n=n, stars=stars), star_order=tuple(schema.order))
