from typing import Optional

import typer

from lipaths._shared.models import ConstellationShape, FixtureKind
from lipaths.ordered.use_case import OrderedUseCase
from lipaths.utils.exceptions import exit_on_error
from lipaths.utils.graph_io import write_edge_list
from lipaths.utils.settings import DEFAULT_SEED, ORACLE_DEFAULT_CAP


router = typer.Typer(help="Ordered graphs: fixtures, pattern search, induced-path oracle.")


@router.command("gen-fixture")
@exit_on_error
def gen_fixture(
    kind: FixtureKind = typer.Argument(..., help="Tipo de fixture"),
    n: int = typer.Option(10, "--n", min=1, help="Número de vértices do hospedeiro"),
    seed: int = typer.Option(DEFAULT_SEED, "--seed", help="Semente dos geradores aleatórios"),
    extra: int = typer.Option(0, "--extra", min=0, help="Arestas de padrão extras (random)"),
    t: int = typer.Option(2, "--t", min=1, help="Número de estrelas"),
    r: int = typer.Option(1, "--r", min=1, help="Aridade das estrelas"),
    shape: ConstellationShape = typer.Option(ConstellationShape.SEQUENTIAL, "--shape"),
) -> None:
    """
    Gerar uma fixture em formato de lista de arestas

    - halfgraph, path, random: grafos traçados com n vértices
    - constellation, random-constellation: (t, r)-constelações
    - topminor: padrão de menor topológico de K_t; topminor-host: o mesmo plantado num caminho
    """
    graph = OrderedUseCase().fixture(kind, n=n, seed=seed, extra=extra, t=t, r=r, shape=shape)
    typer.echo(write_edge_list(graph), nl=False)


@router.command("find-pattern")
@exit_on_error
def find_pattern(
    graph: str = typer.Option(..., "--graph", help="Hospedeiro ('-' para stdin)"),
    pattern: str = typer.Option(..., "--pattern", help="Padrão ordenado"),
    min_gap: int = typer.Option(1, "--min-gap", min=1),
    traced: bool = typer.Option(False, "--traced", help="Buscar em G - E(P)"),
) -> None:
    embedding = OrderedUseCase().find_pattern(graph, pattern, min_gap=min_gap, traced=traced)
    if embedding is None:
        typer.echo("embedding: none")
        return
    typer.echo(f"embedding: {' '.join(str(a) for a in embedding.positions)}")
    typer.echo(f"gap: {embedding.gap()}")


@router.command("oracle-lip")
@exit_on_error
def oracle_lip(
    graph: Optional[str] = typer.Option(None, "--graph", help="Grafo; stdin quando omitido ou '-'"),
    cap: int = typer.Option(ORACLE_DEFAULT_CAP, "--cap", min=1),
) -> None:
    """Maior caminho induzido (busca exaustiva truncada em --cap)."""
    result = OrderedUseCase().oracle(graph or "-", cap)
    typer.echo(result.to_text())
