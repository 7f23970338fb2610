import typer

from lipaths.peel.use_case import PeelUseCase
from lipaths.utils.exceptions import exit_on_error


router = typer.Typer(help="Constructive peel: pattern embedding or increasing induced path.")


@router.command("peel")
@exit_on_error
def peel(
    graph: str = typer.Option(..., "--graph", help="Grafo traçado (P = 1, 2, ..., n)"),
    pattern: str = typer.Option(..., "--pattern", help="(t, r)-constelação"),
    r: int = typer.Option(..., "--r", min=1, help="Aridade das estrelas"),
    toy: bool = typer.Option(False, "--toy", help="Limiares logarítmicos no lugar de f, h, g"),
    p: int = typer.Option(0, "--p", min=0),
) -> None:
    """
    Rodar o peel e imprimir o certificado JSON

    P1/P2 trazem "vertices", P3 traz "positions" e "gap". Sai com código 1
    quando o certificado não valida.
    """
    certificate, _ = PeelUseCase().run(graph, pattern, r, toy=toy, p=p)
    typer.echo(certificate.model_dump_json(exclude_none=True))
    if not certificate.valid:
        raise typer.Exit(code=1)
