import typer

from lipaths.constellation.use_case import ConstellationUseCase
from lipaths.utils.exceptions import exit_on_error
from lipaths.utils.graph_io import dump_witness


router = typer.Typer(help="Constellation recognition.")


@router.command("recognize")
@exit_on_error
def recognize(
    pattern: str = typer.Option(..., "--pattern", help="Padrão ordenado ('-' para stdin)"),
    cross_check: bool = typer.Option(False, "--cross-check", help="Confere com o reconhecedor indutivo"),
) -> None:
    """
    Reconhecer uma constelação

    Imprime "constellation: yes|no", a testemunha em JSON quando existe e
    alguns diagnósticos (aridade, unilateralidade, arestas cruzadas).
    """
    result = ConstellationUseCase().recognize(pattern, cross_check=cross_check)
    if result.witness is None:
        typer.echo("constellation: no")
    else:
        typer.echo("constellation: yes")
        typer.echo(f"witness: {dump_witness(result.witness)}")
    if result.arity is not None:
        arity = str(result.arity)
    else:
        arity = "mixed" if result.stars else "none"
    typer.echo(f"arity: {arity}")
    typer.echo(f"one-sided: {'yes' if result.one_sided else 'no'}")
    crossing = result.crossing
    typer.echo(f"crossing: {' '.join(map(str, crossing)) if crossing else 'none'}")
