import typer

from lipaths.lowerbound.use_case import LowerboundUseCase
from lipaths.utils.exceptions import exit_on_error


router = typer.Typer(help="The lower-bound construction G_ell.")


@router.command("gen-lowerbound")
@exit_on_error
def gen_lowerbound(
    ell: int = typer.Option(..., "--ell", min=1),
    out: str = typer.Option("-", "--out", help="Arquivo de saída ('-' para stdout)"),
    traced: bool = typer.Option(False, "--traced", help="Rotular vértices pela posição no caminho hamiltoniano"),
) -> None:
    """Gerar G_ell em formato de lista de arestas (escrita em streaming)."""
    LowerboundUseCase().generate(ell, out, traced=traced)


@router.command("verify-lowerbound")
@exit_on_error
def verify_lowerbound(
    ell: int = typer.Option(..., "--ell", min=1),
) -> None:
    """
    Rodar todas as checagens sobre G_ell

    Uma linha "nome<TAB>ok|FAIL<TAB>detalhe" por checagem; código 1 se alguma falhar.
    """
    report = LowerboundUseCase().verify(ell)
    typer.echo(f"ell\t{report.ell}")
    typer.echo(f"vertices\t{report.vertices}")
    typer.echo(f"edges\t{report.edges}")
    for check in report.checks:
        typer.echo(check.to_line())
    if not report.passed:
        raise typer.Exit(code=1)
