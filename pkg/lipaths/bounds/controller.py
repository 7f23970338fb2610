from typing import List, Optional

import typer

from lipaths._shared.schemas import BoundsRow
from lipaths.bounds.use_case import BoundsUseCase
from lipaths.utils.exceptions import exit_on_error
from lipaths.utils.settings import PARAM_CHECK_T_MAX


router = typer.Typer(help="Threshold functions and their inequalities.")


@router.command("check-bounds")
@exit_on_error
def check_bounds(
    r: Optional[List[int]] = typer.Option(None, "--r", min=1, help="Aridade (repetível); padrão 1 2 3 5"),
    t_max: int = typer.Option(20, "--t-max", min=1),
    grid: str = typer.Option("default", "--grid"),
    bits: Optional[int] = typer.Option(None, "--precision", help="Bits de precisão (LIPATHS_PRECISION)"),
) -> None:
    """
    Verificar as desigualdades sobre o grid

    Emite um TSV (uma linha por r, t, p, ell e desigualdade) com a margem
    rigorosa; sai com código 1 se alguma linha não for "pass".
    """
    use_case = BoundsUseCase()
    cells = use_case.grid(grid, rs=r, t_max=t_max, bits=bits)
    compliant = use_case.params_compliant(cells.precision)
    typer.echo(f"# default parameters compliant up to t={PARAM_CHECK_T_MAX}: {'yes' if compliant else 'no'}")
    typer.echo(BoundsRow.header())
    for row in use_case.rows(cells):
        typer.echo(row.to_tsv())
    if not (compliant and use_case.passed):
        raise typer.Exit(code=1)
