from functools import wraps
import logging
from typing import Callable, Optional

import typer


logger = logging.getLogger(__name__)


class LipathsException(Exception):
    """Erro de domínio com o código de saída que a CLI deve devolver."""

    def __init__(self, exit_code: int, detail: str):
        super().__init__(detail)
        self.exit_code = exit_code
        self.detail = detail


class InconclusiveError(LipathsException):
    """A comparação rigorosa não decidiu na precisão atual."""


def exception_1_PROPERTY_VIOLATION(detail: str) -> LipathsException:
    return LipathsException(
        exit_code=1,
        detail=detail,
    )

def exception_1_INCONCLUSIVE(detail: str) -> InconclusiveError:
    return InconclusiveError(
        exit_code=1,
        detail=f"inconclusive: {detail}",
    )

def exception_2_INVALID_ARGUMENT(detail: str) -> LipathsException:
    return LipathsException(
        exit_code=2,
        detail=detail,
    )

def exception_2_MALFORMED_INPUT(detail: str, line: Optional[int] = None) -> LipathsException:
    if line is not None:
        detail = f"line {line}: {detail}"
    return LipathsException(
        exit_code=2,
        detail=detail,
    )


def exit_on_error(func: Callable) -> Callable:
    """Converte LipathsException em typer.Exit com a mensagem no stderr."""

    @wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except LipathsException as error:
            logger.debug("command failed with exit code %d", error.exit_code)
            typer.echo(f"error: {error.detail}", err=True)
            raise typer.Exit(code=error.exit_code)

    return wrapper
