"""
Helpers de aritmética intervalar rigorosa sobre ``mpmath.iv``.

Todo ``BigReal`` é um intervalo fechado com arredondamento para fora; um
veredito só é emitido quando o intervalo inteiro está de um lado do zero.
"""
from contextlib import contextmanager
from fractions import Fraction
import logging
from typing import Iterator, Optional, Union

import mpmath
from mpmath import iv

from lipaths.utils.exceptions import exception_1_INCONCLUSIVE
from lipaths.utils.settings import BOUNDS_PRECISION


logger = logging.getLogger(__name__)

BigReal = iv.mpf
RealLike = Union[int, str, Fraction, "BigReal"]

# Abaixo deste valor usamos as cotas fechadas de log1p/expm1.
SMALL = mpmath.mpf(2) ** -10


@contextmanager
def precision(bits: Optional[int] = None) -> Iterator[int]:
    """Fixa a precisão de iv e mp durante o bloco (estado global do mpmath)."""
    bits = bits or BOUNDS_PRECISION
    saved_iv, saved_mp = iv.prec, mpmath.mp.prec
    iv.prec = bits
    mpmath.mp.prec = bits
    try:
        yield bits
    finally:
        iv.prec = saved_iv
        mpmath.mp.prec = saved_mp


def big(value: RealLike) -> BigReal:
    if isinstance(value, iv.mpf):
        return value
    if isinstance(value, Fraction):
        return iv.mpf(value.numerator) / value.denominator
    return iv.mpf(value)


def hull(lo: BigReal, hi: BigReal) -> BigReal:
    """Intervalo que contém todo ponto entre ``lo`` e ``hi``."""
    return lo + (hi - lo) * iv.mpf([0, 1])


def lower(x: BigReal) -> mpmath.mpf:
    # _mpi_ guarda os extremos como tuplas mpf cruas
    return mpmath.mpf(big(x)._mpi_[0])


def upper(x: BigReal) -> mpmath.mpf:
    return mpmath.mpf(big(x)._mpi_[1])


def width(x: BigReal) -> mpmath.mpf:
    return upper(x) - lower(x)


def contains(x: BigReal, value: RealLike) -> bool:
    v = big(value)
    return bool(x.a <= v.a) and bool(v.b <= x.b)


def fmt(x: BigReal, digits: int = 8) -> str:
    """Extremo inferior em notação curta, para relatórios."""
    return mpmath.nstr(lower(x), digits)


def log_base(x: BigReal, base: RealLike) -> BigReal:
    return iv.log(big(x)) / iv.log(big(base))


def power(x: BigReal, y: BigReal) -> BigReal:
    """x**y para x > 0 via exp(y log x)."""
    return iv.exp(big(y) * iv.log(big(x)))


def log1p_neg(u: BigReal) -> BigReal:
    """log(1 - u) para 0 <= u < 1."""
    if upper(u) < SMALL:
        # -u - u^2 <= log(1-u) <= -u  para 0 <= u <= 1/2
        lo = -u.b - u.b * u.b
        hi = -u.a
        return hull(lo.a, hi.b)
    return iv.log(1 - u)


def expm1_neg(v: BigReal) -> BigReal:
    """exp(v) - 1 para v <= 0."""
    if lower(v) > -SMALL:
        # v <= exp(v) - 1 <= v + v^2/2  para v <= 0
        lo = v.a
        hi = v.b + v.b * v.b / 2
        return hull(lo.a, hi.b)
    return iv.exp(v) - 1


def pow_diff(ell: BigReal, delta: BigReal, x: BigReal) -> BigReal:
    """
    ell**x - (ell - delta)**x sem cancelamento catastrófico.

    Exige 0 <= delta < ell; com delta/ell minúsculo a diferença é calculada
    como -ell**x * expm1(x * log1p(-delta/ell)).
    """
    u = delta / ell
    if upper(u) < SMALL:
        return -power(ell, x) * expm1_neg(big(x) * log1p_neg(u))
    return power(ell, x) - power(ell - delta, x)


def certify(margin: BigReal, what: str, strict: bool = False) -> bool:
    """True se margin >= 0 (ou > 0), False se certamente o contrário."""
    verdict = (margin > 0) if strict else (margin >= 0)
    if verdict is None:
        logger.debug("comparação inconclusiva em %s (prec=%d)", what, iv.prec)
        raise exception_1_INCONCLUSIVE(
            f"{what}: margin [{mpmath.nstr(lower(margin), 6)}, {mpmath.nstr(upper(margin), 6)}] straddles zero at {iv.prec} bits"
        )
    return bool(verdict)
