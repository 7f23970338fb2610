"""
Funções de limiar f, g, h, s e verificação rigorosa das desigualdades que a
prova do algoritmo de descascamento usa.

Tudo é calculado em função de ell = log_{r+1} n; n nunca é materializado.
g é representado pelo expoente E = log_{6(r+1)}(n / g) e s pelo déficit
delta = ell - log_{r+1} s, o que evita cancelamento entre números enormes.
"""
from dataclasses import replace
from fractions import Fraction
from functools import lru_cache
import logging
from math import factorial
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import mpmath
from mpmath import iv

from lipaths._shared.models import BoundContext, BoundsGrid, InequalityCheck, ParamFns
from lipaths._shared.schemas import BoundsRow
from lipaths.utils.bigreal import (
    BigReal,
    big,
    certify,
    contains,
    fmt,
    hull,
    log1p_neg,
    log_base,
    lower,
    pow_diff,
    power,
    precision,
    upper,
    width,
)
from lipaths.utils.exceptions import (
    InconclusiveError,
    LipathsException,
    exception_2_INVALID_ARGUMENT,
)
from lipaths.utils.settings import BOUNDS_MAX_PRECISION, PARAM_CHECK_T_MAX


logger = logging.getLogger(__name__)

# --- alpha -----------------------------------------------------------------

def _derivative_polys(count: int) -> List[List[int]]:
    """
    Polinômios P_k com f^(k)(x) = (ln 2)^2 x^-(k+1) P_k(1/ln x) para
    f(x) = 1/(x log2(x)^2): P_0 = u^2, P_{k+1} = -(k+1) P_k - u^2 P_k'.
    """
    polys = [[0, 0, 1]]
    for k in range(count - 1):
        current = polys[-1]
        nxt = [0] * (len(current) + 1)
        for i, a in enumerate(current):
            nxt[i] -= (k + 1) * a
            nxt[i + 1] -= i * a
        polys.append(nxt)
    return polys


def _horner(coeffs: Sequence[int], u: BigReal) -> BigReal:
    acc = big(0)
    for a in reversed(coeffs):
        acc = acc * u + a
    return acc


def alpha_constant(terms: int = 64, corrections: int = 8) -> BigReal:
    """
    alpha = soma_{x >= 9} 1/(x log2(x)^2), com enclosure rigorosa.

    Soma parcial até ``terms - 1`` mais a cauda. Com ``corrections = 0`` a
    cauda é limitada pela comparação com a integral; caso contrário usa
    Euler-Maclaurin com ``corrections`` termos: f é completamente monótona,
    então o valor exato fica entre os truncamentos de ordem m e m + 1.
    """
    if terms < 10:
        raise exception_2_INVALID_ARGUMENT(f"alpha needs at least 10 terms, got {terms}")
    c = iv.log(2) ** 2
    partial = big(0)
    for x in range(9, terms):
        partial += c / (x * iv.log(x) ** 2)
    n_big = big(terms)
    log_n = iv.log(n_big)
    integral = c / log_n
    head = c / (n_big * log_n ** 2)
    if corrections == 0:
        return hull(partial + integral, partial + integral + head)

    u = 1 / log_n
    polys = _derivative_polys(2 * corrections + 2)
    truncations = []
    total = partial + integral + head / 2
    for j in range(1, corrections + 2):
        num, den = mpmath.bernfrac(2 * j)
        weight = big(Fraction(int(num), int(den) * factorial(2 * j)))
        k = 2 * j - 1
        derivative = c * _horner(polys[k], u) / n_big ** (k + 1)
        total = total - weight * derivative
        if j >= corrections:
            truncations.append(total)
    return hull(truncations[0], truncations[1])


# --- parâmetros --------------------------------------------------------------

def _memo(fn: Callable[[int], BigReal]) -> Callable[[int], BigReal]:
    cache: Dict[int, BigReal] = {}

    def wrapper(t: int) -> BigReal:
        if t not in cache:
            cache[t] = fn(t)
        return cache[t]

    return wrapper


@lru_cache(maxsize=None)
def _default_params_at(prec: int) -> ParamFns:
    alpha = alpha_constant()
    log2 = iv.log(2)
    logger.debug(
        "alpha enclosure at %d bits: [%s, %s], width %s", prec, lower(alpha), upper(alpha), fmt(width(alpha), 3)
    )

    @_memo
    def phi(t: int) -> BigReal:
        if t < -1:
            raise exception_2_INVALID_ARGUMENT(f"phi is defined for t >= -1, got {t}")
        x = t + 10
        return 1 / (8 * alpha * x * (iv.log(x) / log2) ** 2)

    @_memo
    def eta(t: int) -> BigReal:
        return (phi(t) + phi(t - 1)) / 2

    gammas: List[BigReal] = [big(0)]

    def gamma(t: int) -> BigReal:
        # gammas[i] = gamma(i - 1)
        while len(gammas) <= t + 1:
            gammas.append(gammas[-1] + 8 * phi(len(gammas) - 2))
        return gammas[t + 1]

    params = ParamFns(phi=phi, eta=eta, gamma=gamma, cumulative_gamma=True, name="default")
    if check_param_fns(params, PARAM_CHECK_T_MAX):
        params = replace(params, compliant=True)
    return params


def default_params() -> ParamFns:
    """phi(t) = 1/(8 alpha (t+10) log2(t+10)^2), eta ponto médio, gamma acumulado."""
    return _default_params_at(iv.prec)


def param_checks(params: ParamFns, t_max: int) -> List[InequalityCheck]:
    if t_max < 1:
        raise exception_2_INVALID_ARGUMENT(f"t_max must be >= 1, got {t_max}")
    phi, eta, gamma = params.phi, params.eta, params.gamma
    checks: List[InequalityCheck] = []
    for t in range(0, t_max + 1):
        increment = gamma(t) - gamma(t - 1) - 8 * phi(t - 1)
        if params.cumulative_gamma:
            # igualdade pela definição de gamma: o enclosure tem de conter 0
            checks.append(InequalityCheck(f"gamma-step[{t}]", contains(increment, 0), increment))
        else:
            checks.append(InequalityCheck(f"gamma-step[{t}]", certify(increment, f"gamma-step t={t}"), increment))
        room = 1 - gamma(t - 1) - 8 * phi(t - 1)
        checks.append(InequalityCheck(f"gamma-room[{t}]", certify(room, f"gamma-room t={t}"), room))
        upper_gap = phi(t - 1) - eta(t)
        lower_gap = eta(t) - phi(t)
        checks.append(InequalityCheck(
            f"eta-between[{t}]",
            certify(upper_gap, f"phi(t-1) > eta t={t}", strict=True)
            and certify(lower_gap, f"eta > phi t={t}", strict=True),
            upper_gap if lower(upper_gap) < lower(lower_gap) else lower_gap,
        ))
        convex = upper_gap - (phi(t) - eta(t + 1))
        checks.append(InequalityCheck(f"gap-shrinks[{t}]", certify(convex, f"gap-shrinks t={t}", strict=True), convex))
    return checks


def check_param_fns(params: ParamFns, t_max: int) -> bool:
    for check in param_checks(params, t_max):
        if not check.holds:
            logger.info("parameter check %s failed (margin %s)", check.name, fmt(check.margin))
            return False
    return True


# --- funções de limiar -------------------------------------------------------

def _k(params: ParamFns, t: int) -> BigReal:
    """4^{1/(phi(t-1) - eta(t))}, a constante subtraída em f(., t, .)."""
    return power(4, 1 / (params.phi(t - 1) - params.eta(t)))


def _log_r1(ctx: BoundContext, x: BigReal) -> BigReal:
    return log_base(x, ctx.r + 1)


def _c6(ctx: BoundContext) -> BigReal:
    return _log_r1(ctx, big(6 * (ctx.r + 1)))


def _l3(ctx: BoundContext) -> BigReal:
    return _log_r1(ctx, big(3))


def _check_tp(t: int, p: int) -> None:
    if t < 1 or p < 0:
        raise exception_2_INVALID_ARGUMENT(f"threshold functions need t >= 1 and p >= 0, got t={t} p={p}")


def f_val(ctx: BoundContext, t: int, p: int) -> BigReal:
    _check_tp(t, p)
    return power(ctx.ell, ctx.params.phi(t)) - big(p) / 2 - _k(ctx.params, t)


def h_val(ctx: BoundContext, t: int, p: int) -> BigReal:
    _check_tp(t, p)
    return power(ctx.ell, ctx.params.eta(t)) + big(p) / 2 - _k(ctx.params, t - 1)


def _exponent(params: ParamFns, ell: BigReal, t: int, p: int) -> BigReal:
    return 2 * power(ell, params.gamma(t)) * (3 * power(ell, params.phi(t)) - p)


def g_exponent(ctx: BoundContext, t: int, p: int) -> BigReal:
    """log_{6(r+1)}(n / g(n, t, p)) = 2 ell^gamma(t) (3 ell^phi(t) - p)."""
    _check_tp(t, p)
    return _exponent(ctx.params, ctx.ell, t, p)


def _exponent_drop(params: ParamFns, ell: BigReal, d: BigReal, t: int, p: int, p_next: int) -> BigReal:
    """E(ell, t, p) - E(ell - d, t, p_next) sem cancelamento."""
    phi, gamma = params.phi(t), params.gamma(t)
    return (
        6 * pow_diff(ell, d, gamma + phi)
        - 2 * p * pow_diff(ell, d, gamma)
        + 2 * (p_next - p) * power(ell - d, gamma)
    )


def _g_third(ctx: BoundContext, t: int, p: int) -> Tuple[BigReal, BigReal]:
    """(log_{r+1} g(n/3, t-1, p), (r+1)^{-log g}) para o cálculo de s."""
    shifted = ctx.ell - _l3(ctx)
    g_log = shifted - _c6(ctx) * _exponent(ctx.params, shifted, t - 1, p)
    scaled = g_log * iv.log(ctx.r + 1)
    if lower(scaled) > 4 * iv.prec:
        # abaixo da resolução: não materializa exp(-ell) com expoente gigante
        x = hull(big(0), iv.exp(big(-4 * iv.prec)))
    else:
        x = iv.exp(-scaled)
    if not (x < 1):
        raise exception_2_INVALID_ARGUMENT(f"s(n, {t}, {p}) is not positive: g(n/3, t-1, p) <= 1")
    return g_log, x


def s_deficit(ctx: BoundContext, t: int, p: int) -> BigReal:
    """delta = ell - log_{r+1} s(n, t, p) >= 0."""
    _check_tp(t, p)
    _, x = _g_third(ctx, t, p)
    shifted = ctx.ell - _l3(ctx)
    return (
        _l3(ctx)
        + _c6(ctx) * _exponent(ctx.params, shifted, t - 1, p)
        - log1p_neg(x) / iv.log(ctx.r + 1)
        + _log_r1(ctx, big(2 * ctx.r + 1))
    )


def s_log(ctx: BoundContext, t: int, p: int) -> BigReal:
    return ctx.ell - s_deficit(ctx, t, p)


def peel_guarantee(n_log2: int, t: int, r: int, params: Optional[ParamFns] = None) -> BigReal:
    """f(n, t, 0) para n = 2^n_log2: o comprimento garantido pelo teorema."""
    ell = big(n_log2) / iv.log(r + 1) * iv.log(2)
    ctx = BoundContext(r=r, params=params or default_params(), ell=ell)
    return f_val(ctx, t, 0)


# --- desigualdades -----------------------------------------------------------

def _check(name: str, margin: BigReal, strict: bool = False) -> InequalityCheck:
    return InequalityCheck(name=name, holds=certify(margin, name, strict=strict), margin=margin)


def mono_threshold(params: ParamFns, t: int) -> BigReal:
    return power(4, 1 / (params.phi(t) * (params.phi(t - 1) - params.eta(t))))


def mono_checks(ctx: BoundContext, t: int, p: int) -> List[InequalityCheck]:
    _check_tp(t, p)
    params, ell = ctx.params, ctx.ell
    if not certify(ell - mono_threshold(params, t), "mono precondition on ell"):
        raise exception_2_INVALID_ARGUMENT(f"monotonicity needs ell >= 4^(1/(phi(t)(phi(t-1)-eta(t)))) at t={t}")
    if not certify(2 * power(ell, params.phi(t)) - p, "mono precondition on p"):
        raise exception_2_INVALID_ARGUMENT(f"monotonicity needs p <= 2 ell^phi(t), got p={p}")

    checks = [
        _check("mono-f", power(ell, params.phi(t - 1)) - power(ell, params.phi(t)) - _k(params, t - 1) + _k(params, t)),
        _check("mono-g", _exponent(params, ell, t, p) - _exponent(params, ell, t - 1, p)),
    ]
    if t >= 2:
        checks.append(_check(
            "mono-h",
            power(ell, params.eta(t - 1)) - power(ell, params.eta(t)) - _k(params, t - 2) + _k(params, t - 1),
        ))
    return checks


def verify_mono(ctx: BoundContext, t: int, p: int) -> bool:
    return all(c.holds for c in mono_checks(ctx, t, p))


def bounds_threshold(params: ParamFns, t: int, p: int) -> BigReal:
    """Menor ell aceito pela condição de n grande: (2 + p/2)^{1/phi(t)} + 4^{...}."""
    return power(2 + big(p) / 2, 1 / params.phi(t)) + mono_threshold(params, t)


def check_bounds_preconditions(ctx: BoundContext, t: int, p: int) -> None:
    params, ell = ctx.params, ctx.ell
    if not certify(ell - bounds_threshold(params, t, p), "large-n condition"):
        raise exception_2_INVALID_ARGUMENT(f"ell is below the large-n threshold at t={t} p={p}")
    if not certify(2 * power(ell, params.phi(t)) - p, "small-p condition", strict=True):
        raise exception_2_INVALID_ARGUMENT(f"p={p} is not below 2 ell^phi(t)")


def verify_bounds(ctx: BoundContext, t: int, p: int) -> List[InequalityCheck]:
    """As cinco desigualdades de recursão e de janela do meio, em espaço log."""
    _check_tp(t, p)
    check_bounds_preconditions(ctx, t, p)
    params, ell = ctx.params, ctx.ell
    delta = s_deficit(ctx, t, p)
    c6 = _c6(ctx)
    return [
        _check("recursionf", big(1) / 2 - pow_diff(ell, delta, params.phi(t))),
        _check("recursionh", big(1) / 2 - pow_diff(ell, delta, params.eta(t))),
        _check("recursiong", c6 * _exponent_drop(params, ell, delta, t, p, p + 1) - delta),
        _check("middlef", power(ell - _l3(ctx), params.phi(t - 1)) - power(ell, params.eta(t)) - p),
        _check("middleg", c6 * _exponent(params, ell, t, p) - delta),
    ]


def lowbdstretch_check(ctx: BoundContext, t: int, p: int) -> InequalityCheck:
    _check_tp(t, p)
    params, ell = ctx.params, ctx.ell
    if not certify(ell - power(2, 1 / params.phi(t)), "stretch lower-bound precondition"):
        raise exception_2_INVALID_ARGUMENT(f"stretch lower bound needs ell >= 2^(1/phi(t)) at t={t}")
    _, x = _g_third(ctx, t, p)
    c6, l3 = _c6(ctx), _l3(ctx)
    margin = (
        c6 * _exponent_drop(params, ell, l3, t - 1, p, p)
        + c6
        - l3
        - _log_r1(ctx, big(2 * ctx.r + 1))
        + log1p_neg(x) / iv.log(ctx.r + 1)
    )
    return _check("lowbdstretch", margin)


def verify_lowbdstretch(ctx: BoundContext, t: int, p: int) -> bool:
    return lowbdstretch_check(ctx, t, p).holds


def check_log_inequality(ell: BigReal, c0: BigReal, c1: BigReal, x: BigReal) -> InequalityCheck:
    """(ell - c1 ell^c0)^x >= ell^x - 1/2 sob as hipóteses do lema auxiliar."""
    ell, c0, c1, x = big(ell), big(c0), big(c1), big(x)
    if not (certify(c0, "c0 > 0", strict=True) and certify(1 - c0, "c0 < 1", strict=True)):
        raise exception_2_INVALID_ARGUMENT("log inequality needs 0 < c0 < 1")
    if not certify(c1, "c1 > 0", strict=True):
        raise exception_2_INVALID_ARGUMENT("log inequality needs c1 > 0")
    if not (certify(ell - 1, "ell >= 1") and certify(ell - power(c1, 1 / (1 - c0)), "ell >= c1^(1/(1-c0))")):
        raise exception_2_INVALID_ARGUMENT("log inequality needs ell >= max(1, c1^(1/(1-c0)))")
    if not certify(1 - c0 - log_base(2 * c1, ell) - x, "x <= 1 - c0 - log_ell(2 c1)"):
        raise exception_2_INVALID_ARGUMENT("log inequality needs x <= 1 - c0 - log_ell(2 c1)")
    return _check("log-inequality", big(1) / 2 - pow_diff(ell, c1 * power(ell, c0), x))


def log_inequality_checks(ctx: BoundContext, t: int) -> List[InequalityCheck]:
    """Instâncias do lema auxiliar usadas nas provas das recursões de f e h."""
    params = ctx.params
    c0 = params.gamma(t - 1) + params.phi(t - 1)
    c1 = 7 * _c6(ctx)
    checks = []
    for label, x in (("phi", params.phi(t)), ("eta", params.eta(t))):
        check = check_log_inequality(ctx.ell, c0, c1, x)
        checks.append(replace(check, name=f"log-inequality-{label}"))
    return checks


# --- varredura ---------------------------------------------------------------

def _cell_ell(params: ParamFns, t: int, p: int, factor: int) -> BigReal:
    return big(upper(factor * bounds_threshold(params, t, p)))


def _p_grid(params: ParamFns, t: int, factor: int) -> List[Tuple[int, BigReal]]:
    """
    (p, ell) por célula. Para p em {0, 1, 2} o ell escala o limiar de p; a
    última linha usa o ell de p = 0 e o maior p que ainda cumpre a condição
    de n grande nesse ell.
    """
    rows = [(p, _cell_ell(params, t, p, factor)) for p in (0, 1, 2)]
    ell = rows[0][1]
    room = power(ell - mono_threshold(params, t), params.phi(t))
    p_hi = int(mpmath.floor(lower(2 * (room - 2))))
    if p_hi > 2:
        rows.append((p_hi, ell))
    return rows


def cell_checks(r: int, t: int, p: int, ell: BigReal, params: ParamFns) -> List[InequalityCheck]:
    ctx = BoundContext(r=r, params=params, ell=ell)
    checks: List[InequalityCheck] = []
    checks.extend(mono_checks(ctx, t, p))
    checks.extend(verify_bounds(ctx, t, p))
    checks.append(lowbdstretch_check(ctx, t, p))
    checks.extend(log_inequality_checks(ctx, t))
    return checks


def _rows_for(r: int, t: int, p: int, factor: int, bits: int, max_bits: int) -> List[BoundsRow]:
    """Avalia uma célula, dobrando a precisão enquanto houver veredito inconclusivo."""
    while True:
        with precision(bits):
            params = default_params()
            grid = dict(_p_grid(params, t, factor))
            ell = grid.get(p)
            if ell is None:
                ell = _cell_ell(params, t, 0, factor)
            log2_ell = fmt(log_base(ell, 2))
            try:
                checks = cell_checks(r, t, p, ell, params)
            except InconclusiveError as error:
                if bits * 2 <= max_bits:
                    logger.info("cell r=%d t=%d p=%s inconclusive at %d bits, escalating", r, t, p, bits)
                    bits *= 2
                    continue
                return [_row(r, t, p, factor, log2_ell, "all", "inconclusive", error.detail, bits)]
            except LipathsException as error:
                return [_row(r, t, p, factor, log2_ell, "preconditions", "rejected", error.detail, bits)]
            return [
                _row(r, t, p, factor, log2_ell, c.name, "pass" if c.holds else "fail", fmt(c.margin), bits)
                for c in checks
            ]


def _p_label(p: int) -> str:
    if p.bit_length() <= 64:
        return str(p)
    return mpmath.nstr(mpmath.mpf(p), 8)


def _row(r, t, p, factor, log2_ell, name, verdict, margin, bits) -> BoundsRow:
    return BoundsRow(
        r=r, t=t, p=_p_label(p), ell_factor=factor, log2_ell=log2_ell,
        inequality=name, verdict=verdict, margin=margin, precision=bits,
    )


def sweep(grid: BoundsGrid, max_precision: int = BOUNDS_MAX_PRECISION) -> Iterator[BoundsRow]:
    """Linhas do relatório, na ordem r, t, fator de ell, p."""
    for r in grid.rs:
        for t in range(1, grid.t_max + 1):
            for factor in grid.ell_factors:
                with precision(grid.precision):
                    ps = [p for p, _ in _p_grid(default_params(), t, factor)]
                for p in ps:
                    yield from _rows_for(r, t, p, factor, grid.precision, max_precision)
