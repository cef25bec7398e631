"""Bracketing root finders for the q-digamma zero and its companions.

psi_q has a unique zero x0(q) in (1,2); Gamma_q attains its global
minimum there.  log Gamma_q(x) +/- x psi_q(x) each have a single zero
in (1,2) as well.  Plain bisection is used so that sign decisions stay
within the evaluators' certified error bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .context import Approx, QContext
from .errors import BracketFailure, InvalidArgument
from .qgamma import gamma_q, log_gamma_q, psi_q

MIN_TOL = 1e-13
DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class RootResult:
    x0: float
    residual: float
    bracket: tuple[float, float]
    iterations: int


def _sign(v: Approx) -> int:
    """Error-aware sign: 0 when the value sits inside its noise band."""
    if v.value - v.err > 0.0:
        return 1
    if v.value + v.err < 0.0:
        return -1
    return 0


def _bisect(
    f: Callable[[QContext, float], Approx],
    ctx: QContext,
    lo: float,
    hi: float,
    tol: float,
    increasing: bool,
) -> RootResult:
    """Bisection on [lo, hi]; f must change sign across the bracket.

    An ambiguous midpoint sign (|f| within its error bound) triggers a
    re-evaluation with eps/100 before deciding; if still ambiguous the
    midpoint is accepted as the root (the residual is below resolution).
    """
    if tol < MIN_TOL:
        raise InvalidArgument(f"tol must be >= {MIN_TOL}, got {tol}")
    orient = 1.0 if increasing else -1.0
    flo = f(ctx, lo)
    fhi = f(ctx, hi)
    if not (_sign(flo) * orient < 0 < _sign(fhi) * orient):
        raise BracketFailure(
            f"no certified sign change on [{lo}, {hi}]: "
            f"f(lo)={flo.value:.6g}+/-{flo.err:.2g}, f(hi)={fhi.value:.6g}+/-{fhi.err:.2g}"
        )
    iterations = 0
    mid = 0.5 * (lo + hi)
    fmid = f(ctx, mid)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fmid = f(ctx, mid)
        s = _sign(fmid)
        if s == 0:
            fmid = f(ctx.tighten(100.0), mid)
            s = _sign(fmid)
            if s == 0:
                break
        if s * orient < 0:
            lo = mid
        else:
            hi = mid
        iterations += 1
    return RootResult(x0=mid, residual=fmid.value, bracket=(lo, hi), iterations=iterations)


def psi_zero(ctx: QContext, tol: float = DEFAULT_TOL) -> RootResult:
    """The unique zero of psi_q in (1,2): psi_q(1) < 0 < psi_q(2)."""
    return _bisect(psi_q, ctx, 1.0, 2.0, tol, increasing=True)


def gamma_min(ctx: QContext, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """Location and value of the global minimum of Gamma_q on (0, inf)."""
    root = psi_zero(ctx, tol)
    return root.x0, gamma_q(ctx, root.x0).value


def _g_plus(ctx: QContext, x: float) -> Approx:
    return log_gamma_q(ctx, x) + psi_q(ctx, x).scale(x)


def _g_minus(ctx: QContext, x: float) -> Approx:
    return log_gamma_q(ctx, x) - psi_q(ctx, x).scale(x)


def g_plus_minus_zero(ctx: QContext, sign: str, tol: float = DEFAULT_TOL) -> RootResult:
    """Zero in (1,2) of log Gamma_q(x) + x psi_q(x) (sign='+', increasing)
    or log Gamma_q(x) - x psi_q(x) (sign='-', decreasing)."""
    if sign == "+":
        return _bisect(_g_plus, ctx, 1.0, 2.0, tol, increasing=True)
    if sign == "-":
        return _bisect(_g_minus, ctx, 1.0, 2.0, tol, increasing=False)
    raise InvalidArgument(f"sign must be '+' or '-', got {sign!r}")
