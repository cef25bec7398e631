"""q-gamma and q-digamma functions.

    log Gamma_q(x) = log (q;q)_inf - log (q^x;q)_inf + (1-x) log(1-q)
    psi_q(x)       = -log(1-q) + (log q) * sum_{n>=1} q^{nx}/(1-q^n)
    psi_q^{(k)}(x) = (log q)^{k+1} * sum_{n>=1} n^k q^{nx}/(1-q^n)

The digamma series carries the tail bound
|log q| q^{Nx} / ((1-q)(1-q^x)); derivative tails use
sum_{m>N} m^k r^m <= (N+1)^k r^{N+1} / (1 - r e^{k/(N+1)}).

gamma_q_constant evaluates Bradley's q-analogue of the Euler constant

    gamma_q = log(1-q) - (log q / (1-q)) * sum_{i>=1} q^i / [i]_q

which equals -psi_q(1).
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .context import Approx, QContext
from .errors import InvalidArgument, NonConvergent, Overflow
from .qcore import _log_qpoch_kernel

_RND = 2.0e-16

#: arguments with q^x below the double underflow floor are treated as converged
_UNDERFLOW_EXP = -745.0

MAX_PSI_DERIV_ORDER = 6


def _require_positive(x: float, what: str = "x") -> None:
    if not (math.isfinite(x) and x > 0.0):
        raise InvalidArgument(f"{what} must be a positive finite real, got {x}")


def log_gamma_q(ctx: QContext, x: float) -> Approx:
    """log Gamma_q(x) for x > 0, error propagated from both products."""
    _require_positive(x)
    q = ctx.q
    le, ee, _ = _log_qpoch_kernel(q, q, ctx.eps / 2.0, ctx.max_terms)
    u = x * ctx.log_q
    ax = math.exp(u) if u > _UNDERFLOW_EXP else 0.0
    lx, ex, _ = _log_qpoch_kernel(q, ax, ctx.eps / 2.0, ctx.max_terms)
    v = le - lx + (1.0 - x) * math.log1p(-q)
    return Approx(v, ee + ex + _RND * (abs(v) + 1.0))


def gamma_q(ctx: QContext, x: float) -> Approx:
    """Gamma_q(x) = exp(log_gamma_q(x)); raises Overflow out of range."""
    lg = log_gamma_q(ctx, x)
    if lg.value > 709.0:
        raise Overflow(f"Gamma_q({x}) exceeds the double range (log = {lg.value:.3g})")
    return lg.exp()


def _psi_series_length(q: float, x: float, eps: float) -> int:
    """Smallest N with |log q| q^{Nx} / ((1-q)(1-q^x)) <= eps."""
    lnq = math.log(q)
    u = x * lnq
    t = math.exp(u) if u > _UNDERFLOW_EXP else 0.0
    if t == 0.0:
        return 0
    target = eps * (1.0 - q) * (1.0 - t) / (-lnq)
    if target >= 1.0:
        return 1
    if target <= 0.0:
        return 1 << 62  # forces the caller's cap check
    return max(1, math.ceil(math.log(target) / u))


def _psi_series(q: float, x: float, eps: float, max_terms: int) -> tuple[float, float, int]:
    """psi_q(x) by direct summation: (value, error bound, terms used)."""
    lnq = math.log(q)
    n_terms = _psi_series_length(q, x, eps)
    if n_terms > max_terms:
        raise NonConvergent(f"psi_q series at x={x}, q={q} needs {n_terms} terms")
    head = -math.log1p(-q)
    if n_terms == 0:
        return head, 1e-300, 0
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    terms = np.exp(n * (x * lnq)) / (-np.expm1(n * lnq))
    s = float(np.sum(terms))
    t = math.exp(x * lnq)
    tail = (-lnq) * math.exp(n_terms * x * lnq) / ((1.0 - q) * (1.0 - t))
    err = tail + _RND * ((-lnq) * s + abs(head)) + 1e-300
    return head + lnq * s, err, n_terms


def psi_q(ctx: QContext, x: float) -> Approx:
    """q-digamma psi_q(x) for x > 0 with err <= ctx.eps."""
    _require_positive(x)
    v, e, _ = _psi_series(ctx.q, x, ctx.eps, ctx.max_terms)
    return Approx(v, e)


def _tail_power_geom(r: float, n_terms: int, k: int) -> float:
    """Bound on sum_{m>N} m^k r^m via m^k <= (N+1)^k e^{k(m-N-1)/(N+1)}."""
    growth = r * math.exp(k / (n_terms + 1.0))
    if growth >= 1.0:
        return math.inf
    logt = (n_terms + 1.0) * math.log(r) + k * math.log(n_terms + 1.0)
    if logt < _UNDERFLOW_EXP:
        return 0.0
    return math.exp(logt) / (1.0 - growth)


def _psi_deriv_series(
    q: float, x: float, k: int, eps: float, max_terms: int
) -> tuple[float, float, int]:
    """k-th derivative of psi_q via term-wise differentiation."""
    lnq = math.log(q)
    lam = -lnq
    u = x * lnq
    r = math.exp(u) if u > _UNDERFLOW_EXP else 0.0
    scale = lam ** (k + 1) / (1.0 - q)
    if r == 0.0 or scale * _tail_power_geom(r, 0, k) == 0.0:
        return 0.0, 1e-300, 0
    est = 2.0 * k / (x * lam)
    if not math.isfinite(est) or est > max_terms:
        raise NonConvergent(f"psi_q^({k}) series at x={x}, q={q} exceeds the term cap")
    n_terms = max(8, math.ceil(est), min(_psi_series_length(q, x, eps), max_terms + 1))
    while scale * _tail_power_geom(r, n_terms, k) > eps:
        n_terms = math.ceil(1.5 * n_terms) + 8
        if n_terms > max_terms:
            raise NonConvergent(
                f"psi_q^({k}) series at x={x}, q={q} exceeded {max_terms} terms"
            )
    if n_terms > max_terms:
        raise NonConvergent(f"psi_q^({k}) series at x={x}, q={q} needs {n_terms} terms")
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    terms = n**k * np.exp(n * u) / (-np.expm1(n * lnq))
    s = float(np.sum(terms))
    sgn_factor = lnq ** (k + 1)
    tail = scale * _tail_power_geom(r, n_terms, k)
    err = tail + _RND * abs(sgn_factor) * s + 1e-300
    return sgn_factor * s, err, n_terms


def psi_q_deriv(ctx: QContext, x: float, k: int) -> Approx:
    """k-th derivative of psi_q, 0 <= k <= 6; k=0 delegates to psi_q.

    The sign alternates: (-1)^(k+1) psi_q^{(k)}(x) > 0 for k >= 1.
    """
    _require_positive(x)
    if int(k) != k or not (0 <= k <= MAX_PSI_DERIV_ORDER):
        raise InvalidArgument(f"derivative order must be an integer in [0,6], got {k}")
    if k == 0:
        return psi_q(ctx, x)
    v, e, _ = _psi_deriv_series(ctx.q, x, int(k), ctx.eps, ctx.max_terms)
    return Approx(v, e)


@lru_cache(maxsize=4096)
def _gamma_q_constant_kernel(q: float, eps: float, max_terms: int) -> tuple[float, float]:
    lnq = math.log(q)
    # tail of sum q^i/[i]_q after N terms is below q^{N+1}/(1-q)
    target = eps * (1.0 - q) ** 2 / (-lnq)
    n_terms = max(1, math.ceil(math.log(min(target, 0.5)) / lnq))
    if n_terms > max_terms:
        raise NonConvergent(f"gamma_q constant at q={q} needs {n_terms} terms")
    i = np.arange(1, n_terms + 1, dtype=np.float64)
    qi = np.exp(i * lnq)
    brackets = -np.expm1(i * lnq) / (1.0 - q)  # [i]_q
    s = float(np.sum(qi / brackets))
    v = math.log1p(-q) - lnq / (1.0 - q) * s
    tail = (-lnq) * math.exp((n_terms + 1) * lnq) / (1.0 - q) ** 2
    return v, tail + _RND * (abs(v) + (-lnq) / (1.0 - q) * s) + 1e-300


def gamma_q_constant(ctx: QContext) -> Approx:
    """Bradley's q-Euler constant; equals -psi_q(1) and lies in (0,1)."""
    v, e = _gamma_q_constant_kernel(ctx.q, ctx.eps, ctx.max_terms)
    return Approx(v, e)


def classical_log_gamma(x: float) -> float:
    """Classical log Gamma(x) for x > 0 (reference for q->1 limits)."""
    _require_positive(x)
    return math.lgamma(x)
