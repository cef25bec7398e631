"""q-arithmetic primitives.

Implements the q-bracket [x]_q = (1-q^x)/(1-q), finite and infinite
q-Pochhammer symbols (a;q)_n, and the basic hypergeometric series
phi10(a; x) = sum_n ((a;q)_n/(q;q)_n) x^n = (ax;q)_inf/(x;q)_inf.

Infinite products are truncated against an a-priori geometric tail
bound so that every returned Approx.err is a true bound:

    |log (a;q)_inf - log (a;q)_N|  <=  |a| q^N / ((1-q)(1-|a| q^N))

All functions are pure; results are safe to share across threads.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .context import Approx, QContext
from .errors import InvalidArgument, NonConvergent

# float64 relative rounding allowance folded into error bounds
_RND = 2.0e-16


def q_bracket(ctx: QContext, x: float) -> float:
    """[x]_q = (1 - q^x)/(1 - q), total on finite x.

    Large |x log q| is handled in log space: for strongly negative
    exponents 1-q^x is computed as -expm1(x log q); when q^x overflows
    the double range the signed infinity is returned.
    """
    if not math.isfinite(x):
        raise InvalidArgument(f"x must be finite, got {x}")
    u = x * ctx.log_q
    if u > 709.0:  # q^x overflows: [x]_q ~ -q^x/(1-q)
        return -math.inf
    return -math.expm1(u) / (1.0 - ctx.q)


def qpoch_finite(ctx: QContext, a: float, n: int) -> float:
    """(a;q)_n = prod_{i<n} (1 - a q^i); the empty product (n=0) is 1.

    Plain left-to-right multiplication so that the recurrence
    (a;q)_{n+1} = (a;q)_n * (1 - a q^n) holds to one rounding.
    """
    if n < 0 or int(n) != n:
        raise InvalidArgument(f"n must be a nonnegative integer, got {n}")
    prod = 1.0
    qi = 1.0
    for _ in range(int(n)):
        prod *= 1.0 - a * qi
        qi *= ctx.q
    return prod


def log_qpoch_finite(ctx: QContext, a: float, n: int) -> Approx:
    """log (a;q)_n for products with all factors positive.

    Sums log1p(-a q^i); used where ratios of long finite products are
    compared in log space.
    """
    if n < 0 or int(n) != n:
        raise InvalidArgument(f"n must be a nonnegative integer, got {n}")
    if n == 0:
        return Approx(0.0, 0.0)
    lnq = ctx.log_q
    i = np.arange(int(n), dtype=np.float64)
    f = a * np.exp(i * lnq)
    if np.any(f >= 1.0):
        raise InvalidArgument("finite product has a nonpositive factor")
    terms = np.log1p(-f)
    s = float(np.sum(terms))
    return Approx(s, _RND * float(np.sum(np.abs(terms))) + 1e-300)


@lru_cache(maxsize=16384)
def _log_qpoch_kernel(q: float, a: float, eps: float, max_terms: int) -> tuple[float, float, int]:
    """log (a;q)_inf for |a| < 1: (log value, log-error bound, terms used).

    N is chosen from the a-priori tail bound, then the last included
    factor is monitored as a second stopping criterion.
    """
    if a == 0.0:
        return 0.0, 0.0, 0
    lnq = math.log(q)
    absa = abs(a)
    # solve |a| q^N <= eps(1-q)/2, which makes the tail bound <= eps
    target = eps * (1.0 - q) / 2.0
    if absa <= target:
        n_terms = 1
    else:
        n_terms = max(1, math.ceil((math.log(target) - math.log(absa)) / lnq))
    # monitor: also require the next factor's log to sit under eps
    while absa * math.exp(n_terms * lnq) / (1.0 - absa * math.exp(n_terms * lnq)) > eps:
        n_terms += max(1, n_terms // 8)
        if n_terms > max_terms:
            break
    if n_terms > max_terms:
        raise NonConvergent(
            f"(a;q)_inf with a={a}, q={q} needs {n_terms} factors; cap is {max_terms}"
        )
    i = np.arange(n_terms, dtype=np.float64)
    terms = np.log1p(-a * np.exp(i * lnq))
    logv = float(np.sum(terms))
    aqn = absa * math.exp(n_terms * lnq)
    tail = aqn / ((1.0 - q) * (1.0 - aqn))
    logerr = tail + _RND * float(np.sum(np.abs(terms))) + 1e-300
    return logv, logerr, n_terms


def log_qpoch_inf(ctx: QContext, a: float) -> Approx:
    """log (a;q)_inf for 0 <= a < 1 (all factors positive)."""
    if not (0.0 <= a < 1.0):
        raise InvalidArgument(f"log form needs a in [0,1), got {a}")
    logv, logerr, _ = _log_qpoch_kernel(ctx.q, a, ctx.eps, ctx.max_terms)
    return Approx(logv, logerr)


def qpoch_inf(ctx: QContext, a: float) -> Approx:
    """(a;q)_inf with a certified truncation error.

    Rejects |a| >= 1 (the tail bound used here does not apply there,
    so no error field could be honestly reported).
    """
    if a == 0.0:
        return Approx(1.0, 0.0)
    if abs(a) >= 1.0:
        raise InvalidArgument(f"qpoch_inf needs |a| < 1, got a={a}")
    logv, logerr, _ = _log_qpoch_kernel(ctx.q, a, ctx.eps, ctx.max_terms)
    v = math.exp(logv)
    if v > 1.0:
        # retarget so the absolute error lands under eps
        logv, logerr, _ = _log_qpoch_kernel(ctx.q, a, ctx.eps / (2.0 * v), ctx.max_terms)
        v = math.exp(logv)
    return Approx(v, v * math.expm1(logerr))


def _phi10_series(
    q: float, a: float, x: float, eps: float, max_terms: int
) -> tuple[float, float, int]:
    """Truncated sum_n ((a;q)_n/(q;q)_n) x^n with a geometric tail bound."""
    total = 0.0
    abs_total = 0.0
    term = 1.0
    qn = 1.0  # q^n
    n = 0
    while True:
        total += term
        abs_total += abs(term)
        # ratio of term n+1 to term n, and a decreasing bound on later ratios
        rho = abs(x) * (1.0 + abs(a) * qn) / (1.0 - qn * q)
        if rho < 1.0:
            tail = abs(term) * rho / (1.0 - rho)
            if tail <= eps:
                return total, tail + _RND * abs_total + 1e-300, n + 1
        if n + 1 > max_terms:
            raise NonConvergent(f"phi10 series did not converge in {max_terms} terms")
        term *= (1.0 - a * qn) / (1.0 - qn * q) * x
        qn *= q
        n += 1


def phi10(ctx: QContext, a: float, x: float, form: str = "series") -> Approx:
    """Basic hypergeometric series phi10(a; x) in base q.

    form="series" sums the defining series; form="product" evaluates
    (ax;q)_inf/(x;q)_inf with propagated error.  Both forms agree
    within the sum of their declared errors.
    """
    if abs(x) >= 1.0:
        raise InvalidArgument(f"phi10 needs |x| < 1, got x={x}")
    if form == "series":
        v, e, _ = _phi10_series(ctx.q, a, x, ctx.eps, ctx.max_terms)
        return Approx(v, e)
    if form == "product":
        if abs(a * x) >= 1.0:
            raise InvalidArgument(f"product form needs |a*x| < 1, got {a * x}")
        num = qpoch_inf(ctx, a * x)
        den = qpoch_inf(ctx, x)
        if den.err >= abs(den.value):
            raise NonConvergent("phi10 denominator lost all precision")
        v = num.value / den.value
        e = (num.err + abs(v) * den.err) / (abs(den.value) - den.err)
        return Approx(v, e)
    raise InvalidArgument(f"form must be 'series' or 'product', got {form!r}")
