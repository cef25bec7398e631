"""Registry of inequality / convexity / monotonicity checks.

Every entry evaluates one claim about Gamma_q, psi_q, or the q-series
on sampled parameters and returns a numeric margin: the minimum
oriented gap between adjacent members of the inequality chain, with
positive margin meaning the claim held on that sample.

A sample passes only when its margin clears the combined evaluation
error of the chain members; anything inside the noise band is reported
inconclusive, never pass.  Chains whose gaps collapse exponentially
(digamma bounds, ratio sandwiches, telescoping sums) are certified
through dedicated difference series evaluated term by term, which keep
full relative precision at any magnitude instead of subtracting two
nearly equal O(1) quantities.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .context import Approx, QContext, Q_MIN
from .errors import (
    DomainViolation,
    InvalidArgument,
    NonConvergent,
    Overflow,
    UnknownCheck,
)
from .qcore import log_qpoch_finite, q_bracket
from .qgamma import (
    _log_qpoch_kernel,
    _tail_power_geom,
    classical_log_gamma,
    gamma_q,
    gamma_q_constant,
    log_gamma_q,
    psi_q,
    psi_q_deriv,
)
from .identities import divisors, moebius, psi_q_deriv_at_base, totient
from .roots import g_plus_minus_zero, psi_zero

_RND = 2.0e-16

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


# ---------------------------------------------------------------------------
# data model
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ParamSpec:
    """One sampled parameter: domain, scale, and structural hints."""

    name: str
    lo: float
    hi: float
    integer: bool = False
    log_scale: bool | None = None  # None: log-uniform iff the span exceeds 2 decades
    fraction_of: str | None = None  # value = draw * value of another parameter
    count_by: str | None = None     # vector parameter sized by another (integer) one
    exclude: tuple[float, float] | None = None
    note: str = ""

    def uses_log_scale(self) -> bool:
        if self.log_scale is not None:
            return self.log_scale
        return self.lo > 0.0 and self.hi / self.lo > 100.0


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    statement: str
    anchor: str
    kind: str  # chain-inequality | convexity | monotonicity | bound
    params: tuple[ParamSpec, ...]
    strict: bool = True
    uses_q: bool = True


@dataclass(frozen=True)
class ChainMember:
    label: str
    value: float
    err: float


@dataclass(frozen=True)
class Chain:
    """Ascending chain members plus the certified gaps between them."""

    members: tuple[ChainMember, ...]
    gaps: tuple[tuple[float, float], ...]  # (gap value, gap error), one per adjacent pair


@dataclass(frozen=True)
class CheckOutcome:
    id: str
    params: dict[str, float]
    values: tuple[ChainMember, ...]
    margin: float
    verdict: str
    reason: str | None = None


def _member(label: str, v: Approx) -> ChainMember:
    return ChainMember(label, v.value, v.err)


def _chain(*members: tuple[str, Approx], gaps: list[Approx] | None = None) -> Chain:
    ms = tuple(_member(lbl, v) for lbl, v in members)
    if gaps is None:
        out = []
        for a, b in zip(members[:-1], members[1:]):
            out.append((b[1].value - a[1].value, b[1].err + a[1].err))
        return Chain(ms, tuple(out))
    if len(gaps) != len(ms) - 1:
        raise InvalidArgument("gap list does not match chain length")
    return Chain(ms, tuple((g.value, g.err) for g in gaps))


# ---------------------------------------------------------------------------
# difference series: sum_{m>=1} r^m coef(m) with a certified tail
# ---------------------------------------------------------------------------

def _gap_series(
    ctx: QContext,
    x_eff: float,
    coef_fn: Callable[[np.ndarray], np.ndarray],
    coef_scale: float,
    growth_k: int = 0,
) -> Approx:
    """Sum q^{m*x_eff} coef(m) for m >= 1, |coef(m)| <= coef_scale * m^growth_k.

    The truncation target adapts to the first term so the result keeps
    ~1e-12 relative precision even when the sum is exponentially small.
    """
    q = ctx.q
    lnq = math.log(q)
    u = x_eff * lnq
    if u < -745.0:
        return Approx(0.0, 1e-300)
    r = math.exp(u)
    head = np.abs(coef_fn(np.arange(1.0, 3.0))) * np.array([r, r * r])
    t1 = float(np.max(head))
    target = min(ctx.eps, max(t1 * 1e-12, 1e-280))
    n_terms = 8
    while coef_scale * _tail_power_geom(r, n_terms, growth_k) > target:
        n_terms = math.ceil(1.6 * n_terms) + 8
        if n_terms > ctx.max_terms:
            raise NonConvergent(f"difference series needs more than {ctx.max_terms} terms")
    m = np.arange(1, n_terms + 1, dtype=np.float64)
    terms = np.exp(m * u) * coef_fn(m)
    tail = coef_scale * _tail_power_geom(r, n_terms, growth_k)
    return Approx(float(np.sum(terms)), tail + _RND * float(np.sum(np.abs(terms))) + 1e-300)


def _qm(ctx: QContext, m: np.ndarray) -> np.ndarray:
    return np.exp(m * ctx.log_q)


def _gap_psi_vs_log_bracket(ctx: QContext, x: float) -> tuple[Approx, Approx]:
    """(psi - lower, upper - psi) for the log-bracket sandwich of psi_q."""
    lam = -ctx.log_q

    def lower(m: np.ndarray) -> np.ndarray:
        qm = _qm(ctx, m)
        return 1.0 / m - lam * qm / (1.0 - qm)

    def upper(m: np.ndarray) -> np.ndarray:
        return lam / (1.0 - _qm(ctx, m)) - 1.0 / m

    g_lo = _gap_series(ctx, x, lower, 1.0)
    g_hi = _gap_series(ctx, x, upper, lam / (1.0 - ctx.q))
    return g_lo, g_hi


def _gap_power_ratio(
    ctx: QContext, x: float, a: float, n: int | None
) -> tuple[Approx, Approx]:
    """Certified gaps for the ratio sandwich

        g(x)^{1-a} < R < g(x+a)^{1-a}

    where R is Gamma_q(x+1)/Gamma_q(x+a) (n=None, g(y)=[y]_q scaled) or
    the length-n shifted factorial ratio (g(y) = (1-q^y)/(1-q^{y+n})).
    """
    lam = -ctx.log_q

    def fac(m: np.ndarray) -> np.ndarray:
        if n is None:
            return np.ones_like(m)
        return 1.0 - np.exp(-(lam * n) * m)

    def lower(m: np.ndarray) -> np.ndarray:
        qm = _qm(ctx, m)
        qma = np.exp(-(lam * a) * m)
        return fac(m) / m * ((1.0 - a) - (qma - qm) / (1.0 - qm))

    def upper(m: np.ndarray) -> np.ndarray:
        qm = _qm(ctx, m)
        qma = np.exp(-(lam * a) * m)
        return fac(m) / m * ((qma - qm) / (1.0 - qm) - (1.0 - a) * qma)

    return _gap_series(ctx, x, lower, 1.0), _gap_series(ctx, x, upper, 1.0)


def _gap_psi_deriv1(ctx: QContext, x: float) -> tuple[Approx, Approx]:
    """(mid - psi'(x+1), psi'(x) - mid) with mid = -q^x log q/(1-q^x)."""
    lam = -ctx.log_q

    def lower(m: np.ndarray) -> np.ndarray:
        qm = _qm(ctx, m)
        return lam * (1.0 - lam * m * qm / (1.0 - qm))

    def upper(m: np.ndarray) -> np.ndarray:
        return lam * (lam * m / (1.0 - _qm(ctx, m)) - 1.0)

    g_lo = _gap_series(ctx, x, lower, lam, growth_k=1)
    g_hi = _gap_series(ctx, x, upper, lam * lam / (1.0 - ctx.q), growth_k=1)
    return g_lo, g_hi


def _gap_psi_deriv2(ctx: QContext, x: float) -> tuple[Approx, Approx]:
    """(mid - psi''(x), psi''(x+1) - mid), mid = -q^x (log q)^2/(1-q^x)^2."""
    lam = -ctx.log_q

    def lower(m: np.ndarray) -> np.ndarray:
        qm = _qm(ctx, m)
        return lam * lam * m * (lam * m / (1.0 - qm) - 1.0)

    def upper(m: np.ndarray) -> np.ndarray:
        qm = _qm(ctx, m)
        return lam * lam * m * (1.0 - lam * m * qm / (1.0 - qm))

    scale = lam**3 / (1.0 - ctx.q) + lam * lam
    g_lo = _gap_series(ctx, x, lower, scale, growth_k=2)
    g_hi = _gap_series(ctx, x, upper, lam * lam, growth_k=2)
    return g_lo, g_hi


def _gap_telescope_lower(ctx: QContext, x: float, n: int) -> Approx:
    """log(Gamma_q(x)/Gamma_q(x+n)) - (x psi_q(x) - (x+n) psi_q(x+n)) > 0."""
    lam = -ctx.log_q

    def coef(m: np.ndarray) -> np.ndarray:
        u = lam * m
        e = np.exp(-n * u)
        return ((1.0 - e) + u * (x - (x + n) * e)) / (m * (1.0 - _qm(ctx, m)))

    return _gap_series(ctx, x, coef, (1.0 + lam * x) / (1.0 - ctx.q))


def _gap_xpsi_second_diff(ctx: QContext, x: float, h: float) -> Approx:
    """s(x-h) + s(x+h) - 2 s(x) for s(y) = y psi_q(y), summed directly."""
    lam = -ctx.log_q

    def coef(m: np.ndarray) -> np.ndarray:
        u = lam * h * m
        e = np.exp(-u)
        qm = np.exp(-lam * m)
        return lam * (h * (1.0 - e * e) - x * (1.0 - e) ** 2) / (1.0 - qm)

    return _gap_series(ctx, x - h, coef, lam * (h + x) / (1.0 - ctx.q))


# ---------------------------------------------------------------------------
# shared evaluation helpers
# ---------------------------------------------------------------------------

def _log_bracket(ctx: QContext, x: float) -> Approx:
    v = math.log(q_bracket(ctx, x))
    return Approx(v, _RND * (abs(v) + 1.0))


def _exact(v: float) -> Approx:
    return Approx(v, _RND * (abs(v) + 1.0))


def _log_euler(ctx: QContext, base: float) -> Approx:
    logv, logerr, _ = _log_qpoch_kernel(base, base, ctx.eps, ctx.max_terms)
    return Approx(logv, logerr)


def _log_qpoch(ctx: QContext, base: float, a: float) -> Approx:
    logv, logerr, _ = _log_qpoch_kernel(base, a, ctx.eps, ctx.max_terms)
    return Approx(logv, logerr)


def _log_f(ctx: QContext, y: float) -> Approx:
    """log of (Gamma_q(y+1))^(1/y)."""
    return log_gamma_q(ctx, y + 1.0).scale(1.0 / y)


def _classical(x: float) -> Approx:
    v = classical_log_gamma(x)
    return Approx(v, 1e-14 * (abs(v) + 1.0))


# ---------------------------------------------------------------------------
# entry evaluators: (ctx, params) -> (chains, derived-params echo)
# ---------------------------------------------------------------------------

Chains = list[Chain]
EvalResult = tuple[Chains, dict[str, float]]


def _ev_l2_psi_bounds(ctx: QContext, p: dict) -> EvalResult:
    x = p["x"]
    lb = _log_bracket(ctx, x)
    t = math.exp(x * ctx.log_q)
    lower = _exact(t * ctx.log_q / (1.0 - t)) + lb
    mid = psi_q(ctx, x)
    g_lo, g_hi = _gap_psi_vs_log_bracket(ctx, x)
    return [_chain(
        ("q^x log q/(1-q^x) + log [x]_q", lower),
        ("psi_q(x)", mid),
        ("log [x]_q", lb),
        gaps=[g_lo, g_hi],
    )], {}


def _ev_psi12_signs(ctx: QContext, p: dict) -> EvalResult:
    q = ctx.q
    lower1 = _exact(q * ctx.log_q / (1.0 - q))
    lower2 = _exact(q * q * ctx.log_q / (1.0 - q * q) + math.log1p(q))
    return [_chain(
        ("q log q/(1-q)", lower1),
        ("psi_q(1)", psi_q(ctx, 1.0)),
        ("0", Approx(0.0, 0.0)),
        ("q^2 log q/(1-q^2) + log(1+q)", lower2),
        ("psi_q(2)", psi_q(ctx, 2.0)),
    )], {}


def _ev_psi1_range(ctx: QContext, p: dict) -> EvalResult:
    return [_chain(
        ("-1", Approx(-1.0, 0.0)),
        ("psi_q(1)", psi_q(ctx, 1.0)),
        ("0", Approx(0.0, 0.0)),
    )], {}


def _ev_gammaq_const_range(ctx: QContext, p: dict) -> EvalResult:
    return [_chain(
        ("0", Approx(0.0, 0.0)),
        ("gamma_q", gamma_q_constant(ctx)),
        ("1", Approx(1.0, 0.0)),
    )], {}


def _ev_gamma_global_min(ctx: QContext, p: dict) -> EvalResult:
    x = p["x"]
    root = psi_zero(ctx, tol=1e-9)
    gmin = gamma_q(ctx, root.x0)
    gmin = Approx(gmin.value, gmin.err + 1e-12 * abs(gmin.value))
    return [_chain(
        ("Gamma_q(x0)", gmin),
        ("Gamma_q(x)", gamma_q(ctx, x)),
    )], {"x0": root.x0}


def _ev_gpm_mono_zero(ctx: QContext, p: dict) -> EvalResult:
    x1, dx = p["x1"], p["dx"]
    x2 = x1 + dx

    def fplus(x: float) -> Approx:
        return log_gamma_q(ctx, x) + psi_q(ctx, x).scale(x)

    def fminus(x: float) -> Approx:
        return log_gamma_q(ctx, x) - psi_q(ctx, x).scale(x)

    rp = g_plus_minus_zero(ctx, "+", tol=1e-9)
    rm = g_plus_minus_zero(ctx, "-", tol=1e-9)
    chains = [
        _chain(("f+(x1)", fplus(x1)), ("f+(x2)", fplus(x2))),
        _chain(("f-(x2)", fminus(x2)), ("f-(x1)", fminus(x1))),
        _chain(("1", Approx(1.0, 0.0)),
               ("root of f+", Approx(rp.x0, 1e-9)),
               ("2", Approx(2.0, 0.0))),
        _chain(("1", Approx(1.0, 0.0)),
               ("root of f-", Approx(rm.x0, 1e-9)),
               ("2", Approx(2.0, 0.0))),
    ]
    return chains, {"x2": x2, "root_plus": rp.x0, "root_minus": rm.x0}


def _ev_telescope(ctx: QContext, p: dict) -> EvalResult:
    x, n = p["x"], int(p["n"])
    sx = psi_q(ctx, x).scale(x)
    sxn = psi_q(ctx, x + n).scale(x + n)
    amp = sxn - sx
    mid = log_gamma_q(ctx, x) - log_gamma_q(ctx, x + n)
    g_lo = _gap_telescope_lower(ctx, x, n)
    g_hi = amp - mid
    return [_chain(
        ("x psi(x) - (x+n) psi(x+n)", -amp),
        ("log Gamma_q(x)/Gamma_q(x+n)", mid),
        ("(x+n) psi(x+n) - x psi(x)", amp),
        gaps=[g_lo, g_hi],
    )], {}


def _ev_xpsi_convex(ctx: QContext, p: dict) -> EvalResult:
    x = p["x"]
    h = min(x / 3.0, 0.25)

    def s(y: float) -> Approx:
        return psi_q(ctx, y).scale(y)

    inner = s(x).scale(2.0)
    outer = s(x - h) + s(x + h)
    gap = _gap_xpsi_second_diff(ctx, x, h)
    return [_chain(
        ("2 x psi(x)", inner),
        ("(x-h)psi(x-h) + (x+h)psi(x+h)", outer),
        gaps=[gap],
    )], {"h": h}


def _closed_psi_sum(ctx: QContext, n: int, k: int) -> Approx:
    """Closed form of sum_{i<n} psi_q^{(k)}(i/n) via the base q^(1/n)."""
    q = ctx.q
    root = q ** (1.0 / n)
    value = psi_q_deriv_at_base(ctx, root, 1.0, k).scale(float(n ** (k + 1))) \
        - psi_q_deriv(ctx, 1.0, k)
    if k == 0:
        value = value - _exact(n * (math.log1p(-q) - math.log1p(-root)))
    return value


def _ev_psisum_a(ctx: QContext, p: dict) -> EvalResult:
    n = int(p["n"])
    lhs = _closed_psi_sum(ctx, n, 0)
    rhs = psi_q(ctx, 0.5).scale(n - 1)
    return [_chain(("closed form of sum psi(i/n)", lhs),
                   ("(n-1) psi(1/2)", rhs))], {}


def _ev_psisum_b(ctx: QContext, p: dict) -> EvalResult:
    n, k = int(p["n"]), int(p["k"])
    order = 2 * k - 1
    lhs = psi_q_deriv(ctx, 0.5, order).scale(n - 1)
    rhs = _closed_psi_sum(ctx, n, order)
    return [_chain((f"(n-1) psi^({order})(1/2)", lhs),
                   (f"closed form of sum psi^({order})(i/n)", rhs))], {}


def _ev_psisum_c(ctx: QContext, p: dict) -> EvalResult:
    n, k = int(p["n"]), int(p["k"])
    order = 2 * k
    lhs = _closed_psi_sum(ctx, n, order)
    rhs = psi_q_deriv(ctx, 0.5, order).scale(n - 1)
    return [_chain((f"closed form of sum psi^({order})(i/n)", lhs),
                   (f"(n-1) psi^({order})(1/2)", rhs))], {}


def _ev_ratio_sandwich(ctx: QContext, p: dict) -> EvalResult:
    x, a = p["x"], p["a"]
    lower = (log_gamma_q(ctx, x + 1.0) - log_gamma_q(ctx, x)).scale(1.0 - a)
    mid = log_gamma_q(ctx, x + 1.0) - log_gamma_q(ctx, x + a)
    upper = (log_gamma_q(ctx, x + a + 1.0) - log_gamma_q(ctx, x + a)).scale(1.0 - a)
    g_lo, g_hi = _gap_power_ratio(ctx, x, a, None)
    return [_chain(
        ("(1-a) log g(x)", lower),
        ("log Gamma(x+1)/Gamma(x+a)", mid),
        ("(1-a) log g(x+a)", upper),
        gaps=[g_lo, g_hi],
    )], {}


def _ev_gautschi(ctx: QContext, p: dict) -> EvalResult:
    x, a = p["x"], p["a"]
    lower = _log_bracket(ctx, x).scale(1.0 - a)
    mid = log_gamma_q(ctx, x + 1.0) - log_gamma_q(ctx, x + a)
    upper = _log_bracket(ctx, x + a).scale(1.0 - a)
    g_lo, g_hi = _gap_power_ratio(ctx, x, a, None)
    return [_chain(
        ("(1-a) log [x]_q", lower),
        ("log Gamma(x+1)/Gamma(x+a)", mid),
        ("(1-a) log [x+a]_q", upper),
        gaps=[g_lo, g_hi],
    )], {}


def _ev_psi_diff_d1(ctx: QContext, p: dict) -> EvalResult:
    x = p["x"]
    t = math.exp(x * ctx.log_q)
    mid = _exact(-t * ctx.log_q / (1.0 - t))
    g_lo, g_hi = _gap_psi_deriv1(ctx, x)
    return [_chain(
        ("psi'(x+1)", psi_q_deriv(ctx, x + 1.0, 1)),
        ("-q^x log q/(1-q^x)", mid),
        ("psi'(x)", psi_q_deriv(ctx, x, 1)),
        gaps=[g_lo, g_hi],
    )], {}


def _ev_psi_diff_d2(ctx: QContext, p: dict) -> EvalResult:
    x = p["x"]
    t = math.exp(x * ctx.log_q)
    mid = _exact(-t * ctx.log_q**2 / (1.0 - t) ** 2)
    g_lo, g_hi = _gap_psi_deriv2(ctx, x)
    return [_chain(
        ("psi''(x)", psi_q_deriv(ctx, x, 2)),
        ("-q^x (log q)^2/(1-q^x)^2", mid),
        ("psi''(x+1)", psi_q_deriv(ctx, x + 1.0, 2)),
        gaps=[g_lo, g_hi],
    )], {}


def _ev_add1_a(ctx: QContext, p: dict) -> EvalResult:
    x = p["x"]
    return [_chain(("psi'(x+1)", psi_q_deriv(ctx, x + 1.0, 1)),
                   ("1/x", _exact(1.0 / x)))], {}


def _ev_add1_b(ctx: QContext, p: dict) -> EvalResult:
    x = p["x"]
    return [_chain(("-1/x^2", _exact(-1.0 / (x * x))),
                   ("psi''(x+1)", psi_q_deriv(ctx, x + 1.0, 2)))], {}


def _ev_f_logconcave_inc(ctx: QContext, p: dict) -> EvalResult:
    x = p["x"]
    h = min(x / 2.0, 0.5)
    delta = 0.3
    concave = _chain(
        ("log f(x-h) + log f(x+h)", _log_f(ctx, x - h) + _log_f(ctx, x + h)),
        ("2 log f(x)", _log_f(ctx, x).scale(2.0)),
    )
    increasing = _chain(
        ("log f(x)", _log_f(ctx, x)),
        ("log f(x+d)", _log_f(ctx, x + delta)),
    )
    return [concave, increasing], {"h": h, "delta": delta}


def _ev_f_range(ctx: QContext, p: dict) -> EvalResult:
    x = p["x"]
    return [_chain(
        ("-gamma_q", -gamma_q_constant(ctx)),
        ("log f(x)", _log_f(ctx, x)),
        ("-log(1-q)", _exact(-math.log1p(-ctx.q))),
    )], {}


def _ev_recip_f_logconvex(ctx: QContext, p: dict) -> EvalResult:
    x = p["x"]
    h = min(x / 2.0, 0.5)

    def u(y: float) -> Approx:
        return -_log_f(ctx, y)

    return [_chain(
        ("2 u(x)", u(x).scale(2.0)),
        ("u(x-h) + u(x+h)", u(x - h) + u(x + h)),
    )], {"h": h}


def _ev_g_sandwich(ctx: QContext, p: dict) -> EvalResult:
    x, a = p["x"], p["a"]

    def log_g(y: float) -> Approx:
        return (_log_f(ctx, y) - _log_bracket(ctx, y + 1.0)).scale(1.0 / (y + 1.0))

    mid = log_gamma_q(ctx, x + a + 1.0).scale(1.0 / (x + a)) \
        - log_gamma_q(ctx, x + 2.0).scale(1.0 / (x + 1.0))
    return [_chain(
        ("(1-a) log g(x)", log_g(x).scale(1.0 - a)),
        ("log mid ratio", mid),
        ("(1-a) log g(x+a)", log_g(x + a).scale(1.0 - a)),
    )], {}


def _ev_f_over_x(ctx: QContext, p: dict) -> EvalResult:
    x = p["x"]
    h = min(x / 2.0, 0.5)
    delta = 0.3

    def lF(y: float) -> Approx:
        return _log_f(ctx, y) - _exact(math.log(y))

    decreasing = _chain(("log F(x+d)", lF(x + delta)), ("log F(x)", lF(x)))
    convex = _chain(
        ("2 log F(x)", lF(x).scale(2.0)),
        ("log F(x-h) + log F(x+h)", lF(x - h) + lF(x + h)),
    )
    return [decreasing, convex], {"h": h, "delta": delta}


def _ev_gpow_inv_x(ctx: QContext, p: dict) -> EvalResult:
    x = p["x"]
    h = min(x / 2.0, 1.0 - x)

    def u(y: float) -> Approx:
        return log_gamma_q(ctx, y).scale(1.0 / y)

    return [_chain(
        ("2 u(x)", u(x).scale(2.0)),
        ("u(x-h) + u(x+h)", u(x - h) + u(x + h)),
    )], {"h": h}


def _ev_gpow_x(ctx: QContext, p: dict) -> EvalResult:
    x = p["x"]
    h = min(x - 1.0, 0.5)

    def v(y: float) -> Approx:
        return log_gamma_q(ctx, y).scale(y)

    return [_chain(
        ("2 v(x)", v(x).scale(2.0)),
        ("v(x-h) + v(x+h)", v(x - h) + v(x + h)),
    )], {"h": h}


def _log_gamma_pair(ctx: QContext, y: float) -> Approx:
    """log(Gamma_q(y) Gamma_q(1-y)) for y in (0,1)."""
    return log_gamma_q(ctx, y) + log_gamma_q(ctx, 1.0 - y)


def _ev_symm_lemma(ctx: QContext, p: dict) -> EvalResult:
    x = p["x"]
    u = 2.0 * x * (1.0 - x)
    lower = _log_gamma_pair(ctx, 1.0 - u) - _log_gamma_pair(ctx, 1.0 - x)
    mid = (_log_gamma_pair(ctx, x) - _log_gamma_pair(ctx, 1.0 - x)).scale(x)
    upper = _log_gamma_pair(ctx, x) - _log_gamma_pair(ctx, u)
    return [_chain(
        ("log F(1-u) - log F(1-x)", lower),
        ("x log(F(x)/F(1-x))", mid),
        ("log F(x) - log F(u)", upper),
    )], {"u": u}


def _ev_symm_gamma_prod(ctx: QContext, p: dict) -> EvalResult:
    x = p["x"]
    u = 2.0 * x * (1.0 - x)
    gamma_chain = _chain(
        ("log Gamma(u)Gamma(1-u)", _log_gamma_pair(ctx, u)),
        ("log Gamma(x)Gamma(1-x)", _log_gamma_pair(ctx, x)),
    )
    psi_prod_x = psi_q(ctx, x).mul(psi_q(ctx, 1.0 - x))
    psi_prod_u = psi_q(ctx, u).mul(psi_q(ctx, 1.0 - u))
    psi_chain = _chain(
        ("psi(x) psi(1-x)", psi_prod_x),
        ("psi(u) psi(1-u)", psi_prod_u),
    )
    return [gamma_chain, psi_chain], {"u": u}


def _ev_petrovic(ctx: QContext, p: dict) -> EvalResult:
    n = int(p["n"])
    xs = [p[f"x{i}"] for i in range(1, n + 1)]
    total = sum(xs)
    lhs = Approx(0.0, 0.0)
    for xi in xs:
        lhs = lhs + log_gamma_q(ctx, xi)
    rhs = _log_bracket(ctx, total) + log_gamma_q(ctx, total)
    for xi in xs:
        rhs = rhs - _log_bracket(ctx, xi)
    return [_chain(("sum log Gamma(x_i)", lhs),
                   ("log ([S]_q/prod [x_i]_q) + log Gamma(S)", rhs))], {"S": total}


def _ev_ratiomap_convexity(ctx: QContext, p: dict) -> EvalResult:
    x = p["x"]
    h = min(x / 2.0, 0.015)

    def u1(y: float) -> Approx:
        return log_gamma_q(ctx, (1.0 - y) / y)

    def u2(y: float) -> Approx:
        return log_gamma_q(ctx, 1.0 - y) - log_gamma_q(ctx, y)

    convex = _chain(
        ("2 log Gamma((1-x)/x)", u1(x).scale(2.0)),
        ("outer sum", u1(x - h) + u1(x + h)),
    )
    concave = _chain(
        ("outer sum of log ratio", u2(x - h) + u2(x + h)),
        ("2 log Gamma(1-x)/Gamma(x)", u2(x).scale(2.0)),
    )
    return [convex, concave], {"h": h}


def _ev_psi_half(ctx: QContext, p: dict) -> EvalResult:
    return [_chain(
        ("psi(1/2)", psi_q(ctx, 0.5)),
        ("2 psi(1)", psi_q(ctx, 1.0).scale(2.0)),
    )], {}


def _ev_ratio_vs_composed(ctx: QContext, p: dict) -> EvalResult:
    x = p["x"]
    lhs = log_gamma_q(ctx, 1.0 - x) - log_gamma_q(ctx, x)
    rhs = log_gamma_q(ctx, (1.0 - x) / x)
    return [_chain(("log Gamma(1-x)/Gamma(x)", lhs),
                   ("log Gamma((1-x)/x)", rhs))], {}


def _ev_kyfan_a(ctx: QContext, p: dict) -> EvalResult:
    k = int(p["k"])
    xs = [p[f"x{i}"] for i in range(1, k + 1)]
    mean = sum(xs) / k
    lhs = log_gamma_q(ctx, (1.0 - mean) / mean)
    rhs = Approx(0.0, 0.0)
    for xi in xs:
        rhs = rhs + log_gamma_q(ctx, (1.0 - xi) / xi)
    rhs = rhs.scale(1.0 / k)
    return [_chain(("log Gamma(A'/A)", lhs),
                   ("mean of log Gamma(x_i'/x_i)", rhs))], {"A": mean}


def _ev_kyfan_b(ctx: QContext, p: dict) -> EvalResult:
    k = int(p["k"])
    xs = [p[f"x{i}"] for i in range(1, k + 1)]
    mean = sum(xs) / k
    lhs = Approx(0.0, 0.0)
    for xi in xs:
        lhs = lhs + log_gamma_q(ctx, 1.0 - xi) - log_gamma_q(ctx, xi)
    lhs = lhs.scale(1.0 / k)
    rhs = log_gamma_q(ctx, 1.0 - mean) - log_gamma_q(ctx, mean)
    return [_chain(("mean of log Gamma(x_i')/Gamma(x_i)", lhs),
                   ("log Gamma(A')/Gamma(A)", rhs))], {"A": mean}


def _ev_qpoch_ratio(ctx: QContext, p: dict) -> EvalResult:
    x, a, n = p["x"], p["a"], int(p["n"])
    q = ctx.q
    lnq = ctx.log_q

    def log_g(y: float) -> float:
        return math.log1p(-math.exp(y * lnq)) - math.log1p(-math.exp((y + n) * lnq))

    lower = _exact((1.0 - a) * log_g(x))
    upper = _exact((1.0 - a) * log_g(x + a))
    mid = log_qpoch_finite(ctx, math.exp((x + a) * lnq), n) \
        - log_qpoch_finite(ctx, math.exp((x + 1.0) * lnq), n)
    g_lo, g_hi = _gap_power_ratio(ctx, x, a, n)
    return [_chain(
        ("(1-a) log g(x)", lower),
        ("log shifted-factorial ratio", mid),
        ("(1-a) log g(x+a)", upper),
        gaps=[g_lo, g_hi],
    )], {}


def _ev_phi10_bounds(ctx: QContext, p: dict) -> EvalResult:
    x, a = p["x"], p["a"]
    lnq = ctx.log_q
    lower = _exact((1.0 - a) * math.log1p(-math.exp(x * lnq)))
    upper = _exact((1.0 - a) * math.log1p(-math.exp((x + a) * lnq)))
    # product form of phi10(q^(a-1); q^(x+1)) = (q^{x+a};q)_inf/(q^{x+1};q)_inf
    mid = _log_qpoch(ctx, ctx.q, math.exp((x + a) * lnq)) \
        - _log_qpoch(ctx, ctx.q, math.exp((x + 1.0) * lnq))
    g_lo, g_hi = _gap_power_ratio(ctx, x, a, None)
    return [_chain(
        ("(1-a) log(1-q^x)", lower),
        ("log phi10 (product form)", mid),
        ("(1-a) log(1-q^(x+a))", upper),
        gaps=[g_lo, g_hi],
    )], {}


def _ev_inf3(ctx: QContext, p: dict) -> EvalResult:
    n = int(p["n"])
    q = ctx.q
    root_n = q ** (1.0 / n)
    root_2 = math.sqrt(q)
    lhs = -_log_euler(ctx, q)
    l_half = _log_qpoch(ctx, q, root_2)  # log (q^(1/2); q)_inf
    e1 = l_half.scale(n - 1) - _log_qpoch(ctx, root_n, q) \
        - _exact((n - 1) * math.log1p(-root_2))
    e2 = l_half.scale(n - 1) - _log_euler(ctx, root_n)
    neg_poch = sum(math.log1p(math.exp(j / n * math.log(q))) for j in range(1, n))
    e3 = l_half.scale(n - 1) + _exact(neg_poch) - _log_euler(ctx, root_n) \
        - _exact((n - 1) * math.log1p(root_2))
    return [
        _chain(("-log (q;q)_inf", lhs), ("log E1", e1)),
        _chain(("-log (q;q)_inf", lhs), ("log E2", e2)),
        _chain(("-log (q;q)_inf", lhs), ("log E3", e3)),
    ], {}


def _ev_sup3(ctx: QContext, p: dict) -> EvalResult:
    n = int(p["n"])
    q = ctx.q
    phi = totient(n)
    root_2 = math.sqrt(q)
    rhs = _log_qpoch(ctx, q, root_2).scale(phi)
    s1 = Approx(0.0, 0.0)
    s2 = _exact(phi * math.log1p(-root_2))
    s3_denominator = 0.0
    for d in divisors(n):
        mu = moebius(n // d)
        if mu == 0:
            continue
        root_d = q ** (1.0 / d)
        s1 = s1 + _log_euler(ctx, root_d).scale(mu)
        s2 = s2 + _log_qpoch(ctx, root_d, q).scale(mu)
        if d > 1:
            s3_denominator += mu * sum(
                math.log1p(math.exp(j / d * math.log(q))) for j in range(1, d)
            )
    s3 = _exact(phi * math.log1p(root_2)) + s1 - _exact(s3_denominator)
    return [
        _chain(("log S1", s1), ("phi(n) log (q^(1/2);q)_inf", rhs)),
        _chain(("log S2", s2), ("phi(n) log (q^(1/2);q)_inf", rhs)),
        _chain(("log S3", s3), ("phi(n) log (q^(1/2);q)_inf", rhs)),
    ], {"phi": float(phi)}


def _ev_askey_qmono(ctx: QContext, p: dict) -> EvalResult:
    x, pbase = p["x"], p["p"]
    sub = ctx.rebase(pbase)
    lg_p = log_gamma_q(sub, x)
    lg_q = log_gamma_q(ctx, x)
    lg_c = _classical(x)
    if 1.0 < x < 2.0:
        members = [("classical log Gamma", lg_c), ("log Gamma_q", lg_q), ("log Gamma_p", lg_p)]
    else:
        members = [("log Gamma_p", lg_p), ("log Gamma_q", lg_q), ("classical log Gamma", lg_c)]
    return [_chain(*members)], {}


def _ev_qprod_mono_a(ctx: QContext, p: dict) -> EvalResult:
    n, pbase = int(p["n"]), p["p"]

    def w(t: float) -> Approx:
        return _log_euler(ctx, t).scale(n) - _log_euler(ctx, t ** (1.0 / n)) \
            + _exact(0.5 * (n - 1) * math.log1p(-t))

    const = _exact(0.5 * (n - 1) * math.log(2.0 * math.pi) - 0.5 * math.log(n))
    return [_chain(("W(p)", w(pbase)), ("W(q)", w(ctx.q)),
                   ("log (2 pi)^((n-1)/2)/sqrt(n)", const))], {}


def _ev_qprod_mono_b(ctx: QContext, p: dict) -> EvalResult:
    n, pbase = int(p["n"]), p["p"]

    def v(t: float) -> Approx:
        return _log_euler(ctx, t).scale(n) - _log_qpoch(ctx, t ** (1.0 / n), t) \
            - _exact(0.5 * (n - 1) * math.log1p(-t))

    const = _exact(
        classical_log_gamma(float(n))
        + 0.5 * (n - 1) * math.log(2.0 * math.pi)
        - (n - 0.5) * math.log(n)
    )
    return [_chain(("log (n-1)!(2 pi)^((n-1)/2)/n^(n-1/2)", const),
                   ("V(q)", v(ctx.q)), ("V(p)", v(pbase)))], {}


def _ev_means_gla(ctx: QContext, p: dict) -> EvalResult:
    a, b = p["a"], p["b"]
    lo, hi = min(a, b), max(a, b)
    g = _exact(math.sqrt(a * b))
    el = _exact((hi - lo) / (math.log(hi) - math.log(lo)))
    am = _exact(0.5 * (a + b))
    return [_chain(("G(a,b)", g), ("L(a,b)", el), ("A(a,b)", am))], {}


# ---------------------------------------------------------------------------
# the catalog itself
# ---------------------------------------------------------------------------

def _q_spec() -> ParamSpec:
    return ParamSpec("q", 1e-4, 0.9995, note="drawn from the suite's q window")


def _entry(
    id: str,
    statement: str,
    anchor: str,
    kind: str,
    params: list[ParamSpec],
    strict: bool = True,
    uses_q: bool = True,
) -> CatalogEntry:
    return CatalogEntry(id, statement, anchor, kind, tuple(params), strict, uses_q)


_ENTRIES: list[CatalogEntry] = [
    _entry("L2-PSI-BOUNDS",
           "q^x log q/(1-q^x) + log[x]_q < psi_q(x) < log[x]_q",
           "digamma-log-bracket-sandwich", "chain-inequality",
           [ParamSpec("x", 0.01, 20.0)]),
    _entry("PSI12-SIGNS",
           "q log q/(1-q) < psi_q(1) < 0 < q^2 log q/(1-q^2)+log(1+q) < psi_q(2)",
           "digamma-endpoint-signs", "chain-inequality", []),
    _entry("PSI1-RANGE", "-1 < psi_q(1) < 0",
           "digamma-at-one-range", "bound", []),
    _entry("GAMMAQ-CONST-RANGE", "0 < gamma_q < 1",
           "q-euler-constant-range", "bound", []),
    _entry("GAMMA-GLOBAL-MIN", "Gamma_q(x) >= Gamma_q(x0) on (0, inf)",
           "gamma-global-minimum", "bound",
           [ParamSpec("x", 0.05, 30.0)], strict=False),
    _entry("GPM-MONO-ZERO",
           "log Gamma_q +/- x psi_q are monotone with a single zero in (1,2)",
           "loggamma-linear-digamma-zero", "monotonicity",
           [ParamSpec("x1", 1.05, 8.0), ParamSpec("dx", 0.1, 2.0)]),
    _entry("TELESCOPE",
           "x psi(x)-(x+n) psi(x+n) < log Gamma(x)/Gamma(x+n) < (x+n) psi(x+n)-x psi(x)",
           "telescoped-ratio-bounds", "chain-inequality",
           [ParamSpec("x", 1.01, 10.0), ParamSpec("n", 1, 8, integer=True)]),
    _entry("XPSI-CONVEX", "x psi_q(x) is strictly convex",
           "x-digamma-convexity", "convexity",
           [ParamSpec("x", 0.1, 10.0)]),
    _entry("PSISUM-A",
           "sum_{i<n} psi(i/n) <= (n-1) psi(1/2), sum via its closed form (equality at n=2)",
           "digamma-fraction-sum-log", "chain-inequality",
           [ParamSpec("n", 2, 10, integer=True)], strict=False),
    _entry("PSISUM-B",
           "(n-1) psi^(2k-1)(1/2) <= sum_{i<n} psi^(2k-1)(i/n) via its closed form",
           "digamma-fraction-sum-odd", "chain-inequality",
           [ParamSpec("n", 2, 10, integer=True), ParamSpec("k", 1, 2, integer=True)],
           strict=False),
    _entry("PSISUM-C",
           "(n-1) psi^(2k)(1/2) >= sum_{i<n} psi^(2k)(i/n) via its closed form",
           "digamma-fraction-sum-even", "chain-inequality",
           [ParamSpec("n", 2, 10, integer=True), ParamSpec("k", 1, 2, integer=True)],
           strict=False),
    _entry("LOGCONVEX-RATIO-SANDWICH",
           "g(x)^(1-a) < f(x+1)/f(x+a) < g(x+a)^(1-a) for f = Gamma_q, g = f(.+1)/f",
           "logconvex-ratio-sandwich", "chain-inequality",
           [ParamSpec("x", 0.1, 10.0), ParamSpec("a", 0.01, 0.99)]),
    _entry("GAUTSCHI-Q",
           "[x]_q^(1-a) < Gamma_q(x+1)/Gamma_q(x+a) < [x+a]_q^(1-a)",
           "gautschi-ratio-bounds", "chain-inequality",
           [ParamSpec("x", 0.05, 15.0), ParamSpec("a", 0.01, 0.99)]),
    _entry("PSI-DIFF-D1",
           "psi'(x+1) < -q^x log q/(1-q^x) < psi'(x)",
           "trigamma-shift-sandwich", "chain-inequality",
           [ParamSpec("x", 0.05, 15.0)]),
    _entry("PSI-DIFF-D2",
           "psi''(x) < -q^x (log q)^2/(1-q^x)^2 < psi''(x+1)",
           "tetragamma-shift-sandwich", "chain-inequality",
           [ParamSpec("x", 0.05, 15.0)]),
    _entry("ADD1-A", "psi'(x+1) < 1/x",
           "trigamma-reciprocal-bound", "bound",
           [ParamSpec("x", 0.01, 20.0)]),
    _entry("ADD1-B", "psi''(x+1) > -1/x^2",
           "tetragamma-reciprocal-bound", "bound",
           [ParamSpec("x", 0.01, 20.0)]),
    _entry("F-LOGCONCAVE-INC",
           "f(x) = Gamma_q(x+1)^(1/x) is strictly log-concave and increasing",
           "power-mean-gamma-shape", "convexity",
           [ParamSpec("x", 0.05, 20.0)]),
    _entry("F-RANGE", "exp(-gamma_q) < f(x) < 1/(1-q)",
           "power-mean-gamma-range", "bound",
           [ParamSpec("x", 0.01, 40.0)]),
    _entry("RECIP-F-LOGCONVEX", "1/f(x) is strictly log-convex",
           "reciprocal-power-mean-convexity", "convexity",
           [ParamSpec("x", 0.05, 20.0)]),
    _entry("G-SANDWICH",
           "g(x)^(1-a) < Gamma(x+a+1)^(1/(x+a))/Gamma(x+2)^(1/(x+1)) < g(x+a)^(1-a)",
           "power-mean-ratio-sandwich", "chain-inequality",
           [ParamSpec("x", 0.1, 8.0), ParamSpec("a", 0.01, 0.99)]),
    _entry("F-OVER-X",
           "F(x) = f(x)/x is strictly decreasing and strictly log-convex",
           "power-mean-over-x-shape", "monotonicity",
           [ParamSpec("x", 0.1, 10.0)]),
    _entry("GPOW-INV-X", "Gamma_q(x)^(1/x) is strictly log-convex on (0,1]",
           "gamma-inverse-power-convexity", "convexity",
           [ParamSpec("x", 0.05, 0.95)]),
    _entry("GPOW-X", "Gamma_q(x)^x is strictly log-convex on [1,inf)",
           "gamma-power-convexity", "convexity",
           [ParamSpec("x", 1.05, 19.5)]),
    _entry("SYMM-LEMMA",
           "F(1-2x(1-x))/F(1-x) < (F(x)/F(1-x))^x < F(x)/F(2x(1-x)), F = Gamma_q(.)Gamma_q(1-.)",
           "symmetric-logconvex-sandwich", "chain-inequality",
           [ParamSpec("x", 0.02, 0.98, exclude=(0.49, 0.51))]),
    _entry("SYMM-GAMMA-PROD",
           "Gamma(2x(1-x))Gamma(1-2x(1-x)) < Gamma(x)Gamma(1-x); reversed for psi products",
           "symmetric-product-comparison", "chain-inequality",
           [ParamSpec("x", 0.02, 0.98, exclude=(0.49, 0.51))]),
    _entry("PETROVIC-Q",
           "prod Gamma_q(x_i) <= ([sum x_i]_q / prod [x_i]_q) Gamma_q(sum x_i)",
           "superadditive-gamma-product", "chain-inequality",
           [ParamSpec("n", 1, 6, integer=True,
                      note="sampled from [2,6]; n=1 is the degenerate equality"),
            ParamSpec("x", 0.05, 4.0, count_by="n")],
           strict=False),
    _entry("RATIOMAP-CONVEXITY",
           "Gamma_q((1-x)/x) log-convex and Gamma_q(1-x)/Gamma_q(x) log-concave on (0,1/2]",
           "reflected-argument-convexity", "convexity",
           [ParamSpec("x", 0.02, 0.47,
                      note="kept below 0.47 so the stencil stays inside (0, 1/2]")]),
    _entry("PSI-HALF", "psi_q(1/2) < 2 psi_q(1)",
           "digamma-half-vs-one", "bound", []),
    _entry("RATIO-VS-COMPOSED",
           "Gamma_q(1-x)/Gamma_q(x) <= Gamma_q((1-x)/x), equality only at x = 1/2",
           "reflection-vs-composition", "chain-inequality",
           [ParamSpec("x", 0.02, 0.5)], strict=False),
    _entry("KYFAN-A",
           "Gamma_q(A'/A) <= (prod Gamma_q(x_i'/x_i))^(1/k)",
           "mean-ratio-gamma-bound", "chain-inequality",
           [ParamSpec("k", 2, 6, integer=True),
            ParamSpec("x", 0.02, 0.5, count_by="k")], strict=False),
    _entry("KYFAN-B",
           "Gamma_q(A')/Gamma_q(A) >= (prod Gamma_q(x_i')/Gamma_q(x_i))^(1/k)",
           "mean-reflection-gamma-bound", "chain-inequality",
           [ParamSpec("k", 2, 6, integer=True),
            ParamSpec("x", 0.02, 0.5, count_by="k")], strict=False),
    _entry("QPOCH-RATIO",
           "g(x)^(1-a) < (q^(x+a);q)_n/(q^(x+1);q)_n < g(x+a)^(1-a), g(y)=(1-q^y)/(1-q^(y+n))",
           "shifted-factorial-ratio-bounds", "chain-inequality",
           [ParamSpec("n", 1, 50, integer=True),
            ParamSpec("x", 0.05, 10.0), ParamSpec("a", 0.01, 0.99)]),
    _entry("PHI10-BOUNDS",
           "(1-q^x)^(1-a) <= phi10(q^(a-1); q^(x+1)) <= (1-q^(x+a))^(1-a)",
           "hypergeometric-ratio-bounds", "chain-inequality",
           [ParamSpec("x", 0.05, 10.0), ParamSpec("a", 0.01, 0.99)], strict=False),
    _entry("INF3",
           "1/(q;q)_inf <= each of the three product expressions",
           "euler-product-lower-bounds", "bound",
           [ParamSpec("n", 2, 10, integer=True)], strict=False),
    _entry("SUP3",
           "(q^(1/2);q)_inf^phi(n) >= each of the three Moebius product expressions",
           "coprime-product-upper-bounds", "bound",
           [ParamSpec("n", 2, 12, integer=True)], strict=False),
    _entry("ASKEY-QMONO",
           "Gamma_p(x) <= Gamma_q(x) <= Gamma(x) for x in (0,1] or [2,inf); reversed on [1,2]",
           "base-monotonicity", "chain-inequality",
           [ParamSpec("x", 0.05, 5.0),
            ParamSpec("p", 0.05, 0.98, fraction_of="q")], strict=False),
    _entry("QPROD-MONO-A",
           "W(p) <= W(q) <= (2pi)^((n-1)/2)/sqrt(n) for the Euler-product form W",
           "gauss-product-monotone-upper", "chain-inequality",
           [ParamSpec("n", 2, 10, integer=True),
            ParamSpec("p", 0.05, 0.98, fraction_of="q")], strict=False),
    _entry("QPROD-MONO-B",
           "V(p) >= V(q) >= (n-1)!(2pi)^((n-1)/2)/n^(n-1/2)",
           "gauss-product-monotone-lower", "chain-inequality",
           [ParamSpec("n", 2, 10, integer=True),
            ParamSpec("p", 0.05, 0.98, fraction_of="q")], strict=False),
    _entry("MEANS-GLA", "G(a,b) < L(a,b) < A(a,b) for distinct positive a, b",
           "geometric-logarithmic-arithmetic", "chain-inequality",
           [ParamSpec("a", 0.1, 100.0), ParamSpec("b", 0.1, 100.0)],
           uses_q=False),
]

_EVALUATORS: dict[str, Callable[[QContext, dict], EvalResult]] = {
    "L2-PSI-BOUNDS": _ev_l2_psi_bounds,
    "PSI12-SIGNS": _ev_psi12_signs,
    "PSI1-RANGE": _ev_psi1_range,
    "GAMMAQ-CONST-RANGE": _ev_gammaq_const_range,
    "GAMMA-GLOBAL-MIN": _ev_gamma_global_min,
    "GPM-MONO-ZERO": _ev_gpm_mono_zero,
    "TELESCOPE": _ev_telescope,
    "XPSI-CONVEX": _ev_xpsi_convex,
    "PSISUM-A": _ev_psisum_a,
    "PSISUM-B": _ev_psisum_b,
    "PSISUM-C": _ev_psisum_c,
    "LOGCONVEX-RATIO-SANDWICH": _ev_ratio_sandwich,
    "GAUTSCHI-Q": _ev_gautschi,
    "PSI-DIFF-D1": _ev_psi_diff_d1,
    "PSI-DIFF-D2": _ev_psi_diff_d2,
    "ADD1-A": _ev_add1_a,
    "ADD1-B": _ev_add1_b,
    "F-LOGCONCAVE-INC": _ev_f_logconcave_inc,
    "F-RANGE": _ev_f_range,
    "RECIP-F-LOGCONVEX": _ev_recip_f_logconvex,
    "G-SANDWICH": _ev_g_sandwich,
    "F-OVER-X": _ev_f_over_x,
    "GPOW-INV-X": _ev_gpow_inv_x,
    "GPOW-X": _ev_gpow_x,
    "SYMM-LEMMA": _ev_symm_lemma,
    "SYMM-GAMMA-PROD": _ev_symm_gamma_prod,
    "PETROVIC-Q": _ev_petrovic,
    "RATIOMAP-CONVEXITY": _ev_ratiomap_convexity,
    "PSI-HALF": _ev_psi_half,
    "RATIO-VS-COMPOSED": _ev_ratio_vs_composed,
    "KYFAN-A": _ev_kyfan_a,
    "KYFAN-B": _ev_kyfan_b,
    "QPOCH-RATIO": _ev_qpoch_ratio,
    "PHI10-BOUNDS": _ev_phi10_bounds,
    "INF3": _ev_inf3,
    "SUP3": _ev_sup3,
    "ASKEY-QMONO": _ev_askey_qmono,
    "QPROD-MONO-A": _ev_qprod_mono_a,
    "QPROD-MONO-B": _ev_qprod_mono_b,
    "MEANS-GLA": _ev_means_gla,
}

_BY_ID = {e.id: e for e in _ENTRIES}
assert set(_BY_ID) == set(_EVALUATORS)


def list_entries() -> list[CatalogEntry]:
    """All catalog entries in stable (definition) order."""
    return list(_ENTRIES)


def get_entry(check_id: str) -> CatalogEntry:
    try:
        return _BY_ID[check_id]
    except KeyError:
        raise UnknownCheck(check_id) from None


def _validate_params(entry: CatalogEntry, ctx: QContext, params: dict) -> None:
    for spec in entry.params:
        if spec.count_by is not None:
            count = int(params.get(spec.count_by, 0))
            names = [f"{spec.name}{i}" for i in range(1, count + 1)]
        else:
            names = [spec.name]
        for name in names:
            if name not in params:
                raise DomainViolation(f"{entry.id}: missing parameter {name!r}")
            v = params[name]
            if spec.fraction_of == "q":
                if not (Q_MIN < v < ctx.q):
                    raise DomainViolation(
                        f"{entry.id}: {name}={v} must lie in ({Q_MIN}, q={ctx.q})"
                    )
                continue
            if spec.integer:
                if int(v) != v:
                    raise DomainViolation(f"{entry.id}: {name}={v} must be an integer")
            if not (spec.lo <= v <= spec.hi):
                raise DomainViolation(
                    f"{entry.id}: {name}={v} outside [{spec.lo}, {spec.hi}]"
                )


def _judge(chains: Chains, strict: bool) -> tuple[float, str]:
    margin = math.inf
    verdict = PASS
    for chain in chains:
        for gap, err in chain.gaps:
            if math.isnan(gap):
                return math.nan, INCONCLUSIVE
            margin = min(margin, gap)
            if gap < -err:
                verdict = FAIL
            elif strict and gap <= err and verdict != FAIL:
                verdict = INCONCLUSIVE
    return margin, verdict


def run_check(ctx: QContext, check_id: str, params: dict) -> CheckOutcome:
    """Evaluate one catalog entry at explicit parameters.

    Inconclusive samples are retried at eps/100 and eps/10000 before
    being reported; numeric failures (non-convergence, overflow) come
    back as inconclusive outcomes carrying the reason.
    """
    entry = get_entry(check_id)
    _validate_params(entry, ctx, params)
    evaluator = _EVALUATORS[check_id]
    outcome = None
    for tighten in (1.0, 100.0, 10000.0):
        eval_ctx = ctx if tighten == 1.0 else ctx.tighten(tighten)
        try:
            chains, extra = evaluator(eval_ctx, params)
        except (NonConvergent, Overflow) as exc:
            return CheckOutcome(
                id=check_id, params=dict(params), values=(),
                margin=math.nan, verdict=INCONCLUSIVE, reason=str(exc),
            )
        margin, verdict = _judge(chains, entry.strict)
        members = tuple(m for chain in chains for m in chain.members)
        outcome = CheckOutcome(
            id=check_id, params={**params, **extra}, values=members,
            margin=margin, verdict=verdict,
        )
        if verdict != INCONCLUSIVE:
            break
    return outcome


# ---------------------------------------------------------------------------
# generic probes over a fixed function registry
# ---------------------------------------------------------------------------

#: name -> (domain lo, domain hi, factory(ctx) -> f(x) -> float)
FUNCTION_REGISTRY: dict[str, tuple[float, float, Callable]] = {
    "log_gamma": (0.0, math.inf, lambda ctx: lambda x: log_gamma_q(ctx, x).value),
    "psi": (0.0, math.inf, lambda ctx: lambda x: psi_q(ctx, x).value),
    "x_psi": (0.0, math.inf, lambda ctx: lambda x: x * psi_q(ctx, x).value),
    "log_gamma_root": (0.0, math.inf, lambda ctx: lambda x: _log_f(ctx, x).value),
    "log_gamma_root_over_x": (
        0.0, math.inf, lambda ctx: lambda x: _log_f(ctx, x).value - math.log(x)),
    "log_gamma_pow_inv": (
        0.0, math.inf, lambda ctx: lambda x: log_gamma_q(ctx, x).value / x),
    "log_gamma_pow_x": (
        0.0, math.inf, lambda ctx: lambda x: x * log_gamma_q(ctx, x).value),
    "log_gamma_ratio_inv": (
        0.0, 1.0, lambda ctx: lambda x: log_gamma_q(ctx, (1.0 - x) / x).value),
    "log_gamma_reflect": (
        0.0, 1.0,
        lambda ctx: lambda x: log_gamma_q(ctx, 1.0 - x).value - log_gamma_q(ctx, x).value),
    "constant": (-math.inf, math.inf, lambda ctx: lambda x: 1.0),
    "linear": (-math.inf, math.inf, lambda ctx: lambda x: x),
}


def _probe_setup(
    ctx: QContext, fn_name: str, interval: tuple[float, float], grid_points: int
) -> tuple[Callable[[float], float], np.ndarray]:
    if fn_name not in FUNCTION_REGISTRY:
        raise DomainViolation(f"unknown registry function {fn_name!r}")
    lo, hi = interval
    dom_lo, dom_hi, factory = FUNCTION_REGISTRY[fn_name]
    if not (dom_lo < lo < hi <= dom_hi):
        raise DomainViolation(f"interval {interval} outside domain of {fn_name!r}")
    if grid_points < 5:
        raise DomainViolation(f"grid_points must be >= 5, got {grid_points}")
    f = factory(ctx)
    return f, np.linspace(lo, hi, int(grid_points))


def _probe_stream(tag: str, fn_name: str, interval, grid_points: int) -> np.random.Generator:
    raw = f"qsf-probe|{tag}|{fn_name}|{interval[0]!r}|{interval[1]!r}|{grid_points}"
    key = int.from_bytes(hashlib.sha256(raw.encode()).digest()[:16], "little")
    return np.random.Generator(np.random.Philox(key=key))


def convexity_probe(
    ctx: QContext,
    fn_name: str,
    interval: tuple[float, float],
    grid_points: int,
    sense: str,
) -> float:
    """Min sense-oriented second difference of a registered function.

    Runs the uniform grid test plus 100 random midpoint-convexity
    triples (seeded from the call signature); the reported margin is
    the minimum over both, so positive certifies the sampled claim.
    """
    if sense not in ("convex", "concave"):
        raise DomainViolation(f"sense must be convex|concave, got {sense!r}")
    f, xs = _probe_setup(ctx, fn_name, interval, grid_points)
    vals = np.array([f(x) for x in xs])
    gaps = list(vals[:-2] + vals[2:] - 2.0 * vals[1:-1])
    rng = _probe_stream("convexity", fn_name, interval, grid_points)
    lo, hi = interval
    for _ in range(100):
        x = lo + rng.random() * (hi - lo)
        y = lo + rng.random() * (hi - lo)
        lam = rng.random()
        if x == y:
            continue
        gaps.append(lam * f(x) + (1.0 - lam) * f(y) - f(lam * x + (1.0 - lam) * y))
    oriented = np.array(gaps)
    if sense == "concave":
        oriented = -oriented
    return float(np.min(oriented))


def monotonicity_probe(
    ctx: QContext,
    fn_name: str,
    interval: tuple[float, float],
    grid_points: int,
    sense: str,
) -> float:
    """Min sense-oriented forward difference of a registered function."""
    if sense not in ("increasing", "decreasing"):
        raise DomainViolation(f"sense must be increasing|decreasing, got {sense!r}")
    f, xs = _probe_setup(ctx, fn_name, interval, grid_points)
    vals = np.array([f(x) for x in xs])
    d1 = np.diff(vals)
    margin = float(np.min(d1)) if sense == "increasing" else float(np.min(-d1))
    return margin
