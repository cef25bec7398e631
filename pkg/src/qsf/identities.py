"""Exact-identity evaluators: both sides computed independently.

Covers the base-q^n multiplication formula, the fractional-argument
Gamma_q product (full and simplified right-hand sides), the coprime
product P_q(n), the psi_q sum formulas, and the Moebius-inversion
product identity, plus the multiplicative number-theory helpers they
need.  All residuals are taken between logs (log of absolute values
for the signed psi sums) so one relative tolerance fits both tiny and
huge magnitudes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .context import Approx, QContext
from .errors import InvalidArgument
from .qcore import _log_qpoch_kernel
from .qgamma import _psi_deriv_series, _psi_series, log_gamma_q, psi_q, psi_q_deriv

_RND = 2.0e-16

MAX_N = 10**6
DEFAULT_TOL = 1e-9


# ---------------------------------------------------------------------------
# number-theory helpers (trial division; n <= 10^6)
# ---------------------------------------------------------------------------

def _check_n(n: int) -> int:
    if int(n) != n or not (1 <= n <= MAX_N):
        raise InvalidArgument(f"n must be an integer in [1, {MAX_N}], got {n}")
    return int(n)


@lru_cache(maxsize=65536)
def _factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization as ((p, exponent), ...)."""
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def totient(n: int) -> int:
    """Euler's phi: count of 1 <= k <= n coprime to n."""
    n = _check_n(n)
    result = n
    for p, _ in _factorize(n):
        result -= result // p
    return result


def moebius(n: int) -> int:
    """Moebius mu: (-1)^omega(n) on squarefree n, else 0."""
    n = _check_n(n)
    mu = 1
    for _, e in _factorize(n):
        if e > 1:
            return 0
        mu = -mu
    return mu


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    n = _check_n(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def coprime_residues(n: int) -> list[int]:
    """k in [1, n] with gcd(k, n) = 1."""
    n = _check_n(n)
    return [k for k in range(1, n + 1) if math.gcd(k, n) == 1]


# ---------------------------------------------------------------------------
# identity residuals
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityResidual:
    """Log-space comparison of two independently computed sides."""

    id: str
    lhs: Approx
    rhs: Approx
    residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.lhs.err + self.rhs.err + self.tol


def _residual(name: str, lhs: Approx, rhs: Approx, tol: float) -> IdentityResidual:
    return IdentityResidual(name, lhs, rhs, abs(lhs.value - rhs.value), tol)


def _log_abs(v: Approx) -> Approx:
    """log|value| with the error mapped to relative scale."""
    if abs(v.value) <= v.err:
        return Approx(-math.inf, math.inf)
    return Approx(math.log(abs(v.value)), v.err / (abs(v.value) - v.err))


def _log_qpoch_inf(ctx: QContext, base: float, a: float) -> Approx:
    """log (a;base)_inf with this context's tolerances.

    Calls the truncation kernel directly so derived bases (q**(1/n)
    slightly above the context band, q**n below it) stay usable.
    """
    logv, logerr, _ = _log_qpoch_kernel(base, a, ctx.eps, ctx.max_terms)
    return Approx(logv, logerr)


def check_jackson(ctx: QContext, z: float, n: int, tol: float = DEFAULT_TOL) -> IdentityResidual:
    """Gauss-multiplication analogue:

    ((1-q^n)/(1-q))^{nz-1} prod_i Gamma_{q^n}(z + i/n)
        = Gamma_q(nz) prod_{i>=1} Gamma_{q^n}(i/n).

    The shifted factors run in base q^n while the multiplied-argument
    factor Gamma_q(nz) stays in base q (the form that actually closes
    numerically; writing it in base q^n breaks the identity by O(1e-2)
    at generic arguments).
    """
    if not (z > 0.0):
        raise InvalidArgument(f"z must be positive, got {z}")
    if int(n) != n or not (1 <= n <= 8):
        raise InvalidArgument(f"n must be an integer in [1, 8], got {n}")
    n = int(n)
    q = ctx.q
    sub = ctx.rebase(q**n)
    log_ratio = math.log1p(-(q**n)) - math.log1p(-q)
    lhs = Approx((n * z - 1.0) * log_ratio, _RND * abs(n * z - 1.0) * abs(log_ratio))
    for i in range(n):
        lhs = lhs + log_gamma_q(sub, z + i / n)
    rhs = log_gamma_q(ctx, n * z)
    for i in range(1, n):
        rhs = rhs + log_gamma_q(sub, i / n)
    return _residual(f"jackson(z={z}, n={n})", lhs, rhs, tol)


def _gauss_lhs(ctx: QContext, n: int) -> Approx:
    out = Approx(0.0, 0.0)
    for k in range(1, n):
        out = out + log_gamma_q(ctx, k / n)
    return out


def check_q_gauss_product(
    ctx: QContext, n: int, form: str = "full", tol: float = DEFAULT_TOL
) -> IdentityResidual:
    """prod_{k<n} Gamma_q(k/n) against its closed product form.

    form="full":        Gamma_q(1/2)^{n-1} (r;r)_inf^{n-1}
                        / ((q;q)_inf^{n-2} (s;s)_inf),  r=q^(1/2), s=q^(1/n)
    form="simplified":  (q;q)_inf^n / (s;s)_inf * (1-q)^{(n-1)/2}
    """
    if int(n) != n or not (2 <= n <= 12):
        raise InvalidArgument(f"n must be an integer in [2, 12], got {n}")
    n = int(n)
    q = ctx.q
    lhs = _gauss_lhs(ctx, n)
    root_n = q ** (1.0 / n)
    log_euler_q = _log_qpoch_inf(ctx, q, q)
    log_euler_root_n = _log_qpoch_inf(ctx, root_n, root_n)
    if form == "full":
        root_2 = math.sqrt(q)
        rhs = (
            log_gamma_q(ctx, 0.5).scale(n - 1)
            + _log_qpoch_inf(ctx, root_2, root_2).scale(n - 1)
            - log_euler_q.scale(n - 2)
            - log_euler_root_n
        )
    elif form == "simplified":
        rhs = (
            log_euler_q.scale(n)
            - log_euler_root_n
            + Approx(0.5 * (n - 1) * math.log1p(-q), _RND * n)
        )
    else:
        raise InvalidArgument(f"form must be 'full' or 'simplified', got {form!r}")
    return _residual(f"q-gauss-product-{form}(n={n})", lhs, rhs, tol)


def check_pqn(ctx: QContext, n: int, tol: float = DEFAULT_TOL) -> IdentityResidual:
    """Coprime Gamma_q product

    P_q(n) = prod_{(k,n)=1} Gamma_q(k/n)
           = Gamma_q(1/2)^phi(n) (q^(1/2); q)_inf^phi(n)
             / prod_{d|n} (q^(1/d); q^(1/d))_inf^{mu(n/d)}.
    """
    if int(n) != n or not (2 <= n <= 30):
        raise InvalidArgument(f"n must be an integer in [2, 30], got {n}")
    n = int(n)
    q = ctx.q
    lhs = Approx(0.0, 0.0)
    for k in coprime_residues(n):
        if k == n:  # only happens at n=1, excluded by the precondition
            continue
        lhs = lhs + log_gamma_q(ctx, k / n)
    phi = totient(n)
    rhs = log_gamma_q(ctx, 0.5).scale(phi) + _log_qpoch_inf(ctx, q, math.sqrt(q)).scale(phi)
    for d in divisors(n):
        mu = moebius(n // d)
        if mu == 0:
            continue
        root_d = q ** (1.0 / d)
        rhs = rhs - _log_qpoch_inf(ctx, root_d, root_d).scale(mu)
    return _residual(f"pqn(n={n})", lhs, rhs, tol)


def psi_q_deriv_at_base(ctx: QContext, base: float, x: float, k: int) -> Approx:
    """psi or its k-th derivative evaluated in an explicit base.

    Bypasses context revalidation so derived bases q**(1/n) right at the
    band edge remain usable; tolerances come from ctx.
    """
    if k == 0:
        v, e, _ = _psi_series(base, x, ctx.eps, ctx.max_terms)
    else:
        v, e, _ = _psi_deriv_series(base, x, k, ctx.eps, ctx.max_terms)
    return Approx(v, e)


def check_psi_sum(ctx: QContext, n: int, k: int, tol: float = DEFAULT_TOL) -> IdentityResidual:
    """Fractional-argument psi_q sums, with p = q^(1/n):

    k=0:    sum_{i<n} psi_q(i/n) = n psi_p(1) - psi_q(1) - n log((1-q)/(1-p))
    k>=1:   sum_{i<n} psi_q^{(k)}(i/n) = n^{k+1} psi_p^{(k)}(1) - psi_q^{(k)}(1)

    (These are the closed forms that the multiplication formula
    actually yields; collapsing psi_p to psi_q breaks both by O(1e-1).)
    Both sides keep one sign, so the residual compares log|.|.
    """
    if int(n) != n or not (2 <= n <= 12):
        raise InvalidArgument(f"n must be an integer in [2, 12], got {n}")
    if int(k) != k or not (0 <= k <= 5):
        raise InvalidArgument(f"k must be an integer in [0, 5], got {k}")
    n, k = int(n), int(k)
    q = ctx.q
    p = q ** (1.0 / n)
    lhs = Approx(0.0, 0.0)
    for i in range(1, n):
        lhs = lhs + psi_q_deriv(ctx, i / n, k)
    base_term = psi_q_deriv_at_base(ctx, p, 1.0, k).scale(float(n ** (k + 1)))
    rhs = base_term - psi_q_deriv(ctx, 1.0, k)
    if k == 0:
        ratio = math.log1p(-q) - math.log1p(-p)
        rhs = rhs - Approx(n * ratio, _RND * n * abs(ratio))
    if lhs.value * rhs.value <= 0.0 and abs(lhs.value) > lhs.err:
        return IdentityResidual(f"psi-sum(n={n}, k={k})", lhs, rhs, math.inf, tol)
    return _residual(f"psi-sum(n={n}, k={k})", _log_abs(lhs), _log_abs(rhs), tol)


def check_moebius_product(ctx: QContext, n: int, tol: float = DEFAULT_TOL) -> IdentityResidual:
    """Moebius-inverted coprime product:

    prod_{(i,n)=1} (1 - q^{i/n}) = prod_{d|n} (q^(1/d); q^(1/d))_{d-1}^{mu(n/d)}.
    """
    if int(n) != n or not (2 <= n <= 30):
        raise InvalidArgument(f"n must be an integer in [2, 30], got {n}")
    n = int(n)
    q = ctx.q
    lnq = math.log(q)
    ks = np.array([k for k in coprime_residues(n) if k < n], dtype=np.float64)
    terms = np.log1p(-np.exp(ks / n * lnq))
    lhs = Approx(float(np.sum(terms)), _RND * float(np.sum(np.abs(terms))) + 1e-300)
    rhs = Approx(0.0, 0.0)
    for d in divisors(n):
        mu = moebius(n // d)
        if mu == 0 or d == 1:  # d=1 contributes the empty product
            continue
        # log (q^(1/d); q^(1/d))_{d-1} = sum_{j<d} log(1 - q^(j/d))
        js = np.arange(1, d, dtype=np.float64)
        fac = np.log1p(-np.exp(js / d * lnq))
        rhs = rhs + Approx(
            float(np.sum(fac)), _RND * float(np.sum(np.abs(fac))) + 1e-300
        ).scale(mu)
    return _residual(f"moebius-product(n={n})", lhs, rhs, tol)
