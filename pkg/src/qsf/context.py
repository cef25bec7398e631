"""Evaluation context and error-tracked values.

Every numeric routine in this package evaluates relative to a QContext
(the base q plus truncation targets) and reports results as Approx
values carrying an explicit bound on the absolute truncation error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import InvalidArgument

# Accepted base range.  The verification sampler stays inside
# [1e-4, 0.9995]; the context itself admits a wider band because derived
# bases (q**n for multiplication formulas, q**(1/n) for product
# identities, and near-1 bases for classical-limit comparisons) fall
# outside the sampling window.
Q_MIN = 1e-12
Q_MAX = 0.99995

#: default absolute truncation error target
DEFAULT_EPS = 1e-12
#: default hard cap on series/product length (covers bases up to Q_MAX)
DEFAULT_MAX_TERMS = 2_000_000


@dataclass(frozen=True)
class QContext:
    """Base q in (0,1) plus truncation tolerance and a term cap.

    eps is the target absolute truncation error for series evaluations;
    max_terms caps how many terms/factors any single evaluation may use.
    """

    q: float
    eps: float = DEFAULT_EPS
    max_terms: int = DEFAULT_MAX_TERMS

    def __post_init__(self) -> None:
        if not (isinstance(self.q, (int, float)) and math.isfinite(self.q)):
            raise InvalidArgument(f"q must be a finite real, got {self.q!r}")
        if not (0.0 < self.q < 1.0):
            raise InvalidArgument(f"q must lie strictly in (0,1), got {self.q}")
        if not (Q_MIN <= self.q <= Q_MAX):
            raise InvalidArgument(
                f"q={self.q} outside the supported band [{Q_MIN}, {Q_MAX}]"
            )
        if not (self.eps > 0.0 and math.isfinite(self.eps)):
            raise InvalidArgument(f"eps must be a finite positive real, got {self.eps}")
        if self.max_terms < 16:
            raise InvalidArgument(f"max_terms must be >= 16, got {self.max_terms}")

    @property
    def log_q(self) -> float:
        return math.log(self.q)

    def rebase(self, q: float) -> "QContext":
        """Same tolerances, different base (used by multiplication formulas)."""
        return replace(self, q=q)

    def tighten(self, factor: float) -> "QContext":
        """Shrink eps by `factor` (floored to avoid chasing rounding noise)."""
        return replace(self, eps=max(self.eps / factor, 1e-30))


@dataclass(frozen=True)
class Approx:
    """A computed value together with a bound on its absolute error."""

    value: float
    err: float = 0.0

    def __post_init__(self) -> None:
        if self.err < 0.0 or (math.isfinite(self.value) and not math.isfinite(self.err)):
            raise InvalidArgument(f"bad error bound {self.err} for value {self.value}")

    def __add__(self, other: "Approx | float") -> "Approx":
        if isinstance(other, Approx):
            return Approx(self.value + other.value, self.err + other.err)
        return Approx(self.value + other, self.err)

    def __sub__(self, other: "Approx | float") -> "Approx":
        if isinstance(other, Approx):
            return Approx(self.value - other.value, self.err + other.err)
        return Approx(self.value - other, self.err)

    def __neg__(self) -> "Approx":
        return Approx(-self.value, self.err)

    def scale(self, c: float) -> "Approx":
        return Approx(c * self.value, abs(c) * self.err)

    def mul(self, other: "Approx") -> "Approx":
        v = self.value * other.value
        e = (
            abs(self.value) * other.err
            + abs(other.value) * self.err
            + self.err * other.err
        )
        return Approx(v, e)

    def exp(self) -> "Approx":
        """exp with first-order (but still rigorous) error propagation."""
        v = math.exp(self.value)
        return Approx(v, v * math.expm1(self.err) if self.err < 700 else math.inf)

    def log(self) -> "Approx":
        if self.value <= self.err:
            return Approx(math.log(self.value) if self.value > 0 else -math.inf, math.inf)
        return Approx(math.log(self.value), self.err / (self.value - self.err))
