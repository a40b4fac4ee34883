"""Load thresholds and related constants for k-ary cuckoo hashing.

Everything here is a pure function of its arguments. Implicit equations are
solved by bisection; each solver checks the residual of its answer before
returning it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

# bisection stops once the bracket is narrower than this (relative to |x| >= 1)
ARG_TOL = 1e-12
# every implicit-equation solution must substitute back to within this
RESIDUAL_TOL = 1e-10
_SERIES_CUTOFF = 1e-5


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of a formula."""


def _check_k(k: int) -> None:
    if int(k) != k or k < 3:
        raise DomainError(f"k must be an integer >= 3, got {k!r}")


def one_minus_exp(x: float) -> float:
    """``1 - e^{-x}`` without cancellation for small x."""
    return -math.expm1(-x)


def truncated_poisson_tail(x: float) -> float:
    """``1 - e^{-x} - x e^{-x}``, the probability that Poisson(x) is at least 2."""
    if x < _SERIES_CUTOFF:
        return x * x / 2.0 - x**3 / 3.0 + x**4 / 8.0
    return -math.expm1(-x) - x * math.exp(-x)


def f_density(x: float, k: int) -> float:
    """Edge/vertex ratio of the core when its Poisson degree parameter is x.

    Strictly increasing on x > 0, with limit 2/k at 0.
    """
    if x < _SERIES_CUTOFF:
        # x(x - x^2/2) / (x^2/2 - x^3/3) = (1 - x/2) / (1/2 - x/3)
        return (1.0 - x / 2.0) / (k * (0.5 - x / 3.0))
    return x * one_minus_exp(x) / (k * truncated_poisson_tail(x))


def g_load(x: float, k: int) -> float:
    """Load c at which the core's Poisson degree parameter equals x."""
    if x < _SERIES_CUTOFF:
        # (1 - e^{-x})^{k-1} ~ x^{k-1}(1 - x/2)^{k-1}
        return x ** (2 - k) / (k * (1.0 - x / 2.0) ** (k - 1))
    return x / (k * one_minus_exp(x) ** (k - 1))


def bisect(
    func: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = ARG_TOL,
    max_iter: int = 400,
) -> float:
    """Root of ``func`` in ``[lo, hi]``; the endpoints must straddle a sign change."""
    flo, fhi = func(lo), func(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise DomainError(f"root not bracketed in [{lo}, {hi}]")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = func(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
        if hi - lo <= tol * max(1.0, abs(lo)):
            break
    return 0.5 * (lo + hi)


def _expand_upward(func: Callable[[float], float], lo: float, hi: float) -> float:
    """Double ``hi`` until ``func`` changes sign relative to ``func(lo)``."""
    sign_lo = func(lo) > 0
    for _ in range(200):
        if (func(hi) > 0) != sign_lo:
            return hi
        hi *= 2.0
    raise DomainError("failed to bracket root")


def xi_residual(xi: float, k: int) -> float:
    """``k - xi(1 - e^{-xi}) / (1 - e^{-xi} - xi e^{-xi})``."""
    return k - xi * one_minus_exp(xi) / truncated_poisson_tail(xi)


def solve_xi_star(k: int) -> float:
    """Core degree parameter at which the core has as many edges as vertices."""
    _check_k(k)
    target = lambda x: f_density(x, k) - 1.0  # noqa: E731
    lo = 1e-3
    hi = _expand_upward(target, lo, 1.0)
    xi = bisect(target, lo, hi)
    if abs(xi_residual(xi, k)) >= RESIDUAL_TOL:
        raise ArithmeticError(f"xi* residual too large for k={k}")
    return xi


def load_threshold(k: int) -> float:
    """The orientability threshold c_k*: m/n above which no valid table exists."""
    return g_load(solve_xi_star(k), k)


def walk_exponent(k: int) -> float:
    """Exponent c in the O(log^{2+c+zeta} n) insertion-time bound."""
    _check_k(k)
    # log_k((k-1) e^k) / ((k-1) log_k(k-1)); the log_k normalisations cancel
    return (math.log(k - 1) + k) / ((k - 1) * math.log(k - 1))


def g_minimizer(k: int) -> float:
    """Unique minimiser of g on x > 0.

    g'(x) vanishes where ``e^x - 1 = (k-1) x``; that equation has exactly one
    positive root, and it is the minimiser.
    """
    _check_k(k)
    stationary = lambda x: math.expm1(x) - (k - 1) * x  # noqa: E731
    lo = 1e-6
    hi = _expand_upward(stationary, lo, 1.0)
    return bisect(stationary, lo, hi)


def lambda_k(k: int) -> float:
    """Minimum of ``x / (1 - e^{-x})^{k-1}`` over x > 0 (the core-emergence point of c*k)."""
    x_g = g_minimizer(k)
    return k * g_load(x_g, k)


@dataclass(frozen=True)
class ThresholdReport:
    k: int
    xi_star: float
    c_star: float
    lambda_k: float
    walk_exponent: float

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "xi_star": self.xi_star,
            "c_star": self.c_star,
            "lambda_k": self.lambda_k,
            "walk_exponent": self.walk_exponent,
        }


def threshold_report(k: int) -> ThresholdReport:
    xi = solve_xi_star(k)
    return ThresholdReport(
        k=int(k),
        xi_star=xi,
        c_star=g_load(xi, k),
        lambda_k=lambda_k(k),
        walk_exponent=walk_exponent(k),
    )


@dataclass(frozen=True)
class CorePrediction:
    """Asymptotic size of the 2-core of a random k-graph with cn edges.

    Fractions are relative to n. The empty prediction (below core emergence)
    has every field equal to zero.
    """

    vertex_fraction: float
    edge_fraction: float
    xi: float
    density: float

    @property
    def empty(self) -> bool:
        return self.vertex_fraction == 0.0


EMPTY_CORE = CorePrediction(0.0, 0.0, 0.0, 0.0)


def core_xi(c: float, k: int) -> float:
    """Largest xi with g(xi) = c, or 0.0 when c*k does not exceed lambda_k."""
    _check_k(k)
    if not 0.0 < c < 1.0:
        raise DomainError(f"c must lie in (0, 1), got {c!r}")
    x_g = g_minimizer(k)
    if c * k <= k * g_load(x_g, k):
        return 0.0
    # g is increasing to the right of its minimiser
    target = lambda x: g_load(x, k) - c  # noqa: E731
    hi = _expand_upward(target, x_g, 2.0 * x_g)
    return bisect(target, x_g, hi)


def core_prediction(c: float, k: int) -> CorePrediction:
    xi = core_xi(c, k)
    if xi == 0.0:
        return EMPTY_CORE
    vertex_fraction = truncated_poisson_tail(xi)
    density = f_density(xi, k)
    return CorePrediction(
        vertex_fraction=vertex_fraction,
        edge_fraction=density * vertex_fraction,
        xi=xi,
        density=density,
    )


def _log(x: float, base: float) -> float:
    if base == 2:
        return math.log2(x)
    return math.log(x) / math.log(base)


def phase_length(n: int, k: int, zeta: float, C: int) -> int:
    """Length ``ceil(T) + C`` of one walk phase, where
    ``T = log_{k-1} n + (c + zeta) log_{k-1} log_{k-1} n``.
    """
    _check_k(k)
    if n < 3:
        raise DomainError(f"n must be >= 3, got {n}")
    if zeta <= 0:
        raise DomainError("zeta must be positive")
    if C < 0:
        raise DomainError("C must be non-negative")
    depth = _log(n, k - 1)
    if depth <= 0:
        raise DomainError(f"log_{k - 1} log_{k - 1} n undefined for n={n}")
    T = depth + (walk_exponent(k) + zeta) * _log(depth, k - 1)
    return math.ceil(T) + int(C)


def stripping_constant(alpha: float, delta: float) -> int:
    """``ceil(log_{1-delta} alpha)``: rounds of free-vertex stripping that leave
    fewer than ``alpha * |V|`` vertices under a density bound delta."""
    if not (0.0 < alpha < 1.0 and 0.0 < delta < 1.0):
        raise DomainError("alpha and delta must both lie in (0, 1)")
    ratio = math.log(alpha) / math.log1p(-delta)
    nearest = round(ratio)
    # exact powers such as alpha = (1-delta)^2 must not round up through fp noise
    if abs(ratio - nearest) <= 1e-12 * max(1.0, nearest):
        return int(nearest)
    return math.ceil(ratio)
