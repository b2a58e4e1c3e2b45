"""Closed-form bounds on NEE, lEE and NE, and the eigenvalue localizers.

Each formula is a plain function of scalars that raises
:class:`~nlbounds.errors.GuardViolated` when its assumptions fail.
Several formulas carry an ordering assumption that makes the vector they are
evaluated at a valid (nonincreasing) minimal element; ``enforce_guard=False``
evaluates them anyway, which is how reference values outside the assumption
are produced for the comparison tables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import GuardViolated, NotApplicable
from .graph import Graph

__all__ = [
    "EigenLocalizers",
    "eigen_localizers",
    "localizer_q",
    "localizer_r",
    "nee_lower_li",
    "nee_lower_alpha",
    "nee_lower_alpha_beta",
    "nee_lower_bipartite",
    "nee_lower_bipartite_beta",
    "lee_lower_alpha",
    "lee_lower_alpha_beta",
    "ne_upper_k1",
    "ne_upper_k1_k2",
    "ne_upper_bipartite",
    "ne_upper_bipartite_k2",
    "ne_upper_cavers1",
    "ne_upper_cavers2",
    "nee_randic_lower",
    "nee_randic_upper",
    "nee_randic_bounds",
    "lee_randic_lower",
    "lee_randic_upper",
    "lee_randic_bounds",
    "lee_hakimi_bounds",
    "hakimi1",
    "hakimi2",
    "hakimi3",
    "hakimi4",
    "relative_error",
]

E = math.e
_EPS = 1e-12


# -- eigenvalue localizers -------------------------------------------------

@dataclass(frozen=True)
class EigenLocalizers:
    """Lower bounds ``Q <= gamma_1`` and ``R <= gamma_2`` from degrees alone.

    ``b`` is the trace of the squared normalized Laplacian and
    ``h_star = floor(n^2 / b)``; both are exact rationals/integers.
    ``Q``/``R`` are ``None`` when not defined for the graph.
    """

    n: int
    b: Fraction
    h_star: int
    Q: float | None
    R: float | None


def _trace_sq(g: Graph) -> Fraction:
    return g.n + 2 * g.edge_inv_deg_sum_exact()


def _q_from(n: int, b: Fraction) -> float:
    h_star = math.floor(Fraction(n * n) / b)
    if h_star < 1:
        raise NotApplicable(f"h* = floor(n^2/b) = {h_star}")
    radicand = (b * (h_star + 1) - n * n) / h_star
    if radicand < 0:
        raise NotApplicable(f"negative radicand {radicand} in Q")
    return (n + math.sqrt(radicand)) / (1 + h_star)


def _r_from(n: int, b: Fraction) -> float:
    if n < 3:
        raise NotApplicable("R needs n >= 3")
    radicand = (b * (n - 1) - n * n) / (n - 2)
    if radicand < 0:
        raise NotApplicable(f"negative radicand {radicand} in R")
    return (n - math.sqrt(radicand)) / (n - 1)


def localizer_q(g: Graph) -> float:
    return _q_from(g.n, _trace_sq(g))


def localizer_r(g: Graph) -> float:
    return _r_from(g.n, _trace_sq(g))


def eigen_localizers(g: Graph) -> EigenLocalizers:
    n, b = g.n, _trace_sq(g)
    try:
        q = _q_from(n, b)
    except NotApplicable:
        q = None
    try:
        r = _r_from(n, b)
    except NotApplicable:
        r = None
    return EigenLocalizers(n=n, b=b, h_star=math.floor(Fraction(n * n) / b), Q=q, R=r)


# -- NEE lower bounds ------------------------------------------------------

def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GuardViolated(msg)


def nee_lower_li(n: int) -> float:
    """``(n-1) e^{1/(n-1)} + 1/e``, valid for every connected graph."""
    _need(n >= 2, "n >= 2")
    return (n - 1) * math.exp(1.0 / (n - 1)) + 1.0 / E


def nee_lower_alpha(n: int, alpha: float) -> float:
    """Lower bound given ``gamma_1 >= alpha``."""
    _need(n >= 3, "n >= 3")
    _need(alpha >= n / (n - 1) - _EPS, f"alpha = {alpha} < n/(n-1)")
    return 1.0 / E + math.exp(alpha - 1) + (n - 2) * math.exp((2 - alpha) / (n - 2))


def _check_pair(n: int, alpha: float, beta: float, total: float, enforce_guard: bool) -> None:
    _need(n >= 4, "n >= 4")
    _need(alpha >= beta - _EPS, f"alpha = {alpha} < beta = {beta}")
    if enforce_guard:
        _need(alpha + beta * (n - 2) > total,
              f"alpha + beta(n-2) = {alpha + beta * (n - 2):.12g} <= {total:.12g}")


def nee_lower_alpha_beta(n: int, alpha: float, beta: float, *,
                         enforce_guard: bool = True) -> float:
    """Lower bound given ``gamma_1 >= alpha`` and ``gamma_2 >= beta``.

    Requires ``alpha >= beta`` and ``alpha + beta(n-2) > n``.
    """
    _check_pair(n, alpha, beta, n, enforce_guard)
    return (1.0 / E + math.exp(alpha - 1) + math.exp(beta - 1)
            + (n - 3) * math.exp((3 - alpha - beta) / (n - 3)))


def nee_lower_bipartite(n: int) -> float:
    """``1/e + e + (n-2)`` for bipartite graphs (``gamma_1 = 2``)."""
    _need(n >= 3, "n >= 3")
    return 1.0 / E + E + (n - 2)


def nee_lower_bipartite_beta(n: int, beta: float) -> float:
    """Bipartite lower bound given ``gamma_2 >= beta`` with ``1 < beta <= 2``."""
    _need(n >= 4, "n >= 4")
    _need(1 < beta <= 2 + _EPS, f"beta = {beta} outside (1, 2]")
    return 1.0 / E + E + math.exp(beta - 1) + (n - 3) * math.exp((1 - beta) / (n - 3))


def lee_lower_alpha(n: int, alpha: float) -> float:
    _need(n >= 3, "n >= 3")
    _need(alpha >= n / (n - 1) - _EPS, f"alpha = {alpha} < n/(n-1)")
    return 1.0 + math.exp(alpha) + (n - 2) * math.exp((n - alpha) / (n - 2))


def lee_lower_alpha_beta(n: int, alpha: float, beta: float, *,
                         enforce_guard: bool = True) -> float:
    """``1 + e^alpha + e^beta + (n-3) e^{(n-alpha-beta)/(n-3)}``.

    The leading 1 is the contribution of the zero eigenvalue, so this is
    exactly ``e`` times :func:`nee_lower_alpha_beta`.
    """
    _check_pair(n, alpha, beta, n, enforce_guard)
    return (1.0 + math.exp(alpha) + math.exp(beta)
            + (n - 3) * math.exp((n - alpha - beta) / (n - 3)))


# -- NE upper bounds -------------------------------------------------------

def ne_upper_k1(n: int, a: float, k1: float) -> float:
    """``1 + sqrt(k1) + sqrt((n-2)(a-k1))`` where ``a = 2 R_{-1} - 1``."""
    _need(n >= 3, "n >= 3")
    _need(k1 >= 0, f"k1 = {k1} < 0")
    _need(k1 <= a + _EPS, f"k1 = {k1} > a = {a}")
    return 1.0 + math.sqrt(k1) + math.sqrt((n - 2) * max(a - k1, 0.0))


def ne_upper_k1_k2(n: int, a: float, k1: float, k2: float, *,
                   enforce_guard: bool = True) -> float:
    """``1 + sqrt(k1) + sqrt(k2) + sqrt((n-3)(a-k1-k2))``.

    The guard ``k1 >= k2`` and ``k1 + k2(n-2) > a`` keeps ``(k1, k2, rest)``
    nonincreasing; outside it the value can undercut the true energy.
    """
    _need(n >= 4, "n >= 4")
    _need(k1 >= 0 and k2 >= 0, "k1, k2 >= 0")
    _need(k1 + k2 <= a + _EPS, f"k1 + k2 = {k1 + k2} > a = {a}")
    if enforce_guard:
        _need(k1 >= k2, f"k1 = {k1} < k2 = {k2}")
        _need(k1 + k2 * (n - 2) > a, f"k1 + k2(n-2) = {k1 + k2 * (n - 2):.12g} <= a = {a:.12g}")
    return 1.0 + math.sqrt(k1) + math.sqrt(k2) + math.sqrt((n - 3) * max(a - k1 - k2, 0.0))


def ne_upper_bipartite(n: int, a: float) -> float:
    """``2 + sqrt(a(n-2))`` where here ``a = 2 R_{-1} - 2``."""
    _need(n >= 3, "n >= 3")
    _need(a >= -_EPS, f"a = {a} < 0")
    return 2.0 + math.sqrt(max(a, 0.0) * (n - 2))


def ne_upper_bipartite_k2(n: int, a: float, k2: float, *,
                          enforce_guard: bool = True) -> float:
    """``2 + sqrt(k2) + sqrt((n-3)(a-k2))`` for bipartite graphs.

    Guard: ``k2 <= 1`` (``beta <= 2``) and ``k2 (n-2) > a`` so that ``k2``
    leads the remaining ``n-3`` equal terms.
    """
    _need(n >= 4, "n >= 4")
    _need(0 <= k2 <= a + _EPS, f"k2 = {k2} outside [0, a = {a}]")
    if enforce_guard:
        _need(k2 <= 1 + _EPS, f"k2 = {k2} > 1")
        _need(k2 * (n - 2) > a, f"k2(n-2) = {k2 * (n - 2):.12g} <= a = {a:.12g}")
    return 2.0 + math.sqrt(k2) + math.sqrt((n - 3) * max(a - k2, 0.0))


def ne_upper_cavers1(n: int) -> float:
    _need(n >= 2, "n >= 2")
    return float(2 * (n // 2))


def ne_upper_cavers2(n: int) -> float:
    _need(n >= 2, "n >= 2")
    return math.sqrt(15 / 28) * (n + 1)


# -- Randić-based NEE / lEE bounds -----------------------------------------

def _safe_exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def nee_randic_lower(n: int, lower: float, bipartite: bool) -> float:
    """Lower NEE bound from a lower bound on the Randić index."""
    if bipartite:
        _need(n >= 3, "n >= 3")
        rad = (n - 2) ** 2 + 4 * (lower - 1)
        _need(rad >= 0, f"negative radicand {rad}")
        return 1.0 / E + E + math.sqrt(rad)
    _need(n >= 2, "n >= 2")
    return math.sqrt((n - 1) * (1 + (n - 2) * math.exp(2 / (n - 1))) + 4 * lower)


def nee_randic_upper(n: int, upper: float, bipartite: bool) -> float:
    """Upper NEE bound from an upper bound on the Randić index.

    The exponential term uses the squared spread of the nonzero eigenvalues
    rather than the spread itself, which only dominates once that spread is
    at least 1. Hence the guards ``upper >= 3/2`` (bipartite) and
    ``upper >= 1`` (general).
    """
    if bipartite:
        _need(n >= 3, "n >= 3")
        _need(upper >= 1.5, f"U = {upper} < 3/2")
        s2 = 2 * (upper - 1)
        return 1.0 / E + E + (n - 3) - math.sqrt(s2) + _safe_exp(s2)
    _need(n >= 2, "n >= 2")
    _need(upper >= 1, f"U = {upper} < 1")
    s2 = 2 * upper - 1
    return 1.0 / E + (n - 1) - math.sqrt(s2) + _safe_exp(s2)


def nee_randic_bounds(n: int, L1: float, U1: float, bipartite: bool) -> tuple[float, float]:
    _need(L1 <= U1 + _EPS, f"L1 = {L1} > U1 = {U1}")
    return nee_randic_lower(n, L1, bipartite), nee_randic_upper(n, U1, bipartite)


def lee_randic_lower(n: int, lower: float) -> float:
    """``e`` times the general NEE lower bound."""
    _need(n >= 2, "n >= 2")
    return math.sqrt((n - 1) * (E * E + (n - 2) * math.exp(2 + 2 / (n - 1)))
                     + 4 * E * E * lower)


def lee_randic_upper(n: int, upper: float) -> float:
    _need(n >= 2, "n >= 2")
    _need(upper >= 1, f"U = {upper} < 1")
    return 1.0 + E * ((n - 1) - math.sqrt(2 * upper - 1)) + _safe_exp(2 * upper)


def lee_randic_bounds(n: int, L1: float, U1: float) -> tuple[float, float]:
    _need(L1 <= U1 + _EPS, f"L1 = {L1} > U1 = {U1}")
    return lee_randic_lower(n, L1), lee_randic_upper(n, U1)


def hakimi1(n: int) -> float:
    return n * E


def hakimi2(n: int) -> float:
    rad = n * (n - 1) * E * E - 6 * n + 4
    _need(rad >= 0, f"negative radicand {rad}")
    return 2.0 + math.sqrt(rad)


def hakimi3(n: int, randic: float) -> float:
    _need(randic > 0, "Randić index must be positive")
    return math.sqrt(n * (n - 1) * E * E + 4 * randic + 5 * n)


def hakimi4(n: int, randic: float) -> float:
    """``e^n + R_{-1} + n(3-n)/2 - 1``; ``inf`` once ``e^n`` overflows."""
    _need(randic > 0, "Randić index must be positive")
    return _safe_exp(n) + randic + n * (3 - n) / 2 - 1


def lee_hakimi_bounds(n: int, randic: float) -> tuple[tuple[float, float, float], float]:
    _need(n >= 2, "n >= 2")
    return (hakimi1(n), hakimi2(n), hakimi3(n, randic)), hakimi4(n, randic)


def relative_error(bound: float, exact: float) -> float:
    if not exact > 0:
        raise ValueError(f"exact value must be positive, got {exact}")
    return abs(bound - exact) / exact
