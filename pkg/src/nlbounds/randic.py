"""Randić index bounds from majorization extremals of the edge vector.

For a degree sequence with ``h`` pendant vertices the vector ``x`` of edge
terms ``1/d_i + 1/d_j`` sums to ``n`` and, once sorted, lives in a box-shaped
slice of the simplex: the ``h`` pendant edges sit in ``[m1, M1]`` and the other
``m - h`` edges in ``[m2, M2]``. The Randić index is
``(||x||^2 - sum 1/d_i) / 2``, a Schur-convex function of ``x``, so its range
over the class is bracketed by the minimal and maximal elements of that set.

All block parameters are rationals; the floors defining ``k`` are taken in
exact arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    DegenerateCase,
    NotGraphical,
    NotPendantForm,
    OrderingPremiseViolated,
    StarGraph,
)
from .graph import DegreeSequence, Graph, degree_sequence

__all__ = [
    "PendantForm",
    "RandicExtremals",
    "classify_pendant_sequence",
    "maximal_element",
    "minimal_element",
    "randic_extremals",
    "randic_bounds_majorization",
    "randic_bounds_classical",
    "is_majorized",
]


@dataclass(frozen=True)
class PendantForm:
    n: int
    m: int
    h: int
    d1: int
    d2: int
    d_nh: int
    d_nh1: int
    inv_degree_sum: Fraction

    @property
    def m1(self) -> Fraction:
        return 1 + Fraction(1, self.d1)

    @property
    def m2(self) -> Fraction:
        return Fraction(1, self.d1) + Fraction(1, self.d2)

    @property
    def M1(self) -> Fraction:
        return 1 + Fraction(1, self.d_nh)

    @property
    def M2(self) -> Fraction:
        return Fraction(1, self.d_nh) + Fraction(1, self.d_nh1)

    @property
    def a_star(self) -> Fraction:
        return self.h * self.M1 + (self.m - self.h) * self.m2

    @property
    def a_tilde(self) -> Fraction:
        return self.h * self.m1 + (self.m - self.h) * self.M2


def _as_sequence(ds: DegreeSequence | Sequence[int]) -> DegreeSequence:
    return ds if isinstance(ds, DegreeSequence) else DegreeSequence(tuple(ds))


def classify_pendant_sequence(ds: DegreeSequence | Sequence[int]) -> PendantForm:
    """Validate ``(d_1, ..., d_{n-h}, 1, ..., 1)`` with ``h > 0`` and ``n - h >= 2``."""
    ds = _as_sequence(ds)
    if not ds.is_graphical():
        raise NotGraphical(f"{ds.values} is not realizable by a simple graph")
    n, h = ds.n, ds.pendant_count
    if h == 0:
        raise NotPendantForm(f"{ds.values} has no pendant vertices")
    if n - h < 2:
        raise StarGraph(f"{ds.values} is a star; its Randić index is 1")
    form = PendantForm(
        n=n,
        m=ds.m,
        h=h,
        d1=ds[1],
        d2=ds[2],
        d_nh=ds[n - h],
        d_nh1=ds[n - h - 1],
        inv_degree_sum=sum((Fraction(1, d) for d in ds.values), Fraction(0)),
    )
    if form.m <= form.h:
        raise DegenerateCase(f"m = {form.m} <= h = {form.h}: no edge between non-pendant vertices")
    if not form.M2 < form.m1:
        raise OrderingPremiseViolated(
            f"1/d_(n-h) + 1/d_(n-h-1) = {form.M2} is not below 1 + 1/d_1 = {form.m1}"
        )
    lo = form.h * form.m1 + (form.m - form.h) * form.m2
    hi = form.h * form.M1 + (form.m - form.h) * form.M2
    if not lo <= n <= hi:
        raise DegenerateCase(f"no vector with sum {n} fits the bounds [{lo}, {hi}]")
    return form


def _nonincreasing(v: Sequence[Fraction]) -> bool:
    return all(a >= b for a, b in zip(v, v[1:]))


def maximal_element(ds) -> tuple[int, Fraction, tuple[Fraction, ...]]:
    """``(k, theta, x_max)`` for the pendant-form set.

    ``theta`` is whatever is left of ``n`` after the closed-form blocks; if it
    cannot sit in its fixed slot without breaking the ordering the case is
    reported as :class:`DegenerateCase`.
    """
    f = ds if isinstance(ds, PendantForm) else classify_pendant_sequence(ds)
    n, m, h = f.n, f.m, f.h
    m1, m2, M1, M2 = f.m1, f.m2, f.M1, f.M2
    if n < f.a_star:
        if M1 == m1:
            raise DegenerateCase("pendant block is fixed but n < a*")
        k = math.floor((n - h * (m1 - m2) - m * m2) / (M1 - m1))
        if not 0 <= k <= h - 1:
            raise DegenerateCase(f"k = {k} outside [0, {h - 1}]")
        theta = n - k * M1 - (h - k - 1) * m1 - (m - h) * m2
        x = (M1,) * k + (theta,) + (m1,) * (h - k - 1) + (m2,) * (m - h)
    else:
        if M2 == m2:
            k = m - 1
        else:
            k = math.floor((n - h * (M1 - M2) - m * m2) / (M2 - m2))
        if not h <= k <= m - 1:
            raise DegenerateCase(f"k = {k} outside [{h}, {m - 1}]")
        theta = n - h * M1 - (k - h) * M2 - (m - k - 1) * m2
        x = (M1,) * h + (M2,) * (k - h) + (theta,) + (m2,) * (m - k - 1)
    if not _nonincreasing(x) or not m2 <= theta <= M1:
        raise DegenerateCase(f"theta = {theta} breaks the ordering of the maximal element")
    return k, theta, x


def minimal_element(ds) -> tuple[Fraction, ...]:
    f = ds if isinstance(ds, PendantForm) else classify_pendant_sequence(ds)
    n, m, h = f.n, f.m, f.h
    if n < f.a_tilde:
        tail = (n - h * f.m1) / (m - h)
        return (f.m1,) * h + (tail,) * (m - h)
    head = (n - f.M2 * (m - h)) / h
    return (head,) * h + (f.M2,) * (m - h)


@dataclass(frozen=True)
class RandicExtremals:
    form: PendantForm
    k: int
    theta: Fraction
    x_max: tuple[Fraction, ...]
    x_min: tuple[Fraction, ...]
    L1: float
    U1: float

    @property
    def m1(self) -> Fraction:
        return self.form.m1

    @property
    def m2(self) -> Fraction:
        return self.form.m2

    @property
    def M1(self) -> Fraction:
        return self.form.M1

    @property
    def M2(self) -> Fraction:
        return self.form.M2

    @property
    def a_star(self) -> Fraction:
        return self.form.a_star

    @property
    def a_tilde(self) -> Fraction:
        return self.form.a_tilde


def _randic_from_vector(x: Sequence[Fraction], inv_degree_sum: Fraction) -> Fraction:
    return (sum((v * v for v in x), Fraction(0)) - inv_degree_sum) / 2


def randic_extremals(ds) -> RandicExtremals:
    f = ds if isinstance(ds, PendantForm) else classify_pendant_sequence(ds)
    k, theta, x_max = maximal_element(f)
    x_min = minimal_element(f)
    return RandicExtremals(
        form=f,
        k=k,
        theta=theta,
        x_max=x_max,
        x_min=x_min,
        L1=float(_randic_from_vector(x_min, f.inv_degree_sum)),
        U1=float(_randic_from_vector(x_max, f.inv_degree_sum)),
    )


def randic_bounds_majorization(ds) -> tuple[float, float]:
    """``(L1, U1)`` bracketing the Randić index of every graph with this sequence."""
    ext = randic_extremals(ds)
    return ext.L1, ext.U1


def randic_bounds_classical(g: Graph | DegreeSequence | Sequence[int]) -> tuple[float, float]:
    """``(n / (2 d_max), n / (2 d_min))``."""
    ds = degree_sequence(g) if isinstance(g, Graph) else _as_sequence(g)
    return ds.n / (2 * ds[1]), ds.n / (2 * ds[ds.n])


def is_majorized(x: Sequence, y: Sequence, tol: float = 0.0) -> bool:
    """True if ``x`` is majorized by ``y`` (both sorted internally, equal sums)."""
    xs = sorted(x, reverse=True)
    ys = sorted(y, reverse=True)
    if len(xs) != len(ys):
        raise ValueError("vectors must have the same length")
    px = py = 0
    for a, b in zip(xs, ys):
        px += a
        py += b
        # difference first: adding a float tol would round exact rationals
        if px - py > tol:
            return False
    return abs(px - py) <= tol
