"""Normalized Laplacian and its spectrum.

The eigensolver is a cyclic Jacobi method in round-robin (tournament)
ordering: each round applies ``floor(n/2)`` disjoint plane rotations at once,
so a round is a handful of vectorized row/column updates instead of a
Python loop over pivots. Eigenvalues only; eigenvectors are never formed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NoConvergence
from .graph import Graph, is_bipartite

__all__ = [
    "Spectrum",
    "SpectrumIdentities",
    "normalized_laplacian",
    "eigenvalues_symmetric",
    "eigenvalues_batch",
    "graph_spectrum",
    "graph_spectra",
    "spectrum_identities",
    "DEFAULT_OFF_TOL",
]

DEFAULT_OFF_TOL = 1e-12
DEFAULT_MAX_SWEEPS = 100
CLAMP_EPS = 1e-8


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted nonincreasing.

    ``tolerance`` is the accuracy the solver was asked for, relative to the
    Frobenius norm of the input; downstream comparisons reuse it.
    """

    values: tuple[float, ...]
    tolerance: float = DEFAULT_OFF_TOL
    sweeps: int = 0

    def __len__(self) -> int:
        return len(self.values)

    def array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def clamped(self, eps: float = CLAMP_EPS) -> np.ndarray:
        """Values with the last one set to 0 and tiny negatives lifted to 0.

        Only meaningful for normalized-Laplacian spectra of connected graphs,
        where the smallest eigenvalue is exactly zero.
        """
        g = self.array().copy()
        g[(g < 0) & (g >= -eps)] = 0.0
        if abs(g[-1]) <= eps:
            g[-1] = 0.0
        return g


def normalized_laplacian(g: Graph) -> np.ndarray:
    """``D^{-1/2} (D - A) D^{-1/2}`` as a dense symmetric array."""
    n = g.n
    lap = np.eye(n)
    inv_sqrt = 1.0 / np.sqrt(np.asarray(g.degrees, dtype=float))
    if g.edges:
        i, j = np.asarray(g.edges).T
        w = -inv_sqrt[i] * inv_sqrt[j]
        lap[i, j] = w
        lap[j, i] = w
    return lap


@lru_cache(maxsize=256)
def _round_robin(n: int) -> tuple[tuple[np.ndarray, np.ndarray], ...]:
    # circle method; odd n gets a phantom player whose pairings are dropped
    size = n + (n % 2)
    players = list(range(size))
    rounds = []
    for _ in range(size - 1):
        pairs = []
        for k in range(size // 2):
            a, b = players[k], players[size - 1 - k]
            if a < n and b < n:
                pairs.append((min(a, b), max(a, b)))
        p = np.array([x for x, _ in pairs], dtype=np.intp)
        q = np.array([y for _, y in pairs], dtype=np.intp)
        rounds.append((p, q))
        players = [players[0], players[-1]] + players[1:-1]
    return tuple(rounds)


def _off_norms(a: np.ndarray) -> np.ndarray:
    # direct sum; ||A||^2 - ||diag||^2 cancels down to ~1e-8 and never converges
    n = a.shape[-1]
    off = a.copy()
    off[:, np.arange(n), np.arange(n)] = 0.0
    return np.sqrt(np.einsum("bij,bij->b", off, off))


def _jacobi_round(a: np.ndarray, p: np.ndarray, q: np.ndarray) -> None:
    """Apply the disjoint rotations zeroing ``a[:, p, q]`` to every matrix in place."""
    apq = a[:, p, q]
    zero = apq == 0.0
    if zero.all():
        return
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        theta = (a[:, q, q] - a[:, p, p]) / (2.0 * apq)
        t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
    # a negligible apq gives theta = inf and t = 0, i.e. no rotation
    t = np.where(zero, 0.0, t)
    c = 1.0 / np.hypot(t, 1.0)
    s = t * c
    rp = a[:, p, :]
    rq = a[:, q, :]
    a[:, p, :] = c[..., None] * rp - s[..., None] * rq
    a[:, q, :] = s[..., None] * rp + c[..., None] * rq
    c, s = c[:, None, :], s[:, None, :]
    cp = a[:, :, p]
    cq = a[:, :, q]
    a[:, :, p] = cp * c - cq * s
    a[:, :, q] = cp * s + cq * c
    a[:, p, q] = 0.0
    a[:, q, p] = 0.0


def eigenvalues_batch(matrices, *, tol: float = DEFAULT_OFF_TOL,
                      max_sweeps: int = DEFAULT_MAX_SWEEPS) -> list[Spectrum]:
    """Eigenvalues of a stack of real symmetric ``n x n`` matrices.

    All matrices share one rotation schedule, so the per-round overhead is
    paid once for the whole stack. A matrix leaves the stack as soon as its
    off-diagonal Frobenius norm is below ``tol`` times its own norm.
    """
    a = np.array(matrices, dtype=float)
    if a.ndim != 3 or a.shape[1] != a.shape[2]:
        raise ValueError(f"expected a stack of square matrices, got shape {a.shape}")
    if not np.array_equal(a, a.transpose(0, 2, 1)):
        raise ValueError("matrix is not symmetric")
    count, n = a.shape[0], a.shape[1]
    thresholds = tol * np.sqrt(np.einsum("bij,bij->b", a, a))
    active = np.arange(count)
    out: list[Spectrum | None] = [None] * count
    rounds = _round_robin(n)
    for sweep in range(max_sweeps + 1):
        done = _off_norms(a) <= thresholds[active]
        for b in np.flatnonzero(done):
            vals = np.sort(np.diagonal(a[b]))[::-1]
            out[active[b]] = Spectrum(tuple(float(v) for v in vals), tolerance=tol, sweeps=sweep)
        if done.all():
            return out
        if done.any():
            keep = ~done
            a, active = a[keep], active[keep]
        if sweep == max_sweeps:
            break
        for p, q in rounds:
            _jacobi_round(a, p, q)
    worst = float(np.max(_off_norms(a) / np.maximum(thresholds[active], 1e-300) * tol))
    raise NoConvergence(
        f"{len(active)} matrix(es) not converged after {max_sweeps} sweeps; "
        f"relative off-diagonal norm {worst:.3e} above {tol:.1e}"
    )


def eigenvalues_symmetric(matrix, *, tol: float = DEFAULT_OFF_TOL,
                          max_sweeps: int = DEFAULT_MAX_SWEEPS) -> Spectrum:
    """All eigenvalues of a real symmetric matrix, nonincreasing.

    Stops once the off-diagonal Frobenius norm is below ``tol * ||A||_F``.
    Raises :class:`NoConvergence` if that takes more than ``max_sweeps``.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return eigenvalues_batch(a[None], tol=tol, max_sweeps=max_sweeps)[0]


def graph_spectrum(g: Graph, **kwargs) -> Spectrum:
    return eigenvalues_symmetric(normalized_laplacian(g), **kwargs)


def graph_spectra(graphs, **kwargs) -> list[Spectrum]:
    """Spectra of many graphs; graphs of equal order are solved as one batch."""
    graphs = list(graphs)
    out: list[Spectrum | None] = [None] * len(graphs)
    by_n: dict[int, list[int]] = {}
    for i, g in enumerate(graphs):
        by_n.setdefault(g.n, []).append(i)
    for idx in by_n.values():
        specs = eigenvalues_batch([normalized_laplacian(graphs[i]) for i in idx], **kwargs)
        for i, sp in zip(idx, specs):
            out[i] = sp
    return out


@dataclass(frozen=True)
class SpectrumIdentities:
    trace_ok: bool
    trace_residual: float
    second_moment_ok: bool
    second_moment_residual: float
    range_ok: bool
    range_residual: float
    kernel_ok: bool
    kernel_residual: float
    complete_equality: bool
    bipartite_equality: bool
    bipartite: bool

    @property
    def bipartite_consistent(self) -> bool:
        return self.bipartite_equality == self.bipartite

    @property
    def ok(self) -> bool:
        return (self.trace_ok and self.second_moment_ok and self.range_ok
                and self.kernel_ok and self.bipartite_consistent)


def spectrum_identities(g: Graph, s: Spectrum, *, tol: float = 1e-8,
                        equality_tol: float = 1e-6) -> SpectrumIdentities:
    """Check the four textbook properties of a normalized-Laplacian spectrum.

    1. trace: sum of eigenvalues equals n;
    2. second moment: sum of squares equals n + 2 * sum_E 1/(d_i d_j);
    3. n/(n-1) <= gamma_1 <= 2, the upper value reached by bipartite graphs;
    4. gamma_n = 0 and gamma_{n-1} > 0 for connected graphs.
    """
    gam = s.array()
    n = g.n
    trace_res = abs(gam.sum() - n)
    target = n + 2 * float(g.edge_inv_deg_sum_exact())
    sm_res = abs(float(np.dot(gam, gam)) - target)
    lo = n / (n - 1)
    range_res = max(0.0, lo - gam[0], gam[0] - 2.0, -gam.min())
    kernel_res = abs(gam[-1])
    kernel_ok = kernel_res <= tol and (n < 2 or gam[-2] > tol)
    return SpectrumIdentities(
        trace_ok=trace_res <= tol * n,
        trace_residual=float(trace_res),
        second_moment_ok=sm_res <= tol * n,
        second_moment_residual=float(sm_res),
        range_ok=range_res <= tol,
        range_residual=float(range_res),
        kernel_ok=bool(kernel_ok),
        kernel_residual=float(kernel_res),
        complete_equality=abs(gam[0] - lo) <= equality_tol,
        bipartite_equality=abs(gam[0] - 2.0) <= equality_tol,
        bipartite=is_bipartite(g),
    )
