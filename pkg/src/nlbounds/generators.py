"""Seeded random graphs: Erdős–Rényi, Watts–Strogatz, fixed degree sequence.

Every call owns its generator (numpy PCG64). Attempt ``r`` of a call with
seed ``s`` draws from ``SeedSequence(s, spawn_key=(r,))``, so retries and
parallel runs are reproducible without any shared state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidRing, NotGraphical, RetriesExhausted
from .graph import DegreeSequence, Graph, from_edges0, is_connected, is_graphical

__all__ = [
    "GenSpec",
    "derive_seed",
    "rng_for",
    "generate",
    "erdos_renyi",
    "watts_strogatz",
    "ring_lattice",
    "havel_hakimi",
    "sample_degree_sequence",
]

SEED_MASK = (1 << 64) - 1


def derive_seed(seed: int, *keys: int) -> int:
    """Deterministic 64-bit child seed of ``seed`` along ``keys``."""
    ss = np.random.SeedSequence(seed & SEED_MASK, spawn_key=tuple(int(k) for k in keys))
    return int(ss.generate_state(1, np.uint64)[0])


def rng_for(seed: int, *keys: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(
        np.random.SeedSequence(seed & SEED_MASK, spawn_key=tuple(int(k) for k in keys))))


@dataclass(frozen=True)
class GenSpec:
    model: str
    n: int = 0
    q: float = 0.5
    p: float = 0.1
    ring_k: int = 1
    sequence: tuple[int, ...] = ()
    seed: int = 0
    require_connected: bool = True
    max_retries: int = 1000
    swaps: int | None = None

    def __post_init__(self):
        if self.model not in ("er", "ws", "degseq"):
            raise ValueError(f"unknown model {self.model!r}")
        if not 0.0 <= self.q <= 1.0 or not 0.0 <= self.p <= 1.0:
            raise ValueError("probabilities must lie in [0, 1]")
        if self.max_retries < 1:
            raise ValueError("max_retries must be >= 1")
        if self.model == "degseq" and self.sequence:
            object.__setattr__(self, "sequence", tuple(sorted(self.sequence, reverse=True)))
            object.__setattr__(self, "n", len(self.sequence))


def generate(spec: GenSpec) -> Graph:
    return {"er": erdos_renyi, "ws": watts_strogatz,
            "degseq": sample_degree_sequence}[spec.model](spec)


def _retry(spec: GenSpec, build) -> Graph:
    for attempt in range(spec.max_retries):
        g = build(rng_for(spec.seed, attempt))
        if not spec.require_connected or is_connected(g):
            return g
    raise RetriesExhausted(
        f"no connected {spec.model} graph (n={spec.n}) in {spec.max_retries} attempts"
    )


def erdos_renyi(spec: GenSpec) -> Graph:
    """G(n, q): every vertex pair is an edge independently with probability q."""
    n = spec.n
    if n < 1:
        raise ValueError("n must be positive")
    iu, ju = np.triu_indices(n, k=1)

    def build(rng):
        keep = rng.random(iu.size) < spec.q
        return from_edges0(n, zip(iu[keep].tolist(), ju[keep].tolist()))

    return _retry(spec, build)


def ring_lattice(n: int, ring_k: int) -> list[tuple[int, int]]:
    """Edges ``(i, i+j mod n)`` for ``j = 1..ring_k``, grouped by ``j``."""
    if ring_k < 1 or 2 * ring_k >= n:
        raise InvalidRing(f"need 1 <= ring_k and 2*ring_k < n, got ring_k={ring_k}, n={n}")
    return [(i, (i + j) % n) for j in range(1, ring_k + 1) for i in range(n)]


def watts_strogatz(spec: GenSpec) -> Graph:
    """Ring lattice rewired lap by lap.

    Lap ``j`` visits each vertex clockwise and, with probability ``p``,
    moves its edge to the ``j``-th clockwise neighbour onto a uniformly chosen
    vertex that is neither itself nor already adjacent. The edge count is
    preserved.
    """
    n, k = spec.n, spec.ring_k
    lattice = ring_lattice(n, k)

    def build(rng):
        adj = [set() for _ in range(n)]
        for u, v in lattice:
            adj[u].add(v)
            adj[v].add(u)
        for u, v in lattice:
            if rng.random() >= spec.p or v not in adj[u]:
                continue
            candidates = [w for w in range(n) if w != u and w not in adj[u]]
            if not candidates:
                continue
            w = candidates[int(rng.integers(len(candidates)))]
            adj[u].discard(v)
            adj[v].discard(u)
            adj[u].add(w)
            adj[w].add(u)
        return from_edges0(n, ((u, w) for u in range(n) for w in adj[u] if u < w))

    return _retry(spec, build)


def havel_hakimi(seq: Sequence[int]) -> list[tuple[int, int]]:
    """Deterministic realization; vertex ``i`` gets degree ``seq[i]``."""
    if not is_graphical(seq):
        raise NotGraphical(f"{tuple(seq)} is not graphical")
    residual = [[d, i] for i, d in enumerate(seq)]
    edges = []
    while True:
        residual.sort(key=lambda t: (-t[0], t[1]))
        d, v = residual[0]
        if d == 0:
            return edges
        residual[0][0] = 0
        for t in residual[1:d + 1]:
            t[0] -= 1
            edges.append((min(v, t[1]), max(v, t[1])))


def _swap_chain(edges: list[tuple[int, int]], steps: int, rng: np.random.Generator) -> None:
    """Degree-preserving double-edge swaps in place; invalid proposals are skipped."""
    m = len(edges)
    if m < 2:
        return
    present = set(edges)
    picks = rng.integers(m, size=(steps, 2))
    flips = rng.random(steps) < 0.5
    for (x, y), flip in zip(picks.tolist(), flips.tolist()):
        if x == y:
            continue
        a, b = edges[x]
        c, d = edges[y]
        if flip:
            c, d = d, c
        # (a,b),(c,d) -> (a,d),(c,b)
        if a == d or c == b:
            continue
        e1 = (a, d) if a < d else (d, a)
        e2 = (c, b) if c < b else (b, c)
        if e1 in present or e2 in present or e1 == e2:
            continue
        present.discard(edges[x])
        present.discard(edges[y])
        present.add(e1)
        present.add(e2)
        edges[x] = e1
        edges[y] = e2


def sample_degree_sequence(spec: GenSpec) -> Graph:
    """Random member of the class of graphs with degree sequence ``spec.sequence``.

    Havel–Hakimi realization followed by ``spec.swaps`` (default ``10 m``)
    double-edge swaps. If the result is disconnected, the chain keeps running
    in further blocks of the same length, up to ``max_retries`` blocks.
    Uniformity over the class is not claimed.
    """
    seq = DegreeSequence(spec.sequence).values
    n = len(seq)
    edges = havel_hakimi(seq)
    steps = spec.swaps if spec.swaps is not None else 10 * len(edges)
    rng = rng_for(spec.seed, 0)
    for _ in range(spec.max_retries):
        _swap_chain(edges, steps, rng)
        g = from_edges0(n, edges)
        if not spec.require_connected or is_connected(g):
            return g
        steps = max(steps, len(edges))
    raise RetriesExhausted(f"no connected realization of {seq} found")
