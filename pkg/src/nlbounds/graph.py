"""Simple undirected graphs, degree sequences and edge-list I/O.

Vertices are 1-based at the I/O boundary (``from_edge_list``, edge-list
files) and 0-based everywhere inside the package.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    DuplicateEdge,
    IsolatedVertex,
    NotGraphical,
    ParseError,
    SelfLoop,
    VertexOutOfRange,
)

__all__ = [
    "Graph",
    "DegreeSequence",
    "from_edge_list",
    "from_edges0",
    "is_connected",
    "is_bipartite",
    "degree_sequence",
    "is_graphical",
    "read_edge_list",
    "parse_edge_list",
    "format_edge_list",
    "write_edge_list",
    "parse_degree_sequence",
]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``edges`` holds pairs ``(i, j)`` with ``i < j`` in sorted order, so two
    graphs with the same edge set compare equal and format identically.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        object.__setattr__(self, "degrees", tuple(deg))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return from_edges0(self.n, ((perm[i], perm[j]) for i, j in self.edges))

    def edge_inv_deg_sum_exact(self) -> Fraction:
        """Sum over edges of 1/(d_i d_j) as an exact rational."""
        d = self.degrees
        return sum((Fraction(1, d[i] * d[j]) for i, j in self.edges), Fraction(0))


@dataclass(frozen=True)
class DegreeSequence:
    """Nonincreasing degree sequence with its count of pendant vertices."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if any(a < b for a, b in zip(vals, vals[1:])):
            vals = tuple(sorted(vals, reverse=True))
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def m(self) -> int:
        return sum(self.values) // 2

    @property
    def pendant_count(self) -> int:
        return sum(1 for v in self.values if v == 1)

    def __getitem__(self, k: int) -> int:
        """1-based access, ``ds[1]`` is the largest degree."""
        if not 1 <= k <= len(self.values):
            raise IndexError(k)
        return self.values[k - 1]

    def is_graphical(self) -> bool:
        return is_graphical(self.values)


def _build(n: int, pairs: Iterable[tuple[int, int]], require_connected: bool,
           allow_isolated: bool) -> Graph:
    if n < 1:
        raise ParseError(f"vertex count must be positive, got {n}")
    seen: set[tuple[int, int]] = set()
    for i, j in pairs:
        if not (0 <= i < n and 0 <= j < n):
            raise VertexOutOfRange(f"edge ({i + 1}, {j + 1}) outside 1..{n}")
        if i == j:
            raise SelfLoop(f"self-loop at vertex {i + 1}")
        e = (i, j) if i < j else (j, i)
        if e in seen:
            raise DuplicateEdge(f"edge ({e[0] + 1}, {e[1] + 1}) listed twice")
        seen.add(e)
    g = Graph(n, tuple(sorted(seen)))
    if not allow_isolated:
        for v, d in enumerate(g.degrees):
            if d == 0:
                raise IsolatedVertex(f"vertex {v + 1} has no edges")
    if require_connected and not is_connected(g):
        raise Disconnected("graph is not connected")
    return g


def from_edge_list(pairs: Iterable[tuple[int, int]], n: int, *,
                   require_connected: bool = True) -> Graph:
    """Validate 1-based vertex pairs and build a :class:`Graph`."""
    return _build(n, ((int(i) - 1, int(j) - 1) for i, j in pairs),
                  require_connected, allow_isolated=False)


def from_edges0(n: int, pairs: Iterable[tuple[int, int]], *,
                require_connected: bool = False,
                allow_isolated: bool = True) -> Graph:
    """Internal constructor taking 0-based pairs; used by the generators."""
    return _build(n, pairs, require_connected, allow_isolated)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    adj = g.adjacency()
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.n


def is_bipartite(g: Graph) -> bool:
    """BFS 2-coloring over every component."""
    adj = g.adjacency()
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(tuple(sorted(g.degrees, reverse=True)))


def is_graphical(seq: Sequence[int]) -> bool:
    """Erdős–Gallai test."""
    d = sorted((int(x) for x in seq), reverse=True)
    if any(x < 0 for x in d) or sum(d) % 2:
        return False
    n = len(d)
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        rhs = k * (k - 1) + sum(min(k, x) for x in d[k:])
        if prefix > rhs:
            return False
    return True


def parse_edge_list(text: str, *, require_connected: bool = True) -> Graph:
    """Parse the ``n m`` header + ``i j`` lines format (1-based, ``#`` comments)."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if not rows:
        raise ParseError("empty edge list")
    (n, m), pairs = rows[0], rows[1:]
    if len(pairs) != m:
        raise ParseError(f"header declares {m} edges but {len(pairs)} were given")
    return from_edge_list(pairs, n, require_connected=require_connected)


def read_edge_list(path: str | Path, *, require_connected: bool = True) -> Graph:
    return parse_edge_list(Path(path).read_text(), require_connected=require_connected)


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{i + 1} {j + 1}" for i, j in g.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_edge_list(g, comment))


def parse_degree_sequence(text: str) -> DegreeSequence:
    """Parse ``"7,6,5,1,1"``; raises :class:`NotGraphical` for unrealizable input."""
    try:
        vals = tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok)
    except ValueError:
        raise ParseError(f"degree sequence must be comma-separated integers: {text!r}") from None
    if not vals:
        raise ParseError("empty degree sequence")
    if any(v < 1 for v in vals):
        raise IsolatedVertex("degree sequence contains a vertex of degree < 1")
    ds = DegreeSequence(vals)
    if not ds.is_graphical():
        raise NotGraphical(f"{ds.values} is not realizable by a simple graph")
    return ds
