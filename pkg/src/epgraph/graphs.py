"""Simple undirected graphs over dense vertex indices.

Adjacency is stored as one Python integer bitmask per vertex, which makes
the induced-subgraph and common-neighbour queries that dominate the exact
searches cheap.
"""

from __future__ import annotations

import math
from typing import IO, Iterable, Iterator, Sequence

import numpy as np

from .errors import InvalidParameterError

INFINITE = math.inf


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SimpleGraph:
    """Symmetric irreflexive adjacency; treat instances as immutable."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int] | None = None):
        if n < 0:
            raise InvalidParameterError("vertex count must be non-negative")
        self.n = n
        if adj is None:
            self.adj = [0] * n
        else:
            if len(adj) != n:
                raise InvalidParameterError("adjacency length must equal n")
            self.adj = list(adj)
            self._validate()

    def _validate(self) -> None:
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise InvalidParameterError(f"vertex {v} has neighbours out of range")
            if mask >> v & 1:
                raise InvalidParameterError(f"vertex {v} has a self-loop")
            for u in iter_bits(mask):
                if not self.adj[u] >> v & 1:
                    raise InvalidParameterError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        g = cls(n)
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"bad edge ({u}, {v})")
            g.adj[u] |= 1 << v
            g.adj[v] |= 1 << u
        return g

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range 0..{self.n - 1}")
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self.adj[v])

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    def complement(self) -> "SimpleGraph":
        full = (1 << self.n) - 1
        return SimpleGraph(self.n, [full & ~m & ~(1 << v) for v, m in enumerate(self.adj)])

    def induced(self, vertices: Sequence[int]) -> "SimpleGraph":
        """Subgraph induced by ``vertices``; new index i maps to vertices[i]."""
        pos = {v: i for i, v in enumerate(vertices)}
        if len(pos) != len(vertices):
            raise InvalidParameterError("induced vertex list has duplicates")
        sub = SimpleGraph(len(vertices))
        for i, v in enumerate(vertices):
            mask = 0
            for u in iter_bits(self.adj[v]):
                j = pos.get(u)
                if j is not None:
                    mask |= 1 << j
            sub.adj[i] = mask
        return sub

    def relabeled(self, perm: Sequence[int]) -> "SimpleGraph":
        """Image under vertex permutation: new vertex perm[v] is old v."""
        out = SimpleGraph(self.n)
        for v in range(self.n):
            mask = 0
            for u in iter_bits(self.adj[v]):
                mask |= 1 << perm[u]
            out.adj[perm[v]] = mask
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, SimpleGraph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, tuple(self.adj)))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.edge_count()})"


def min_degree(g: SimpleGraph) -> int:
    if g.n < 1:
        raise InvalidParameterError("minimum degree of an empty graph is undefined")
    return min(m.bit_count() for m in g.adj)


def eccentricity(g: SimpleGraph, v: int) -> float:
    """Largest BFS distance from v; INFINITE if some vertex is unreachable."""
    full = (1 << g.n) - 1
    visited = frontier = 1 << v
    dist = 0
    while True:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= g.adj[u]
        nxt &= ~visited
        if not nxt:
            break
        dist += 1
        visited |= nxt
        frontier = nxt
    return dist if visited == full else INFINITE


def is_connected(g: SimpleGraph) -> bool:
    return g.n <= 1 or not math.isinf(eccentricity(g, 0))


def diameter(g: SimpleGraph) -> float:
    """Max shortest-path length over pairs; INFINITE when disconnected."""
    if g.n < 1:
        raise InvalidParameterError("diameter of an empty graph is undefined")
    worst = 0
    for v in range(g.n):
        ecc = eccentricity(g, v)
        if math.isinf(ecc):
            return INFINITE
        worst = max(worst, ecc)
    return worst


def edge_connectivity(g: SimpleGraph) -> int:
    """Global minimum edge cut via deterministic Stoer-Wagner contraction."""
    if g.n < 2:
        raise InvalidParameterError("edge connectivity needs at least 2 vertices")
    if not is_connected(g):
        return 0
    n = g.n
    w = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        for u in iter_bits(g.adj[v]):
            w[v, u] = 1
    alive = np.ones(n, dtype=bool)
    best = np.iinfo(np.int64).max
    for _ in range(n - 1):
        nodes = np.flatnonzero(alive)
        start = nodes[0]
        in_a = np.zeros(n, dtype=bool)
        in_a[start] = True
        wsum = w[:, start].astype(np.int64)
        prev, last = start, start
        for _ in range(len(nodes) - 1):
            cand = np.where(alive & ~in_a, wsum, -1)
            u = int(np.argmax(cand))
            cut_of_phase = int(wsum[u])
            in_a[u] = True
            wsum = wsum + w[:, u]
            prev, last = last, u
        best = min(best, cut_of_phase)
        w[prev, :] += w[last, :]
        w[:, prev] += w[:, last]
        w[prev, prev] = 0
        alive[last] = False
    return int(best)


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def save_edge_list(g: SimpleGraph, stream: IO[str]) -> None:
    """Line `n m`, then one `u v` line per edge with u < v."""
    edges = list(g.edges())
    stream.write(f"{g.n} {len(edges)}\n")
    for u, v in edges:
        stream.write(f"{u} {v}\n")


def load_edge_list(stream: IO[str]) -> SimpleGraph:
    lines = [ln for ln in (raw.strip() for raw in stream) if ln]
    if not lines:
        raise InvalidParameterError("empty edge-list file")
    try:
        n, m = (int(v) for v in lines[0].split())
    except ValueError as exc:
        raise InvalidParameterError("edge-list header must be 'n m'") from exc
    if len(lines) != m + 1:
        raise InvalidParameterError(f"expected {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        u, v = (int(x) for x in ln.split())
        if not u < v:
            raise InvalidParameterError(f"edge lines need u < v, got {u} {v}")
        edges.append((u, v))
    return SimpleGraph.from_edges(n, edges)


def to_dot(g: SimpleGraph, labels: Sequence[str] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        label = labels[v] if labels else str(v)
        lines.append(f'  {v} [label="{label}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
