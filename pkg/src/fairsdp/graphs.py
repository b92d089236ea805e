"""Graph families and combinatorial graph quantities.

Vertices are 0-indexed. Edges are stored as unordered pairs (u, v) with
u < v; no self-loops, no multi-edges. Randomness (Erdos-Renyi) goes through
NumPy's seeded PCG64 generator so draws are bit-reproducible per seed.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, SizeLimitError, StructuralError

Edge = tuple[int, int]

# Exhaustive Cheeger enumeration walks 2^n subsets; above this, callers get
# spectral bounds instead.
EXACT_EXPANSION_MAX_N = 24


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph."""

    n: int
    edges: frozenset[Edge]

    def __init__(self, n: int, edges) -> None:
        if n < 1:
            raise InvalidArgumentError(f"vertex count must be positive, got {n}")
        normalized = set()
        for u, v in edges:
            if u == v:
                raise InvalidArgumentError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgumentError(f"edge ({u},{v}) outside [0,{n})")
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(normalized))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def neighbors(self) -> list[list[int]]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return nbrs

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        nbrs = self.neighbors()
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for v in nbrs[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    queue.append(v)
        return count == self.n


@dataclass(frozen=True)
class CheegerResult:
    """Edge expansion of a graph, either exact or as a spectral interval."""

    phi: float
    method: str  # "exact" | "spectral"
    lower: float
    upper: float
    witness: tuple[int, ...] | None = None


def grid(m: int, n: int) -> Graph:
    """m x n lattice; vertex (i, j) has index i*n + j."""
    if m < 1 or n < 1:
        raise InvalidArgumentError(f"grid dimensions must be positive, got ({m},{n})")
    if m * n < 2:
        raise InvalidArgumentError("grid needs at least 2 vertices")
    edges = []
    for i in range(m):
        for j in range(n):
            if i + 1 < m:
                edges.append((i * n + j, (i + 1) * n + j))
            if j + 1 < n:
                edges.append((i * n + j, i * n + j + 1))
    return Graph(m * n, edges)


def complete(n: int) -> Graph:
    if n < 2:
        raise InvalidArgumentError(f"complete graph needs n >= 2, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(n: int) -> Graph:
    """Vertex 0 is the hub."""
    if n < 2:
        raise InvalidArgumentError(f"star graph needs n >= 2, got {n}")
    return Graph(n, [(0, v) for v in range(1, n)])


def complement_join(n: int, t: int) -> Graph:
    """Clique on the first n-t vertices, fully joined to t independent vertices.

    This is the complement of the disjoint union of an edgeless graph on n-t
    vertices and a clique on the remaining t.  t = n-1 gives the star graph,
    t = 1 the complete graph.
    """
    if not (1 <= t <= n - 1):
        raise InvalidArgumentError(f"need 1 <= t <= n-1, got t={t}, n={n}")
    head = n - t
    edges = [(u, v) for u in range(head) for v in range(u + 1, head)]
    edges += [(u, v) for u in range(head) for v in range(head, n)]
    return Graph(n, edges)


def erdos_renyi(n: int, r: float, seed: int) -> Graph:
    """ER(n, r): each of the n(n-1)/2 pairs kept independently with prob r.

    Deterministic for fixed (n, r, seed).  Draws may be disconnected; callers
    that assume connectivity must check.
    """
    if not (0.0 <= r <= 1.0):
        raise InvalidArgumentError(f"edge probability must be in [0,1], got {r}")
    if n < 1:
        raise InvalidArgumentError(f"vertex count must be positive, got {n}")
    rng = np.random.default_rng(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = rng.random(len(pairs)) < r
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


def laplacian(g: Graph) -> np.ndarray:
    """Dense Laplacian D - A; row sums are exactly zero."""
    lap = np.zeros((g.n, g.n))
    for u, v in g.edges:
        lap[u, v] = lap[v, u] = -1.0
        lap[u, u] += 1.0
        lap[v, v] += 1.0
    return lap


def edge_expansion(g: Graph, mode: str = "exact") -> CheegerResult:
    """Cheeger constant phi_G = min over S, |S| <= n/2, of |E(S, S^c)| / |S|.

    "exact" enumerates every admissible subset (n <= 24) and returns a
    minimizing witness; "spectral" returns only the Cheeger-inequality
    interval [lambda_2 / 2, sqrt(2 * deg_max * lambda_2)].
    """
    if not g.is_connected():
        raise StructuralError("edge expansion assumes a connected graph")
    if mode == "spectral":
        lam2 = float(np.linalg.eigvalsh(laplacian(g))[1])
        lam2 = max(lam2, 0.0)
        deg_max = int(g.degrees().max())
        lower = lam2 / 2.0
        upper = math.sqrt(2.0 * deg_max * lam2)
        return CheegerResult(phi=lower, method="spectral", lower=lower, upper=upper)
    if mode != "exact":
        raise InvalidArgumentError(f"unknown mode {mode!r}")
    if g.n > EXACT_EXPANSION_MAX_N:
        raise SizeLimitError(
            f"exact enumeration supports n <= {EXACT_EXPANSION_MAX_N}, got {g.n}"
        )
    n = g.n
    adj_mask = [0] * n
    for u, v in g.edges:
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u
    deg = [m.bit_count() for m in adj_mask]
    half = n // 2

    best_phi = math.inf
    best_mask = 0
    s_mask = 0
    size = 0
    cut = 0
    # Gray-code walk: one vertex toggles per step, so the cut updates in O(1).
    for i in range(1, 1 << n):
        b = (i & -i).bit_length() - 1
        bit = 1 << b
        if s_mask & bit:
            s_mask ^= bit
            size -= 1
            inside = (adj_mask[b] & s_mask).bit_count()
            cut += 2 * inside - deg[b]
        else:
            inside = (adj_mask[b] & s_mask).bit_count()
            cut += deg[b] - 2 * inside
            s_mask ^= bit
            size += 1
        if 1 <= size <= half:
            phi = cut / size
            if phi < best_phi:
                best_phi = phi
                best_mask = s_mask
    witness = tuple(v for v in range(n) if best_mask >> v & 1)
    return CheegerResult(
        phi=best_phi, method="exact", lower=best_phi, upper=best_phi, witness=witness
    )
