"""Generative model: fair ground-truth labels, parity attributes, noisy observations.

The ground truth y_bar is Rademacher; each attribute is a standard-normal
vector projected onto the orthogonal complement of y_bar (so <a, y_bar> = 0)
and scaled to unit norm.  A single observation flips each edge product with
probability p and each node label with probability q, independently.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidArgumentError, StructuralError
from .graphs import Graph

_FAIRNESS_ATOL = 1e-9


@dataclass(frozen=True)
class Instance:
    """Planted fair labeling on a graph."""

    graph: Graph
    y_bar: np.ndarray
    attributes: list[np.ndarray] = field(default_factory=list)

    def __post_init__(self) -> None:
        y = np.asarray(self.y_bar)
        if y.shape != (self.graph.n,):
            raise InvalidArgumentError("label vector length must match vertex count")
        if not np.all(np.abs(y) == 1):
            raise InvalidArgumentError("labels must be exactly +/-1")
        for a in self.attributes:
            a = np.asarray(a, dtype=float)
            if a.shape != (self.graph.n,):
                raise InvalidArgumentError("attribute length must match vertex count")
            if abs(float(a @ y)) > _FAIRNESS_ATOL * float(np.linalg.norm(a)):
                raise InvalidArgumentError(
                    "attribute violates statistical parity <a, y_bar> = 0"
                )


@dataclass(frozen=True)
class Observation:
    """One noisy edge/node observation of an instance."""

    graph: Graph
    x: np.ndarray
    c: np.ndarray
    p: float
    q: float

    def __post_init__(self) -> None:
        x = np.asarray(self.x)
        n = self.graph.n
        if x.shape != (n, n) or np.asarray(self.c).shape != (n,):
            raise InvalidArgumentError("observation shapes must match vertex count")
        if np.any(x != x.T) or np.any(np.diag(x) != 0):
            raise InvalidArgumentError("edge observation must be symmetric, zero diagonal")
        support = {(u, v) for u, v in zip(*np.nonzero(np.triu(x)))}
        if support != set(self.graph.edges):
            raise InvalidArgumentError("edge observation support must equal the edge set")


def sample_labels(n: int, seed: int) -> np.ndarray:
    """Rademacher label vector, seeded."""
    if n < 1:
        raise InvalidArgumentError(f"need n >= 1, got {n}")
    rng = np.random.default_rng(seed)
    return rng.choice(np.array([-1, 1]), size=n).astype(np.int64)


def sample_fair_attributes(y_bar: np.ndarray, k: int, seed: int) -> list[np.ndarray]:
    """k unit-norm Gaussian vectors from the nullspace of y_bar^T."""
    y = np.asarray(y_bar, dtype=float)
    n = y.shape[0]
    if k < 0:
        raise InvalidArgumentError("k must be nonnegative")
    if k >= n:
        raise InvalidArgumentError(f"at most n-1 = {n - 1} independent attributes exist")
    if n < 2:
        raise InvalidArgumentError("need n >= 2 to sample attributes")
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(k):
        z = rng.standard_normal(n)
        a = z - (z @ y) / n * y
        a /= np.linalg.norm(a)
        a -= (a @ y) / n * y  # second pass drives <a, y> below 1e-12
        out.append(a)
    return out


def alpha(p: float, q: float) -> float:
    """Maximum-likelihood weight of the node term: log((1-q)/q) / log((1-p)/p)."""
    if not (0.0 < p < 0.5):
        raise InvalidArgumentError(f"p must lie in (0, 0.5), got {p}")
    if not (0.0 < q < 0.5):
        raise InvalidArgumentError(f"q must lie in (0, 0.5), got {q}")
    return float(np.log((1.0 - q) / q) / np.log((1.0 - p) / p))


def observe(inst: Instance, p: float, q: float, seed: int) -> Observation:
    """Draw one noisy observation; p = q = 0 gives the noiseless case."""
    if not (0.0 <= p < 0.5) or not (0.0 <= q < 0.5):
        raise InvalidArgumentError("noise levels must lie in [0, 0.5)")
    if not inst.graph.is_connected():
        raise StructuralError("observation model assumes a connected graph")
    g = inst.graph
    y = np.asarray(inst.y_bar, dtype=np.int64)
    rng = np.random.default_rng(seed)
    edges = g.sorted_edges()
    edge_flips = rng.random(len(edges)) < p
    node_flips = rng.random(g.n) < q
    x = np.zeros((g.n, g.n), dtype=np.int64)
    for (u, v), flip in zip(edges, edge_flips):
        s = int(y[u] * y[v]) * (-1 if flip else 1)
        x[u, v] = x[v, u] = s
    c = np.where(node_flips, -y, y).astype(np.int64)
    return Observation(graph=g, x=x, c=c, p=float(p), q=float(q))
