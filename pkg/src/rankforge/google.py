"""Column-stochastic link matrix and the damped Google operator.

``G = alpha * S + (1 - alpha) / n`` where column ``j`` of ``S`` spreads unit
weight evenly over the targets of node ``j``, and a node without targets
gets the uniform column ``1/n``.  The ranking path never forms ``G``; it
applies sparse ``S`` plus the dangling and teleport rank-one terms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .errors import DimensionError, SizeError
from .graph import DirectedGraph

DEFAULT_ALPHA = 0.85
DENSE_LIMIT = 10_000


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"damping factor must lie in (0, 1), got {alpha}")
    return alpha


@dataclass(frozen=True, eq=False)
class StochasticMatrix:
    """Sparse ``S`` without its dangling columns.

    ``links`` is an ``n x n`` CSR matrix holding ``1/out_degree(j)`` at
    ``(i, j)`` for every link ``j -> i``; ``dangling`` is a boolean mask of
    sources whose column is implicitly uniform.
    """

    n: int
    links: sp.csr_matrix
    dangling: np.ndarray

    def column(self, j: int) -> list[tuple[int, float]]:
        """Stored ``(target, weight)`` entries of 1-based column ``j``."""
        col = self.links[:, j - 1].tocoo()
        return sorted((int(i) + 1, float(w)) for i, w in zip(col.row, col.data))

    def dangling_nodes(self) -> tuple[int, ...]:
        return tuple(int(i) + 1 for i in np.flatnonzero(self.dangling))

    def to_dense(self) -> np.ndarray:
        s = self.links.toarray()
        if self.n:
            s[:, self.dangling] = 1.0 / self.n
        return s


def build_stochastic(g: DirectedGraph) -> StochasticMatrix:
    rows: list[int] = []
    cols: list[int] = []
    vals: list[float] = []
    for j, targets in enumerate(g.out_links):
        if not targets:
            continue
        w = 1.0 / len(targets)
        for t in targets:
            rows.append(t - 1)
            cols.append(j)
            vals.append(w)
    links = sp.csr_matrix((vals, (rows, cols)), shape=(g.n, g.n), dtype=np.float64)
    dangling = g.out_degrees() == 0
    return StochasticMatrix(g.n, links, dangling)


@dataclass(frozen=True, eq=False)
class GoogleMatrix:
    s: StochasticMatrix
    alpha: float = DEFAULT_ALPHA

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", check_alpha(self.alpha))

    @classmethod
    def from_graph(cls, g: DirectedGraph, alpha: float = DEFAULT_ALPHA) -> GoogleMatrix:
        return cls(build_stochastic(g), alpha)

    @property
    def n(self) -> int:
        return self.s.n

    def apply(self, v: np.ndarray, out: np.ndarray | None = None) -> np.ndarray:
        """Return ``G @ v`` without materializing ``G``."""
        v = np.asarray(v, dtype=np.float64)
        if v.shape != (self.n,):
            raise DimensionError(f"vector of shape {v.shape} does not match n={self.n}")
        total = v.sum()
        dangling_mass = v[self.s.dangling].sum()
        y = self.s.links @ v
        y *= self.alpha
        y += (self.alpha * dangling_mass + (1.0 - self.alpha) * total) / self.n
        if out is not None:
            out[...] = y
            return out
        return y

    def materialize(self) -> np.ndarray:
        if self.n > DENSE_LIMIT:
            raise SizeError(f"n={self.n} exceeds the dense limit of {DENSE_LIMIT}")
        return self.alpha * self.s.to_dense() + (1.0 - self.alpha) / self.n


def apply(gm: GoogleMatrix, v: np.ndarray) -> np.ndarray:
    return gm.apply(v)


def materialize(gm: GoogleMatrix) -> np.ndarray:
    return gm.materialize()
