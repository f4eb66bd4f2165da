"""PageRank, CheiRank, 2DRank and the PageRank/CheiRank correlator.

Rank arrays are "rank by node": ``k[i - 1]`` is the 1-based rank of node
``i``.  The inverse map ("node by rank") is carried alongside as
``by_rank[r - 1]``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import ConvergenceError, DimensionError, InvalidProbabilityError, InvalidRankError
from .google import DEFAULT_ALPHA, GoogleMatrix
from .graph import DirectedGraph, reverse

log = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 10_000


@dataclass(frozen=True)
class Ordering:
    by_rank: np.ndarray  # node id at each rank
    rank_of: np.ndarray  # rank of each node


@dataclass(frozen=True, eq=False)
class RankVector:
    kind: Literal["pagerank", "cheirank"]
    p: np.ndarray
    k: np.ndarray
    by_rank: np.ndarray
    iterations: int
    residual: float

    @property
    def n(self) -> int:
        return len(self.p)

    def top(self, count: int) -> list[int]:
        return [int(i) for i in self.by_rank[:count]]

    def curve(self) -> np.ndarray:
        """``P`` in rank order, i.e. the points of the probability-vs-rank plot."""
        return self.p[self.by_rank - 1]


@dataclass(frozen=True, eq=False)
class TwoDRank:
    k2: np.ndarray
    by_rank: np.ndarray

    def top(self, count: int) -> list[int]:
        return [int(i) for i in self.by_rank[:count]]


def order_nodes(p: np.ndarray) -> Ordering:
    """Rank nodes by decreasing ``p``; equal values go to the lower index first."""
    p = np.asarray(p, dtype=np.float64)
    if p.ndim != 1:
        raise DimensionError(f"expected a 1-D vector, got shape {p.shape}")
    if np.isnan(p).any():
        bad = int(np.flatnonzero(np.isnan(p))[0]) + 1
        raise InvalidProbabilityError(f"probability of node {bad} is NaN")
    # lexsort is stable on the last key; index is the secondary key
    idx = np.lexsort((np.arange(len(p)), -p))
    by_rank = idx + 1
    rank_of = np.empty(len(p), dtype=np.int64)
    rank_of[idx] = np.arange(1, len(p) + 1)
    return Ordering(by_rank.astype(np.int64), rank_of)


def power_iteration(
    gm: GoogleMatrix, tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER
) -> tuple[np.ndarray, int, float]:
    """Stationary vector of ``gm`` from a uniform start.

    Returns ``(p, iterations, residual)`` where residual is the L1 change of
    the last step.
    """
    if tol <= 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if max_iter < 1:
        raise ValueError(f"max_iter must be >= 1, got {max_iter}")
    n = gm.n
    v = np.full(n, 1.0 / n)
    y = np.empty(n)
    residual = np.inf
    for it in range(1, max_iter + 1):
        gm.apply(v, out=y)
        y /= y.sum()
        residual = float(np.abs(y - v).sum())
        v, y = y, v
        if residual < tol:
            log.debug("power iteration converged in %d steps (residual %.3e)", it, residual)
            return v, it, residual
    raise ConvergenceError(
        f"power iteration did not converge in {max_iter} iterations (residual {residual:.3e})",
        residual=residual,
        iterations=max_iter,
    )


def pagerank(
    gm: GoogleMatrix,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    kind: Literal["pagerank", "cheirank"] = "pagerank",
) -> RankVector:
    p, iterations, residual = power_iteration(gm, tol, max_iter)
    order = order_nodes(p)
    return RankVector(kind, p, order.rank_of, order.by_rank, iterations, residual)


def cheirank(
    g: DirectedGraph,
    alpha: float = DEFAULT_ALPHA,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> RankVector:
    """PageRank of the link-reversed graph."""
    return pagerank(GoogleMatrix.from_graph(reverse(g), alpha), tol, max_iter, kind="cheirank")


def _check_permutation(k, name: str) -> list[int]:
    arr = np.asarray(k)
    if arr.ndim != 1 or not np.issubdtype(arr.dtype, np.integer):
        raise InvalidRankError(f"{name} must be a 1-D integer array")
    ranks = arr.tolist()
    n = len(ranks)
    seen = [False] * (n + 1)
    for r in ranks:
        if not 1 <= r <= n or seen[r]:
            raise InvalidRankError(f"{name} is not a permutation of 1..{n}")
        seen[r] = True
    return ranks


def _from_order(order: list[int]) -> TwoDRank:
    by_rank = np.array(order, dtype=np.int64) + 1
    k2 = np.empty(len(order), dtype=np.int64)
    k2[by_rank - 1] = np.arange(1, len(order) + 1)
    return TwoDRank(k2, by_rank)


def two_d_rank(k: np.ndarray, kstar: np.ndarray) -> TwoDRank:
    """Crawl squares ``j x j`` of the ``(K, K*)`` plane, ``K`` side first."""
    k = _check_permutation(k, "K")
    kstar = _check_permutation(kstar, "K*")
    n = len(k)
    if len(kstar) != n:
        raise InvalidRankError(f"K has {n} entries but K* has {len(kstar)}")
    node_at_k = [0] * n
    node_at_kstar = [0] * n
    for i in range(n):
        node_at_k[k[i] - 1] = i
        node_at_kstar[kstar[i] - 1] = i

    order: list[int] = []
    for j in range(1, n + 1):
        a = node_at_k[j - 1]
        if kstar[a] <= j:
            order.append(a)
        b = node_at_kstar[j - 1]
        if k[b] < j:
            order.append(b)
    return _from_order(order)


def two_d_rank_sorted(k: np.ndarray, kstar: np.ndarray) -> TwoDRank:
    """Closed form of :func:`two_d_rank`: sort by ``(max(K, K*), side)``."""
    k = _check_permutation(k, "K")
    kstar = _check_permutation(kstar, "K*")
    if len(kstar) != len(k):
        raise InvalidRankError(f"K has {len(k)} entries but K* has {len(kstar)}")
    # side 0: the node sits on the K edge of its square (K >= K*)
    order = sorted(range(len(k)), key=lambda i: (max(k[i], kstar[i]), kstar[i] > k[i]))
    return _from_order(order)


def correlator(p: RankVector | np.ndarray, pstar: RankVector | np.ndarray) -> float:
    """``kappa = N * sum_i P(i) P*(i) - 1``."""
    a = p.p if isinstance(p, RankVector) else np.asarray(p, dtype=np.float64)
    b = pstar.p if isinstance(pstar, RankVector) else np.asarray(pstar, dtype=np.float64)
    if a.shape != b.shape:
        raise DimensionError(f"length mismatch: {a.shape} vs {b.shape}")
    return float(len(a) * np.dot(a, b) - 1.0)


def powerlaw_slope_annotation(nu: float) -> float:
    """Slope ``-1/(nu - 1)`` of ``log P`` vs ``log K`` expected for exponent ``nu``.

    Reported next to rank curves only; never asserted.
    """
    return -1.0 / (nu - 1.0)


@dataclass(frozen=True, eq=False)
class Analysis:
    """PageRank, CheiRank, 2DRank and kappa for one graph."""

    pagerank: RankVector
    cheirank: RankVector
    twod: TwoDRank
    kappa: float
    alpha: float


def analyze(
    g: DirectedGraph,
    alpha: float = DEFAULT_ALPHA,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> Analysis:
    pr = pagerank(GoogleMatrix.from_graph(g, alpha), tol, max_iter)
    ch = cheirank(g, alpha, tol, max_iter)
    return Analysis(pr, ch, two_d_rank(pr.k, ch.k), correlator(pr, ch), alpha)
