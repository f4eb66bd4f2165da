"""What-if link edits and the rank displacements they cause."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import kendalltau

from .errors import IncompatibleScenarioError, ParseError, ScenarioError
from .google import DEFAULT_ALPHA
from .graph import DirectedGraph
from .ranking import DEFAULT_MAX_ITER, DEFAULT_TOL, Analysis, analyze

Link = tuple[int, int]


@dataclass(frozen=True)
class Scenario:
    base: DirectedGraph
    added: tuple[Link, ...] = ()
    removed: tuple[Link, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "added", tuple((int(a), int(b)) for a, b in self.added))
        object.__setattr__(self, "removed", tuple((int(a), int(b)) for a, b in self.removed))
        self.validate()

    @classmethod
    def from_json(cls, base: DirectedGraph, data: dict | str) -> Scenario:
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or set(data) - {"add", "remove"}:
            raise ParseError("scenario must be an object with optional 'add' and 'remove' keys")
        try:
            added = [(int(a), int(b)) for a, b in data.get("add", [])]
            removed = [(int(a), int(b)) for a, b in data.get("remove", [])]
        except (TypeError, ValueError) as exc:
            raise ParseError(f"scenario links must be [src, dst] integer pairs: {exc}") from exc
        return cls(base, tuple(added), tuple(removed))

    def validate(self) -> None:
        n = self.base.n
        seen: set[Link] = set()
        for verb, links in (("added", self.added), ("removed", self.removed)):
            for link in links:
                src, dst = link
                if not (1 <= src <= n and 1 <= dst <= n):
                    raise ScenarioError(f"{verb} link {src}->{dst} references a node outside [1, {n}]", link)
                if link in seen:
                    raise ScenarioError(f"link {src}->{dst} is listed more than once", link)
                seen.add(link)
                exists = self.base.has_link(src, dst)
                if verb == "added" and exists:
                    raise ScenarioError(f"added link {src}->{dst} already exists in the base graph", link)
                if verb == "removed" and not exists:
                    raise ScenarioError(f"removed link {src}->{dst} does not exist in the base graph", link)


def apply_scenario(s: Scenario) -> DirectedGraph:
    drop = set(s.removed)
    out = [[t for t in targets if (src, t) not in drop] for src, targets in enumerate(s.base.out_links, start=1)]
    for src, dst in s.added:
        out[src - 1].append(dst)
    return DirectedGraph(s.base.n, s.base.labels, tuple(tuple(t) for t in out))


@dataclass(frozen=True, eq=False)
class RankDiff:
    """Displacements are ``after - before``; positive means the node moved down."""

    delta_k: np.ndarray
    delta_kstar: np.ndarray
    delta_k2: np.ndarray
    kendall_tau_pagerank: float
    kappa_before: float
    kappa_after: float
    newly_dangling: tuple[int, ...] = ()
    no_longer_dangling: tuple[int, ...] = ()
    before: Analysis | None = field(default=None, repr=False)
    after: Analysis | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        nodes = [
            {"node": i, "delta_k": int(a), "delta_kstar": int(b), "delta_k2": int(c)}
            for i, (a, b, c) in enumerate(zip(self.delta_k, self.delta_kstar, self.delta_k2), start=1)
        ]
        return {
            "nodes": nodes,
            "kendall_tau_pagerank": self.kendall_tau_pagerank,
            "kappa_before": self.kappa_before,
            "kappa_after": self.kappa_after,
            "metadata": {
                "newly_dangling": list(self.newly_dangling),
                "no_longer_dangling": list(self.no_longer_dangling),
            },
        }


def kendall_tau(a: np.ndarray, b: np.ndarray) -> float:
    """Kendall tau between two strict rankings of the same nodes."""
    if len(a) != len(b):
        raise ValueError("rankings differ in length")
    if len(a) < 2:
        return 1.0
    # no ties in a permutation, so scipy's tau-b is tau-a here
    return float(kendalltau(a, b).statistic)


def diff_rankings(
    before: DirectedGraph,
    after: DirectedGraph,
    alpha: float = DEFAULT_ALPHA,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> RankDiff:
    if before.n != after.n or before.labels != after.labels:
        raise IncompatibleScenarioError(
            f"graphs differ in node set (n={before.n} vs n={after.n} or labels differ)"
        )
    a = analyze(before, alpha, tol, max_iter)
    b = analyze(after, alpha, tol, max_iter)
    was = set(before.dangling())
    now = set(after.dangling())
    return RankDiff(
        delta_k=b.pagerank.k - a.pagerank.k,
        delta_kstar=b.cheirank.k - a.cheirank.k,
        delta_k2=b.twod.k2 - a.twod.k2,
        kendall_tau_pagerank=kendall_tau(a.pagerank.k, b.pagerank.k),
        kappa_before=a.kappa,
        kappa_after=b.kappa,
        newly_dangling=tuple(sorted(now - was)),
        no_longer_dangling=tuple(sorted(was - now)),
        before=a,
        after=b,
    )
