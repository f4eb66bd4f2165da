"""Directed graph model, appendix-format parsing and degree statistics.

Node ids are 1-based everywhere in this module's public surface.  The link
text format is one record per source node::

    1.   2 3 4 5 6 7 9 91 92 94 119 122,
    33.    ,

and the node list format is ``<index> <name>,`` records in ascending order.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Literal, Sequence

import numpy as np

from .errors import InsufficientDataError, NodeRangeError, ParseError

Direction = Literal["in", "out"]


@dataclass(frozen=True)
class DirectedGraph:
    """Immutable unweighted directed graph.

    ``out_links[i - 1]`` holds the targets of node ``i`` in first-seen order
    with duplicates removed.
    """

    n: int
    labels: tuple[str, ...]
    out_links: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"node count must be non-negative, got {self.n}")
        if len(self.labels) != self.n:
            raise ValueError(f"expected {self.n} labels, got {len(self.labels)}")
        if len(self.out_links) != self.n:
            raise ValueError(f"expected {self.n} out-lists, got {len(self.out_links)}")
        for src, targets in enumerate(self.out_links, start=1):
            if len(set(targets)) != len(targets):
                raise ValueError(f"node {src} has duplicate targets")
            for t in targets:
                if not 1 <= t <= self.n:
                    raise NodeRangeError(f"node {src}: target {t} outside [1, {self.n}]")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
    ) -> DirectedGraph:
        lists: list[list[int]] = [[] for _ in range(n)]
        for src, dst in edges:
            if not 1 <= src <= n:
                raise NodeRangeError(f"source {src} outside [1, {n}]")
            if not 1 <= dst <= n:
                raise NodeRangeError(f"link {src}->{dst}: target outside [1, {n}]")
            if dst not in lists[src - 1]:
                lists[src - 1].append(dst)
        if labels is None:
            labels = default_labels(n)
        return cls(n, tuple(labels), tuple(tuple(t) for t in lists))

    def links(self) -> Iterator[tuple[int, int]]:
        for src, targets in enumerate(self.out_links, start=1):
            for dst in targets:
                yield src, dst

    @property
    def link_count(self) -> int:
        return sum(len(t) for t in self.out_links)

    def out_degrees(self) -> np.ndarray:
        """Out-degree per node; entry ``i - 1`` belongs to node ``i``."""
        return np.array([len(t) for t in self.out_links], dtype=np.int64)

    def in_degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        for _, dst in self.links():
            deg[dst - 1] += 1
        return deg

    def dangling(self) -> tuple[int, ...]:
        return tuple(i for i, t in enumerate(self.out_links, start=1) if not t)

    def adjacency_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.links())

    def has_link(self, src: int, dst: int) -> bool:
        return 1 <= src <= self.n and dst in self.out_links[src - 1]

    def with_labels(self, labels: Sequence[str]) -> DirectedGraph:
        return DirectedGraph(self.n, tuple(labels), self.out_links)

    def to_json(self) -> dict:
        return {"n": self.n, "labels": list(self.labels), "links": [list(e) for e in self.links()]}

    @classmethod
    def from_json(cls, data: dict | str) -> DirectedGraph:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            n = int(data["n"])
            links = [(int(s), int(t)) for s, t in data.get("links", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed graph JSON: {exc}") from exc
        labels = data.get("labels")
        if labels is not None and len(labels) != n:
            raise ParseError(f"graph JSON has {len(labels)} labels for n={n}")
        return cls.from_edges(n, links, labels)


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(1, n + 1))


def reverse(g: DirectedGraph) -> DirectedGraph:
    """Return ``g`` with every link ``a -> b`` turned into ``b -> a``."""
    return DirectedGraph.from_edges(g.n, ((dst, src) for src, dst in g.links()), g.labels)


# --------------------------------------------------------------------------
# appendix text formats

_LINK_RECORD = re.compile(r"(\d+)[ \t]*\.([^,]*),")
_NODE_START = re.compile(r"(?:\A|(?<=[,\n]))[ \t\r]*(\d+)[ \t]+")


def _line_of(text: str, pos: int) -> int:
    return text.count("\n", 0, pos) + 1


def parse_link_list(text: str, n: int, labels: Sequence[str] | None = None) -> DirectedGraph:
    """Parse ``<src>. <t1> <t2> ...,`` records into a graph with ``n`` nodes.

    Whitespace (including line breaks) between tokens is insignificant.
    Sources without a record get an empty out-list.  Duplicate targets in a
    record collapse to one link.
    """
    lists: list[list[int] | None] = [None] * n
    pos = 0
    length = len(text)
    while True:
        while pos < length and text[pos].isspace():
            pos += 1
        if pos >= length:
            break
        line = _line_of(text, pos)
        m = _LINK_RECORD.match(text, pos)
        if m is None:
            head = re.match(r"\d+", text[pos:])
            if head is None:
                raise ParseError(f"expected a source node number, got {text[pos:pos + 12]!r}", line)
            after = text[pos + head.end():].lstrip(" \t")
            if not after.startswith("."):
                raise ParseError(f"record for node {head.group()} is missing its dot", line)
            raise ParseError(f"record for node {head.group()} is missing its terminal comma", line)
        src = int(m.group(1))
        targets = []
        for tok in m.group(2).split():
            if not tok.isdigit():
                raise ParseError(
                    f"record for node {src}: unexpected token {tok!r} (missing terminal comma?)", line
                )
            targets.append(int(tok))
        if not 1 <= src <= n:
            raise NodeRangeError(f"line {line}: source {src} outside [1, {n}]")
        if lists[src - 1] is not None:
            raise ParseError(f"duplicate record for node {src}", line)
        for t in targets:
            if not 1 <= t <= n:
                raise NodeRangeError(f"line {line}: record for node {src} has target {t} outside [1, {n}]")
        lists[src - 1] = list(dict.fromkeys(targets))
        pos = m.end()
    out = tuple(tuple(t) if t is not None else () for t in lists)
    return DirectedGraph(n, tuple(labels) if labels is not None else default_labels(n), out)


def serialize_link_list(g: DirectedGraph) -> str:
    lines = []
    for src, targets in enumerate(g.out_links, start=1):
        body = " ".join(str(t) for t in targets)
        lines.append(f"{src}. {body},")
    return "\n".join(lines) + "\n" if lines else ""


def parse_node_list(text: str) -> list[str]:
    """Parse ``<index> <name>,`` records into labels in index order.

    A record may also end at a line break or at end of input, and the final
    record may end with a period; the published node list has both quirks.
    """
    starts = list(_NODE_START.finditer(text))
    if not starts:
        if text.strip():
            raise ParseError(f"no node records found in {text.strip()[:20]!r}", 1)
        return []
    if text[: starts[0].start()].strip():
        raise ParseError("unexpected text before first node record", 1)
    labels: list[str] = []
    for k, m in enumerate(starts):
        index = int(m.group(1))
        line = _line_of(text, m.start(1))
        if index != k + 1:
            raise ParseError(f"expected node index {k + 1}, got {index}", line)
        end = starts[k + 1].start() if k + 1 < len(starts) else len(text)
        raw = text[m.end():end].strip()
        if raw.endswith(","):
            raw = raw[:-1].rstrip()
        elif k + 1 == len(starts) and raw.endswith("."):
            raw = raw[:-1].rstrip()
        if not raw or "," in raw:
            raise ParseError(f"malformed label for node {index}: {raw!r}", line)
        labels.append(" ".join(raw.split()))
    return labels


def serialize_node_list(labels: Sequence[str]) -> str:
    return "".join(f"{i} {label},\n" for i, label in enumerate(labels, start=1))


# --------------------------------------------------------------------------
# degree statistics


@dataclass(frozen=True)
class DegreeDistribution:
    direction: Direction
    counts: dict[int, int] = field(default_factory=dict)
    fitted_nu: float | None = None

    @property
    def n(self) -> int:
        return sum(self.counts.values())

    def rows(self) -> list[tuple[int, int]]:
        return sorted(self.counts.items())


def degree_distribution(g: DirectedGraph, direction: Direction) -> DegreeDistribution:
    if direction == "out":
        deg = g.out_degrees()
    elif direction == "in":
        deg = g.in_degrees()
    else:
        raise ValueError(f"direction must be 'in' or 'out', got {direction!r}")
    counts = Counter(int(d) for d in deg)
    return DegreeDistribution(direction, dict(sorted(counts.items())))


def fit_powerlaw(dist: DegreeDistribution | dict[int, int]) -> float:
    """Exponent nu of ``count ~ d**-nu`` by least squares in log-log space.

    Uses raw counts at every degree ``d >= 1`` with a nonzero count.
    """
    counts = dist.counts if isinstance(dist, DegreeDistribution) else dist
    support = sorted((d, c) for d, c in counts.items() if d >= 1 and c > 0)
    if len(support) < 3:
        raise InsufficientDataError(
            f"power-law fit needs at least 3 degrees >= 1 with nonzero count, got {len(support)}"
        )
    x = np.log([d for d, _ in support])
    y = np.log([c for _, c in support])
    slope, _ = np.polyfit(x, y, 1)
    return float(-slope)
