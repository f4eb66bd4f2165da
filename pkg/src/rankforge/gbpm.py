"""The 175-node business process network and its published top-30 lists.

The published tables name nodes by label, and several labels occur at more
than one index (or are misspelled).  Those entries are pinned by the
explicit :data:`HAND_RESOLUTIONS` table; everything else resolves by exact
label lookup.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from . import _corpus
from .errors import LabelNotFoundError
from .graph import DirectedGraph, parse_link_list, parse_node_list, serialize_link_list

N_NODES = 175
N_LINKS = 240
N_DANGLING = 29
# sha256 of serialize_link_list(graph) for the appendix link list
LINKS_SHA256 = "1a879e4ad43ff62fc19c0a924f9a6320a8f13d1003dbfddece42a095721cb1b2"

DATA_DIR_ENV = "RANKFORGE_DATA_DIR"
PACKAGE_DATA_DIR = Path(__file__).with_name("data")

LIST_KINDS = ("pagerank", "cheirank", "twodrank")

# (list kind, 1-based position) -> (node, reason)
HAND_RESOLUTIONS: dict[tuple[str, int], tuple[int, str]] = {
    ("pagerank", 12): (85, "'Active Delivery Projects' is 85 or 90; 90 has no in-links so its PageRank sits at the floor"),
    ("cheirank", 26): (74, "'First Time Delivery Lead Success' is 51 or 74; same label as 2DRank #12, which needs in-links and 51 has none"),
    ("cheirank", 30): (105, "'Solution Projects Staff Needed' is 100 or 105; 105 has out-degree 4 against 2 for 100"),
    ("twodrank", 3): (119, "'HireRate' is a spacing variant of 'Hire Rate' (119)"),
    ("twodrank", 5): (48, "'RequiredDelivery Proposal Effort' is a spacing variant of 'Required Delivery Proposal Effort' (48)"),
    ("twodrank", 12): (74, "'First Time Delivery Lead Success' is 51 or 74; 51 has no in-links so its PageRank sits at the floor"),
    ("twodrank", 13): (56, "'Repeat Delivery Lead Success' is 52 or 56; 52 has no in-links so its PageRank sits at the floor"),
}

PROSE_TOP5 = {
    "pagerank": (33, 32, 5, 2, 87),
    "cheirank": (1, 5, 2, 6, 7),
    "twodrank": (5, 2, 119, 1, 48),
}


@dataclass(frozen=True)
class LabelResolution:
    label: str
    candidates: tuple[int, ...]

    @property
    def ambiguous(self) -> bool:
        return len(self.candidates) > 1

    @property
    def node(self) -> int:
        if self.ambiguous:
            raise LookupError(f"label {self.label!r} is ambiguous: nodes {list(self.candidates)}")
        return self.candidates[0]


@dataclass(frozen=True)
class GbpmCorpus:
    graph: DirectedGraph
    expected_pagerank_top30: tuple[int, ...]
    expected_cheirank_top30: tuple[int, ...]
    expected_2drank_top30: tuple[int, ...]

    def expected(self, kind: str) -> tuple[int, ...]:
        return {
            "pagerank": self.expected_pagerank_top30,
            "cheirank": self.expected_cheirank_top30,
            "twodrank": self.expected_2drank_top30,
        }[kind]


def links_checksum(g: DirectedGraph) -> str:
    return hashlib.sha256(serialize_link_list(g).encode("ascii")).hexdigest()


def resolve_label(corpus: GbpmCorpus | DirectedGraph, label: str) -> LabelResolution:
    g = corpus.graph if isinstance(corpus, GbpmCorpus) else corpus
    hits = tuple(i for i, name in enumerate(g.labels, start=1) if name == label)
    if not label or not hits:
        raise LabelNotFoundError(f"no node is labelled {label!r}")
    return LabelResolution(label, hits)


def _published_labels(kind: str) -> tuple[str, ...]:
    return {
        "pagerank": _corpus.PAGERANK_TOP30_LABELS,
        "cheirank": _corpus.CHEIRANK_TOP30_LABELS,
        "twodrank": _corpus.TWODRANK_TOP30_LABELS,
    }[kind]


def resolve_published_list(g: DirectedGraph, kind: str) -> list[dict]:
    """Resolve one published top-30 table to node ids, with provenance per row."""
    rows = []
    for pos, label in enumerate(_published_labels(kind), start=1):
        hand = HAND_RESOLUTIONS.get((kind, pos))
        if hand is not None:
            node, reason = hand
            rows.append({"position": pos, "label": label, "node": node, "resolution": reason})
            continue
        res = resolve_label(g, label)
        if res.ambiguous:
            raise LookupError(f"{kind} #{pos}: {label!r} is ambiguous {res.candidates} and not hand-resolved")
        rows.append({"position": pos, "label": label, "node": res.node, "resolution": "exact"})
    return rows


def expected_document(g: DirectedGraph) -> dict:
    return {kind: resolve_published_list(g, kind) for kind in LIST_KINDS}


def _build_graph(nodes_text: str, links_text: str) -> DirectedGraph:
    labels = parse_node_list(nodes_text)
    return parse_link_list(links_text, len(labels), labels)


@lru_cache(maxsize=1)
def load_gbpm() -> GbpmCorpus:
    """The embedded corpus.  Integrity is checked against pinned constants."""
    g = _build_graph(_corpus.NODES_TEXT, _corpus.LINKS_TEXT)
    if g.n != N_NODES or g.link_count != N_LINKS or links_checksum(g) != LINKS_SHA256:
        raise RuntimeError("embedded corpus failed its integrity check")
    lists = {kind: tuple(r["node"] for r in resolve_published_list(g, kind)) for kind in LIST_KINDS}
    return GbpmCorpus(g, lists["pagerank"], lists["cheirank"], lists["twodrank"])


def data_dir() -> Path:
    override = os.environ.get(DATA_DIR_ENV)
    return Path(override) if override else PACKAGE_DATA_DIR


def load_gbpm_files(directory: str | os.PathLike | None = None) -> GbpmCorpus:
    """Load the corpus from the loose ``gbpm.*`` files instead of the constants."""
    d = Path(directory) if directory is not None else data_dir()
    g = _build_graph(
        (d / "gbpm.nodes.txt").read_text(encoding="utf-8"),
        (d / "gbpm.links.txt").read_text(encoding="utf-8"),
    )
    doc = json.loads((d / "gbpm.expected.json").read_text(encoding="utf-8"))
    lists = {kind: tuple(int(r["node"]) for r in doc[kind]) for kind in LIST_KINDS}
    return GbpmCorpus(g, lists["pagerank"], lists["cheirank"], lists["twodrank"])
