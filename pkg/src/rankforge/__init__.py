"""Google matrix ranking of directed graphs: PageRank, CheiRank, 2DRank,
the PageRank/CheiRank correlator, full spectra and what-if link edits."""

from .errors import RankforgeError
from .gbpm import GbpmCorpus, load_gbpm, resolve_label
from .google import GoogleMatrix, StochasticMatrix, build_stochastic
from .graph import (
    DegreeDistribution,
    DirectedGraph,
    degree_distribution,
    fit_powerlaw,
    parse_link_list,
    parse_node_list,
    reverse,
)
from .perturbation import RankDiff, Scenario, apply_scenario, diff_rankings
from .ranking import RankVector, TwoDRank, analyze, cheirank, correlator, order_nodes, pagerank, two_d_rank
from .spectrum import Spectrum, full_spectrum, spectral_stats, trace_check

__version__ = "0.1.0"

__all__ = [
    "DegreeDistribution",
    "DirectedGraph",
    "GbpmCorpus",
    "GoogleMatrix",
    "RankDiff",
    "RankVector",
    "RankforgeError",
    "Scenario",
    "Spectrum",
    "StochasticMatrix",
    "TwoDRank",
    "analyze",
    "apply_scenario",
    "build_stochastic",
    "cheirank",
    "correlator",
    "degree_distribution",
    "diff_rankings",
    "fit_powerlaw",
    "full_spectrum",
    "load_gbpm",
    "order_nodes",
    "pagerank",
    "parse_link_list",
    "parse_node_list",
    "resolve_label",
    "reverse",
    "spectral_stats",
    "trace_check",
    "two_d_rank",
]
