"""Exact boxicity computations through interval-order subgraph covers.

The central fact used throughout: boxi(G) <= k iff the edges of the
complement of G are the union of k interval-order subgraphs.
"""

from .catalog import CatalogDescriptor, enumerate_catalog, expected_size
from .certify import Cover, CoverMember, verify_cover
from .coline import (
    decide_boxicity_coline,
    family_b,
    igc_minimum_completion,
    kneser_boxicity,
    kneser_cover,
    minimal_interval_completions,
)
from .errors import BudgetExceeded, InputError, ParseError
from .graph import Graph, complement, complete_graph, kneser_2, line_graph
from .interval_order import ChainCertificate, build_gsigma, enumerate_maximal_io, verify_chain
from .linebox import BasePermutation, best_permutation, line_upper_cover, refute_permutation_cover
from .oracle import brute_boxicity

__version__ = "0.1.0"

__all__ = [
    "BasePermutation", "BudgetExceeded", "CatalogDescriptor", "ChainCertificate", "Cover",
    "CoverMember", "Graph", "InputError", "ParseError", "best_permutation", "brute_boxicity",
    "build_gsigma", "complement", "complete_graph", "decide_boxicity_coline", "enumerate_catalog",
    "enumerate_maximal_io", "expected_size", "family_b", "igc_minimum_completion", "kneser_2",
    "kneser_boxicity", "kneser_cover", "line_graph", "line_upper_cover",
    "minimal_interval_completions", "refute_permutation_cover", "verify_chain", "verify_cover",
]
