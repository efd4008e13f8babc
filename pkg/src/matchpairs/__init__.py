"""Exact pair-of-disjoint-matchings parameters and the β/α = 5/4 characterization."""

from .graph import Graph, parse_edge_list, parse_graph6, to_graph6
from .matching import Matching, beta, maximum_matching
from .pairs import DisjointPair, PairSolution, enumerate_m2, select_m2_overlap, solve, solve_brute
from .structure import SForest, SpannerEmbedding, classify_edges, find_spanning_s_forests, spanner_template
from .characterization import ratio_extremal, structural_extremal, verify_theorem

__version__ = "0.1.0"
