"""Grafos de vizinhança, contagens e funcionais de peso."""

from .types import WeightedDigraph, WeightedGraph
from .builders import (
    build_jth_nng, build_knng, build_knng_undirected, build_ong, build_mdsf, build_gabriel, build_graph
)
from .counts import count_minimal_elements, count_reciprocal_pairs
from .functionals import WeightExponent, total_weight, rescaled_weight
