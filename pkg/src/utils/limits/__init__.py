"""
Constantes limite em forma fechada e funções especiais.
"""

from utils.limits.special import (
    log_gamma,
    unit_ball_volume,
    union_two_balls_volume,
    union_two_balls_volume_quadrature,
)
from utils.limits.families import FamilyKind, GraphFamily, LimitQuery
from utils.limits.constants import (
    limit_constant,
    reciprocal_pair_fraction,
    knng_constant_by_sum,
    jth_constant_by_poisson_sum,
    reciprocal_edge_expectation,
    undirected_count_fraction,
    expected_minimal_elements,
    origin_correction_bound,
    gabriel_rank_edge_probability,
)

__all__ = [
    'log_gamma',
    'unit_ball_volume',
    'union_two_balls_volume',
    'union_two_balls_volume_quadrature',
    'FamilyKind',
    'GraphFamily',
    'LimitQuery',
    'limit_constant',
    'reciprocal_pair_fraction',
    'knng_constant_by_sum',
    'jth_constant_by_poisson_sum',
    'reciprocal_edge_expectation',
    'undirected_count_fraction',
    'expected_minimal_elements',
    'origin_correction_bound',
    'gabriel_rank_edge_probability',
]
