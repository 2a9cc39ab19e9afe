"""Pontos, densidades e formatos de arquivo."""

from .density import Box, DensitySpec, density_integral
from .points import PointSet, generate, append_origin, make_rng, validate_seed
from .io import read_points, write_points, read_edges, write_edges, read_density, write_json
