"""Estratégias hypothesis compartilhadas pelos testes."""

import numpy as np
from hypothesis import strategies as st

from utils.data.density import DensitySpec
from utils.data.points import PointSet, generate


@st.composite
def point_sets(draw, min_points=2, max_points=60, dims=(1, 2, 3)):
    """PointSet uniforme gerado a partir de uma semente sorteada."""
    n = draw(st.integers(min_value=min_points, max_value=max_points))
    d = draw(st.sampled_from(dims))
    seed = draw(st.integers(min_value=0, max_value=2 ** 32 - 1))
    return generate(n, d, DensitySpec.uniform(), seed)


@st.composite
def lattice_point_sets(draw, min_points=2, max_points=40, dims=(2,)):
    """Pontos distintos numa grade 8^d: muitos empates de distância."""
    d = draw(st.sampled_from(dims))
    n = draw(st.integers(min_value=min_points, max_value=max_points))
    cells = draw(st.lists(st.tuples(*[st.integers(0, 7)] * d), min_size=n, max_size=n, unique=True))
    return PointSet(np.array(cells, dtype=float) / 8.0)
