import math

import pytest

from utils.data.density import DensitySpec
from utils.data.points import PointSet, generate


@pytest.fixture
def line_points():
    """Pontos {0, 1, 3} na reta."""
    return PointSet([0.0, 1.0, 3.0])


@pytest.fixture
def star_points():
    """Três pontos no quadrado com um único sorvedouro na ordem estrela."""
    return PointSet([[0.25, 0.25], [0.5, 0.5], [0.75, 0.3]])


@pytest.fixture
def triangle_points():
    return PointSet([[0.0, 0.0], [1.0, 0.0], [0.5, 1.0]])


@pytest.fixture
def two_box_density():
    """f = 3/2 na metade esquerda e f = 1/2 na direita."""
    return DensitySpec.piecewise([
        {'lo': [0.0, 0.0], 'hi': [0.5, 1.0], 'f': 1.5},
        {'lo': [0.5, 0.0], 'hi': [1.0, 1.0], 'f': 0.5},
    ])


@pytest.fixture
def two_box_integral():
    return 0.5 * (math.sqrt(1.5) + math.sqrt(0.5))


@pytest.fixture
def uniform_points():
    def _make(n, d, seed):
        return generate(n, d, DensitySpec.uniform(), seed)
    return _make


