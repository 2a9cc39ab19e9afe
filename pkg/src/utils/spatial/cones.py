"""
Ordens parciais por cones em R^2 e busca do vizinho mais próximo dirigido.
"""

import math
from dataclasses import dataclass

import numpy as np

from utils.core.errors import InvalidParameterError
from utils.config.logging import get_logger

logger = get_logger("SPATIAL")

TWO_PI = 2.0 * math.pi
# Folga angular que mantém os raios da fronteira dentro do cone fechado
ANGLE_TOL = 1e-12


@dataclass(frozen=True)
class ConeOrder:
    """
    Ordem u <= v sse u pertence ao cone fechado C_{theta,phi}(v).

    theta é o ângulo do raio de fronteira medido a partir da vertical para cima,
    no sentido anti-horário; phi é a abertura do cone.
    """

    theta: float
    phi: float

    def __post_init__(self):
        theta = float(self.theta)
        phi = float(self.phi)
        if not (math.isfinite(theta) and math.isfinite(phi)):
            raise InvalidParameterError("Ângulos do cone devem ser finitos")
        if not (0.0 < phi <= math.pi):
            raise InvalidParameterError(f"Abertura do cone fora de (0, pi]: phi={phi}")
        object.__setattr__(self, 'theta', theta % TWO_PI)
        object.__setattr__(self, 'phi', phi)

    @classmethod
    def star(cls):
        """A ordem coordenada a coordenada (theta = phi = pi/2)."""
        return cls(math.pi / 2.0, math.pi / 2.0)

    @property
    def is_star(self):
        return (math.isclose(self.theta, math.pi / 2.0, rel_tol=0.0, abs_tol=1e-12)
                and math.isclose(self.phi, math.pi / 2.0, rel_tol=0.0, abs_tol=1e-12))

    @property
    def label(self):
        if self.is_star:
            return "star"
        return f"theta={self.theta:.6g};phi={self.phi:.6g}"

    def precedes_mask(self, delta):
        """
        Máscara booleana de u <= v para deltas u - v (array [..., 2]).

        Na ordem estrela a comparação é feita direto nas coordenadas.
        """
        delta = np.asarray(delta, dtype=float)
        dx = delta[..., 0]
        dy = delta[..., 1]
        if self.is_star:
            return (dx <= 0.0) & (dy <= 0.0)
        # Ângulo anti-horário a partir da vertical para cima
        psi = np.mod(np.arctan2(-dx, dy), TWO_PI)
        rel = np.mod(psi - self.theta, TWO_PI)
        return (rel <= self.phi + ANGLE_TOL) | (rel >= TWO_PI - ANGLE_TOL)

    def precedes(self, u, v):
        """True se u <= v nesta ordem."""
        u = np.asarray(u, dtype=float)
        v = np.asarray(v, dtype=float)
        return bool(self.precedes_mask(u - v))


def _require_planar(ps):
    if ps.d != 2:
        raise InvalidParameterError(f"Ordens por cone só existem em d = 2 (recebido d = {ps.d})")


def cone_nn_all(index, order):
    """
    Vizinho dirigido de todos os pontos: arrays (alvos, distâncias).

    Sorvedouros recebem alvo -1 e distância NaN.
    """
    from utils.spatial.kdindex import directed_search

    _require_planar(index.points)

    def predicate(queries, candidates, delta):
        return order.precedes_mask(delta)

    queries = np.arange(index.n)
    return directed_search(index, queries, predicate)


def cone_nn(ps, query_index, order, index=None):
    """
    Vizinho mais próximo u != v com u <= v, ou None quando v é sorvedouro.

    Empates de distância são resolvidos pela menor coordenada lexicográfica e depois pelo índice.
    """
    from utils.spatial.kdindex import KdIndex, directed_search

    _require_planar(ps)
    if not 0 <= query_index < ps.n:
        raise InvalidParameterError(f"Índice de consulta fora do intervalo: {query_index}")
    index = index or KdIndex(ps)

    def predicate(queries, candidates, delta):
        return order.precedes_mask(delta)

    targets, dists = directed_search(index, np.array([query_index]), predicate)
    if targets[0] < 0:
        return None
    return int(targets[0]), float(dists[0])
