"""
Funcionais de comprimento ponderado por potência.
"""

import math
from dataclasses import dataclass

import numpy as np

from utils.core.errors import InvalidParameterError


@dataclass(frozen=True)
class WeightExponent:
    """Expoente alpha >= 0 do peso |x - y|^alpha."""

    alpha: float

    def __post_init__(self):
        alpha = float(self.alpha)
        if not math.isfinite(alpha) or alpha < 0:
            raise InvalidParameterError(f"alpha deve ser real finito >= 0 (recebido {self.alpha!r})")
        object.__setattr__(self, 'alpha', alpha)

    def __float__(self):
        return self.alpha


def _alpha(alpha):
    return alpha.alpha if isinstance(alpha, WeightExponent) else WeightExponent(alpha).alpha


def total_weight(graph, alpha):
    """
    Soma de comprimento^alpha sobre as arestas (soma compensada).

    Em alpha = 0 devolve o número de arestas.
    """
    alpha = _alpha(alpha)
    lengths = np.asarray(getattr(graph, 'length', graph), dtype=float)
    if alpha == 0:
        return float(lengths.shape[0])
    if not np.all(np.isfinite(lengths)):
        raise InvalidParameterError("Comprimentos de aresta devem ser finitos")
    return math.fsum(np.power(lengths, alpha).tolist())


def rescaled_weight(graph, alpha, n, d):
    """n^((alpha - d)/d) vezes o peso total."""
    alpha = _alpha(alpha)
    if n < 1:
        raise InvalidParameterError(f"n deve ser >= 1 (recebido {n})")
    return float(n) ** ((alpha - d) / d) * total_weight(graph, alpha)
