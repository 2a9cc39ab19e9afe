"""
Contagens estruturais: sorvedouros de uma ordem por cone e pares recíprocos de vizinhos.
"""

import numpy as np

from utils.core.errors import InvalidParameterError
from utils.spatial.cones import cone_nn_all
from utils.spatial.kdindex import KdIndex


def count_minimal_elements(ps, order, index=None):
    """Número de vértices sem predecessor na ordem (sempre >= 1)."""
    if ps.d != 2:
        raise InvalidParameterError(f"Ordens por cone exigem d = 2 (recebido d = {ps.d})")
    if ps.n == 1:
        return 1
    targets, _ = cone_nn_all(index or KdIndex(ps), order)
    return int(np.count_nonzero(targets < 0))


def count_reciprocal_pairs(ps, index=None):
    """Número de pares não ordenados em que cada ponto é o vizinho mais próximo do outro."""
    if ps.n < 2:
        raise InvalidParameterError(f"Pares recíprocos exigem n >= 2 (recebido n = {ps.n})")
    index = index or KdIndex(ps)
    nearest = index.ranked_neighbours(np.arange(ps.n), 1)[0][:, 0]
    mutual = nearest[nearest] == np.arange(ps.n)
    return int(np.count_nonzero(mutual)) // 2
