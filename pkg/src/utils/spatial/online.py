"""
Vizinho mais próximo entre os predecessores na ordem de chegada.
"""

import numpy as np

from utils.core.errors import InvalidParameterError
from utils.config.constants import ONLINE_PREFIX_SCAN
from utils.config.logging import get_logger
from utils.spatial.kdindex import KdIndex, directed_search, rank_rows

logger = get_logger("SPATIAL")


def online_order_from_marks(marks):
    """
    Ordem de chegada induzida por marcas temporais distintas.

    Returns:
        np.ndarray: índices dos pontos em ordem crescente de marca
    """
    marks = np.asarray(marks, dtype=float)
    if marks.ndim != 1:
        raise InvalidParameterError("Marcas de chegada devem formar um vetor")
    if not np.all(np.isfinite(marks)):
        raise InvalidParameterError("Marcas de chegada devem ser finitas")
    if np.unique(marks).shape[0] != marks.shape[0]:
        raise InvalidParameterError("Marcas de chegada devem ser distintas")
    return np.argsort(marks, kind='stable')


def _scan_prefix(coords, i):
    candidates = np.arange(i)[None, :]
    idx, dist = rank_rows(coords, np.array([i]), candidates)
    return idx[0, 0], dist[0, 0]


def online_nn_all(index):
    """
    Predecessor mais próximo de cada ponto na ordem dos índices.

    Returns:
        tuple: (alvos, distâncias); o primeiro ponto recebe -1 e NaN
    """
    n = index.n
    targets = np.full(n, -1, dtype=np.int64)
    dists = np.full(n, np.nan)

    head = min(n, ONLINE_PREFIX_SCAN + 1)
    for i in range(1, head):
        targets[i], dists[i] = _scan_prefix(index.coords, i)

    if n > head:
        def predicate(queries, candidates, delta):
            return candidates < queries[:, None]

        tail = np.arange(head, n)
        targets[head:], dists[head:] = directed_search(index, tail, predicate)
    return targets, dists


def online_nn(points, arrival_index, index=None):
    """
    Vizinho mais próximo da i-ésima chegada entre as chegadas 1..i-1.

    Args:
        points: PointSet em ordem de chegada
        arrival_index: posição de chegada, começando em 1 (exige i >= 2)
        index: KdIndex opcional já construído

    Returns:
        tuple: (índice do predecessor no PointSet, distância)
    """
    if isinstance(arrival_index, bool) or int(arrival_index) != arrival_index:
        raise InvalidParameterError(f"Posição de chegada inválida: {arrival_index!r}")
    i = int(arrival_index)
    if not 2 <= i <= points.n:
        raise InvalidParameterError(f"Posição de chegada deve estar em 2..n (recebido {i}, n = {points.n})")

    query = i - 1
    if query <= ONLINE_PREFIX_SCAN:
        target, dist = _scan_prefix(points.coords, query)
        return int(target), float(dist)

    index = index or KdIndex(points)

    def predicate(queries, candidates, delta):
        return candidates < queries[:, None]

    targets, dists = directed_search(index, np.array([query]), predicate)
    return int(targets[0]), float(dists[0])
