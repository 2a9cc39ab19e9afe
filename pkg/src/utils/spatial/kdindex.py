"""
Índice espacial (KD-tree do scikit-learn) com ordenação exata dos vizinhos.

Toda lista de vizinhos sai na ordem (distância, coordenadas lexicográficas, índice),
com as distâncias recalculadas por `euclidean` para que builders e oráculos concordem bit a bit.
"""

import numpy as np
from sklearn.neighbors import KDTree

from utils.core.errors import InvalidParameterError
from utils.config.constants import DIRECTED_SCAN_NEIGHBOURS, INITIAL_NEIGHBOURS, KDTREE_LEAF_SIZE, QUERY_BATCH_SIZE
from utils.config.logging import get_logger

logger = get_logger("SPATIAL")

# Tolerância relativa para detectar empate na fronteira da lista
TIE_RTOL = 1e-12


def euclidean(a, b):
    """Distância euclidiana ao longo do último eixo."""
    diff = np.asarray(a, dtype=float) - np.asarray(b, dtype=float)
    return np.sqrt(np.sum(diff * diff, axis=-1))


def rank_rows(coords, queries, candidates):
    """
    Ordena cada linha de `candidates` (m, s) em relação ao ponto `queries[i]`.

    Returns:
        tuple: (índices ordenados, distâncias) ambos com forma (m, s)
    """
    candidates = np.asarray(candidates, dtype=np.int64)
    m, s = candidates.shape
    if m == 0 or s == 0:
        return candidates, np.zeros((m, s))
    dist = euclidean(coords[candidates], coords[queries][:, None, :])

    # lexsort: a última chave é a mais significativa
    keys = [candidates.ravel()]
    for axis in reversed(range(coords.shape[1])):
        keys.append(coords[candidates, axis].ravel())
    keys.append(dist.ravel())
    keys.append(np.repeat(np.arange(m), s))
    order = np.lexsort(keys).reshape(m, s) - (np.arange(m) * s)[:, None]

    return (np.take_along_axis(candidates, order, axis=1),
            np.take_along_axis(dist, order, axis=1))


class KdIndex:
    """KD-tree sobre as coordenadas de um PointSet."""

    def __init__(self, points, leaf_size=KDTREE_LEAF_SIZE):
        self.points = points
        self.coords = points.coords
        self.n = points.n
        self.d = points.d
        self.tree = KDTree(self.coords, leaf_size=leaf_size)

    def _resolve_tie(self, query, size, radius):
        # Lista truncada no meio de um empate: busca todos os pontos até o raio do empate
        center = self.coords[query:query + 1]
        found = self.tree.query_radius(center, r=radius * (1.0 + 1e-9) + 1e-300)[0]
        found = found[found != query]
        idx, dist = rank_rows(self.coords, np.array([query]), found[None, :])
        return idx[0, :size], dist[0, :size]

    def ranked_neighbours(self, queries, size):
        """
        Os `size` vizinhos mais próximos de cada consulta, excluindo a própria.

        Args:
            queries: índices dos pontos de consulta
            size: tamanho da lista (limitado a n - 1)

        Returns:
            tuple: arrays (m, size) de índices e distâncias
        """
        queries = np.asarray(queries, dtype=np.int64)
        size = min(int(size), self.n - 1)
        m = queries.shape[0]
        out_idx = np.empty((m, max(size, 0)), dtype=np.int64)
        out_dist = np.empty((m, max(size, 0)))
        if size < 1 or m == 0:
            return out_idx, out_dist

        k_query = min(size + 2, self.n)
        for start in range(0, m, QUERY_BATCH_SIZE):
            batch = queries[start:start + QUERY_BATCH_SIZE]
            _, idx = self.tree.query(self.coords[batch], k=k_query)

            # Remove o próprio ponto (ou o mais distante, se ele não apareceu)
            is_self = idx == batch[:, None]
            order = np.argsort(is_self, axis=1, kind='stable')
            idx = np.take_along_axis(idx, order, axis=1)[:, :k_query - 1]
            idx, dist = rank_rows(self.coords, batch, idx)

            if idx.shape[1] > size:
                tied = dist[:, size] <= dist[:, size - 1] * (1.0 + TIE_RTOL)
                for row in np.flatnonzero(tied):
                    idx[row, :size], dist[row, :size] = self._resolve_tie(
                        int(batch[row]), size, float(dist[row, size]))
                idx = idx[:, :size]
                dist = dist[:, :size]

            out_idx[start:start + len(batch)] = idx
            out_dist[start:start + len(batch)] = dist
        return out_idx, out_dist


def _as_index(points_or_index):
    if isinstance(points_or_index, KdIndex):
        return points_or_index
    return KdIndex(points_or_index)


def _validate_k(k, n):
    if isinstance(k, bool) or int(k) != k or not 1 <= k <= n - 1:
        raise InvalidParameterError(f"k deve satisfazer 1 <= k <= n - 1 (k = {k}, n = {n})")
    return int(k)


def knn(points, query_index, k):
    """
    Os k vizinhos mais próximos de um ponto, como lista de (índice, distância).

    Args:
        points: PointSet ou KdIndex já construído
        query_index: índice do ponto de consulta
        k: número de vizinhos (1 <= k <= n - 1)
    """
    index = _as_index(points)
    k = _validate_k(k, index.n)
    if not 0 <= query_index < index.n:
        raise InvalidParameterError(f"Índice de consulta fora do intervalo: {query_index}")
    idx, dist = index.ranked_neighbours(np.array([query_index]), k)
    return [(int(i), float(r)) for i, r in zip(idx[0], dist[0])]


def knn_all(points, k):
    """Tabela (n, k) de vizinhos e distâncias de todos os pontos."""
    index = _as_index(points)
    k = _validate_k(k, index.n)
    return index.ranked_neighbours(np.arange(index.n), k)


def _scan_directed(index, queries, predicate):
    """Resolve cada consulta avaliando `predicate` sobre todos os pontos: O(n) por consulta."""
    coords = index.coords
    everyone = np.arange(index.n)[None, :]
    targets = np.full(queries.shape[0], -1, dtype=np.int64)
    dists = np.full(queries.shape[0], np.nan)
    for row, q in enumerate(queries):
        delta = coords - coords[q]
        mask = np.asarray(predicate(np.array([q]), everyone, delta[None]))[0]
        mask[q] = False
        candidates = np.flatnonzero(mask)
        if candidates.size == 0:
            continue
        dist = euclidean(coords[candidates], coords[q])
        # Só os empatados com o mínimo passam pela ordenação completa
        nearest = candidates[dist <= dist.min() * (1.0 + TIE_RTOL)]
        idx, ranked = rank_rows(coords, np.array([q]), nearest[None, :])
        targets[row], dists[row] = idx[0, 0], ranked[0, 0]
    return targets, dists


def directed_search(index, queries, predicate, initial=INITIAL_NEIGHBOURS):
    """
    Primeiro vizinho de cada consulta que satisfaz `predicate`, com lista crescente.

    `predicate(queries, candidates, delta)` recebe os índices das consultas (m,),
    os candidatos (m, s) e os deltas candidato - consulta (m, s, d) e devolve uma máscara.
    Uma resposta só é aceita se for estritamente mais próxima que o fim da lista,
    ou se a lista já cobre todos os pontos; consultas sem resposta recebem -1 e NaN.
    Consultas que ainda não se resolveram quando a lista passa de DIRECTED_SCAN_NEIGHBOURS
    (sorvedouros, em geral) são resolvidas por varredura mascarada.
    """
    queries = np.asarray(queries, dtype=np.int64)
    n = index.n
    targets = np.full(queries.shape[0], -1, dtype=np.int64)
    dists = np.full(queries.shape[0], np.nan)
    if n < 2:
        return targets, dists

    pending = np.arange(queries.shape[0])
    size = min(initial, n - 1)
    rounds = 0
    while pending.size:
        if DIRECTED_SCAN_NEIGHBOURS < size < n - 1:
            logger.debug(f"Busca dirigida: varredura para {pending.size} consulta(s) com lista de {size}")
            targets[pending], dists[pending] = _scan_directed(index, queries[pending], predicate)
            break
        q = queries[pending]
        idx, dist = index.ranked_neighbours(q, size)
        delta = index.coords[idx] - index.coords[q][:, None, :]
        mask = predicate(q, idx, delta)

        rows = np.arange(q.shape[0])
        has = mask.any(axis=1)
        first = mask.argmax(axis=1)
        found = dist[rows, first]
        if size >= n - 1:
            resolved = np.ones(q.shape[0], dtype=bool)
        else:
            resolved = has & (found < dist[:, -1])

        hit = resolved & has
        targets[pending[hit]] = idx[rows, first][hit]
        dists[pending[hit]] = found[hit]
        pending = pending[~resolved]
        size = min(2 * size, n - 1)
        rounds += 1

    logger.debug(f"Busca dirigida concluída em {rounds} rodada(s) para {queries.shape[0]} consulta(s)")
    return targets, dists
