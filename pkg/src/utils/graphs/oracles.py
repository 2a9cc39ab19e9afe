"""
Construções por força bruta, usadas como referência nos testes.

Usam a mesma distância e o mesmo desempate (distância, coordenadas, índice) dos construtores.
"""

import numpy as np

from utils.graphs.types import WeightedDigraph, WeightedGraph
from utils.spatial.kdindex import euclidean, rank_rows


def brute_ranked(ps, i, candidates=None):
    """Candidatos de i ordenados pelo desempate padrão: (índices, distâncias)."""
    if candidates is None:
        candidates = np.array([v for v in range(ps.n) if v != i], dtype=np.int64)
    if len(candidates) == 0:
        return np.empty(0, dtype=np.int64), np.empty(0)
    idx, dist = rank_rows(ps.coords, np.array([i]), np.asarray(candidates)[None, :])
    return idx[0], dist[0]


def brute_knn(ps, i, k):
    idx, dist = brute_ranked(ps, i)
    return [(int(a), float(r)) for a, r in zip(idx[:k], dist[:k])]


def brute_jth_nng(ps, j):
    rows = [brute_ranked(ps, i) for i in range(ps.n)]
    return WeightedDigraph(ps.n, np.arange(ps.n),
                           [idx[j - 1] for idx, _ in rows], [dist[j - 1] for _, dist in rows])


def brute_knng(ps, k):
    src, dst, length = [], [], []
    for i in range(ps.n):
        idx, dist = brute_ranked(ps, i)
        src += [i] * k
        dst += list(idx[:k])
        length += list(dist[:k])
    return WeightedDigraph(ps.n, src, dst, length)


def brute_knng_undirected(ps, k):
    g = brute_knng(ps, k)
    return WeightedGraph(ps.n, g.src, g.dst, g.length)


def brute_ong(ps):
    src, dst, length = [], [], []
    for i in range(1, ps.n):
        idx, dist = brute_ranked(ps, i, np.arange(i))
        src.append(i)
        dst.append(idx[0])
        length.append(dist[0])
    return WeightedDigraph(ps.n, src, dst, length)


def _predecessors(ps, order, v):
    mask = order.precedes_mask(ps.coords - ps.coords[v])
    mask[v] = False
    return np.flatnonzero(mask)


def brute_mdsf(ps, order):
    src, dst, length = [], [], []
    for v in range(ps.n):
        preds = _predecessors(ps, order, v)
        if preds.size:
            idx, dist = brute_ranked(ps, v, preds)
            src.append(v)
            dst.append(idx[0])
            length.append(dist[0])
    return WeightedDigraph(ps.n, src, dst, length)


def brute_gabriel(ps):
    coords = ps.coords
    src, dst = [], []
    for x in range(ps.n):
        rel = coords - coords[x]
        sq = np.einsum('nd,nd->n', rel, rel)
        for y in range(x + 1, ps.n):
            dots = rel @ rel[y]
            dots[[x, y]] = -np.inf
            if not np.any(dots > sq):
                src.append(x)
                dst.append(y)
    src = np.array(src, dtype=np.int64)
    dst = np.array(dst, dtype=np.int64)
    return WeightedGraph(ps.n, src, dst, euclidean(coords[src], coords[dst]))


def brute_minimal_elements(ps, order):
    return sum(1 for v in range(ps.n) if _predecessors(ps, order, v).size == 0)


def brute_reciprocal_pairs(ps):
    nearest = [brute_ranked(ps, i)[0][0] for i in range(ps.n)]
    return sum(1 for i in range(ps.n) if nearest[nearest[i]] == i) // 2
