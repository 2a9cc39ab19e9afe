"""
Grafo de Gabriel: {x, y} é aresta sse nenhum outro ponto está na bola aberta de diâmetro xy.

Com x na origem, z bloqueia o par (x, y) sse |z|^2 < z.y. Um bloqueador de (x, y) está
sempre mais perto de x do que y, então os candidatos de x são testados apenas contra a
lista dos seus K vizinhos. Para descartar os pontos fora da lista, cada ponto tenta um
certificado: a esfera de direções é coberta por calotas e cada calota precisa ser
"sombreada" por algum vizinho da lista, ou cair fora da caixa envolvente dos pontos.
Pontos sem certificado repetem com K dobrado e, acima de GABRIEL_MAX_NEIGHBOURS, fazem
uma varredura direta.
"""

import itertools

import numpy as np

from utils.config.constants import (
    GABRIEL_BATCH_SIZE, GABRIEL_MAX_NEIGHBOURS, GABRIEL_NEIGHBOURS, GABRIEL_NEIGHBOURS_DEFAULT,
    GABRIEL_PATCHES_PER_FACE, GABRIEL_PATCHES_PER_FACE_DEFAULT
)
from utils.config.logging import get_logger
from utils.graphs.types import WeightedGraph
from utils.spatial.kdindex import KdIndex, euclidean

logger = get_logger("GRAPHS")


def direction_patches(d):
    """
    Calotas que cobrem a esfera unitária de R^d.

    Cada face do cubo [-1,1]^d é dividida numa grade; a calota de uma célula tem o centro
    projetado e como raio o maior ângulo até um vértice da célula.

    Returns:
        tuple: (centros (P, d), raios angulares (P,))
    """
    if d == 1:
        return np.array([[1.0], [-1.0]]), np.zeros(2)

    m = GABRIEL_PATCHES_PER_FACE.get(d, GABRIEL_PATCHES_PER_FACE_DEFAULT)
    offsets = -1.0 + (2.0 * np.arange(m) + 1.0) / m
    half = 1.0 / m
    corner_signs = np.array(list(itertools.product((-1.0, 1.0), repeat=d - 1)))

    centers, radii = [], []
    for axis in range(d):
        for sign in (1.0, -1.0):
            for cell in itertools.product(offsets, repeat=d - 1):
                cell = np.array(cell)
                center = np.insert(cell, axis, sign)
                center /= np.linalg.norm(center)
                corners = np.insert(cell + corner_signs * half, axis, sign, axis=1)
                corners /= np.linalg.norm(corners, axis=1)[:, None]
                radius = np.arccos(np.clip(corners @ center, -1.0, 1.0)).max()
                centers.append(center)
                radii.append(radius)
    return np.array(centers), np.array(radii)


def _certify(rel, sq, reach, origin, centers, radii, lo, hi):
    """
    Máscara dos pontos do lote cujo conjunto de vizinhos candidatos está completo.

    rel (m, K, d) são os vizinhos relativos a cada ponto, sq seus quadrados de norma e
    reach (m,) a distância do último vizinho da lista.
    """
    norms = np.sqrt(sq)
    safe = np.where(norms > 0, norms, 1.0)
    cos_zc = np.einsum('mkd,pd->mkp', rel, centers) / safe[:, :, None]
    angle_zc = np.arccos(np.clip(cos_zc, -1.0, 1.0))
    shadow = np.arccos(np.clip(norms / reach[:, None], 0.0, 1.0))
    shadow = np.where(norms > 0, shadow, 0.0)
    covered = np.any(angle_zc + radii[None, None, :] < shadow[:, :, None], axis=1)

    # Calotas cujas direções saem da caixa envolvente antes da distância reach
    angle_axis = np.arccos(np.clip(centers, -1.0, 1.0))
    low_cos_pos = np.cos(np.minimum(np.pi, angle_axis + radii[:, None]))
    low_cos_neg = np.cos(np.minimum(np.pi, (np.pi - angle_axis) + radii[:, None]))
    exits_hi = origin[:, None, :] + reach[:, None, None] * low_cos_pos[None] > hi
    exits_lo = origin[:, None, :] - reach[:, None, None] * low_cos_neg[None] < lo
    empty = np.any(exits_hi | exits_lo, axis=2)

    return np.all(covered | empty, axis=1)


def _scan_row(coords, x, listed):
    """Vizinhos de Gabriel de x fora da lista, por varredura direta."""
    n = coords.shape[0]
    outside = np.ones(n, dtype=bool)
    outside[listed] = False
    outside[x] = False
    far = np.flatnonzero(outside)
    if far.size == 0:
        return far

    origin = coords[x]
    z = coords[listed] - origin
    z_sq = np.einsum('kd,kd->k', z, z)
    rel_far = coords[far] - origin
    survivors = far[~np.any(rel_far @ z.T > z_sq[None, :], axis=1)]
    if survivors.size == 0:
        return survivors

    rel_all = coords - origin
    sq_all = np.einsum('nd,nd->n', rel_all, rel_all)
    found = []
    for start in range(0, survivors.size, 64):
        chunk = survivors[start:start + 64]
        dots = rel_all @ rel_all[chunk].T
        # y não bloqueia a própria aresta (y.y e |y|^2 podem diferir em 1 ulp)
        dots[chunk, np.arange(chunk.size)] = -np.inf
        blocked = np.any(dots > sq_all[:, None], axis=0)
        found.append(chunk[~blocked])
    return np.concatenate(found)


def gabriel_graph(ps, index=None):
    """
    Constrói o grafo de Gabriel de um PointSet com n >= 2.

    Returns:
        WeightedGraph: arestas {x, y} com bola diametral aberta vazia
    """
    coords = ps.coords
    n, d = ps.n, ps.d
    if n == 2:
        return WeightedGraph(2, [0], [1], [float(euclidean(coords[0], coords[1]))])

    index = index or KdIndex(ps)
    centers, radii = direction_patches(d)
    lo = coords.min(axis=0)
    hi = coords.max(axis=0)

    src, dst = [], []
    pending = np.arange(n)
    size = min(n - 1, GABRIEL_NEIGHBOURS.get(d, GABRIEL_NEIGHBOURS_DEFAULT))
    while pending.size:
        uncertified = []
        for start in range(0, pending.size, GABRIEL_BATCH_SIZE):
            batch = pending[start:start + GABRIEL_BATCH_SIZE]
            idx, dist = index.ranked_neighbours(batch, size)
            rel = coords[idx] - coords[batch][:, None, :]
            # dots[m, k, j] = y_k . z_j; a diagonal dá |z_j|^2 pela mesma conta
            dots = np.einsum('mkd,mjd->mkj', rel, rel)
            sq = np.diagonal(dots, axis1=1, axis2=2).copy()
            diag = np.arange(dots.shape[1])
            dots[:, diag, diag] = -np.inf
            blocked = np.any(dots > sq[:, None, :], axis=2)

            rows, cols = np.nonzero(~blocked)
            src.append(batch[rows])
            dst.append(idx[rows, cols])

            if size < n - 1:
                certified = _certify(rel, sq, dist[:, -1], coords[batch], centers, radii, lo, hi)
                uncertified.append(batch[~certified])

        pending = np.concatenate(uncertified) if uncertified else np.empty(0, dtype=np.int64)
        if pending.size == 0:
            break
        if 2 * size > GABRIEL_MAX_NEIGHBOURS:
            logger.debug(f"Gabriel: varredura direta para {pending.size} ponto(s) com K = {size}")
            idx, _ = index.ranked_neighbours(pending, size)
            for row, x in enumerate(pending):
                extra = _scan_row(coords, int(x), idx[row])
                src.append(np.full(extra.size, x, dtype=np.int64))
                dst.append(extra)
            break
        logger.debug(f"Gabriel: {pending.size} ponto(s) sem certificado, K = {size} -> {min(2 * size, n - 1)}")
        size = min(2 * size, n - 1)

    src = np.concatenate(src)
    dst = np.concatenate(dst)
    return WeightedGraph(n, src, dst, euclidean(coords[src], coords[dst]))
