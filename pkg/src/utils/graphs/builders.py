"""
Construtores dos grafos de vizinhança.

Todos recebem um PointSet e, opcionalmente, um KdIndex já construído sobre ele.
"""

import numpy as np

from utils.core.errors import InvalidParameterError
from utils.data.points import append_origin
from utils.config.logging import get_logger
from utils.graphs.types import WeightedDigraph, WeightedGraph
from utils.limits.families import FamilyKind, GraphFamily
from utils.spatial.cones import ConeOrder, cone_nn_all
from utils.spatial.kdindex import KdIndex
from utils.spatial.online import online_nn_all, online_order_from_marks

logger = get_logger("GRAPHS")


def _require_points(ps, minimum, what):
    if ps.n < minimum:
        raise InvalidParameterError(f"{what} exige n >= {minimum} (recebido n = {ps.n})")


def _neighbour_table(ps, k, index):
    index = index or KdIndex(ps)
    return index.ranked_neighbours(np.arange(ps.n), k)


def build_jth_nng(ps, j, index=None):
    """Cada ponto aponta para o seu j-ésimo vizinho mais próximo (n arestas)."""
    family = GraphFamily.jth_nng(j)
    _require_points(ps, family.min_points, f"j-ésimo NNG com j = {family.j}")
    idx, dist = _neighbour_table(ps, family.j, index)
    return WeightedDigraph(ps.n, np.arange(ps.n), idx[:, -1], dist[:, -1])


def build_knng(ps, k, index=None):
    """Cada ponto aponta para seus k vizinhos mais próximos (n k arestas, por origem e posto)."""
    family = GraphFamily.knng(k)
    _require_points(ps, family.min_points, f"k-NNG com k = {family.k}")
    idx, dist = _neighbour_table(ps, family.k, index)
    src = np.repeat(np.arange(ps.n), family.k)
    return WeightedDigraph(ps.n, src, idx.ravel(), dist.ravel())


def build_knng_undirected(ps, k, index=None):
    """Versão não dirigida do k-NNG; pares recíprocos contam uma vez."""
    directed = build_knng(ps, k, index)
    return WeightedGraph(ps.n, directed.src, directed.dst, directed.length)


def build_ong(ps, marks=None, index=None):
    """
    Grafo online: a i-ésima chegada liga-se ao predecessor mais próximo (n - 1 arestas).

    Sem `marks` a ordem de chegada é a ordem do PointSet; com `marks` é a ordem crescente
    das marcas, e as arestas continuam referindo os índices originais.
    """
    _require_points(ps, 2, "ONG")
    if marks is None:
        index = index or KdIndex(ps)
        targets, dists = online_nn_all(index)
        return WeightedDigraph(ps.n, np.arange(1, ps.n), targets[1:], dists[1:])

    marks = np.asarray(marks, dtype=float)
    if marks.shape != (ps.n,):
        raise InvalidParameterError(f"Esperadas {ps.n} marcas, recebidas {marks.shape}")
    arrival = online_order_from_marks(marks)
    arrived = type(ps)(ps.coords[arrival])
    targets, dists = online_nn_all(KdIndex(arrived))
    return WeightedDigraph(ps.n, arrival[1:], arrival[targets[1:]], dists[1:])


def build_mdsf(ps, order, index=None):
    """Cada vértice não minimal aponta para o vizinho dirigido mais próximo."""
    if not isinstance(order, ConeOrder):
        raise InvalidParameterError("build_mdsf espera uma ConeOrder")
    if ps.d != 2:
        raise InvalidParameterError(f"MDSF exige d = 2 (recebido d = {ps.d})")
    index = index or KdIndex(ps)
    targets, dists = cone_nn_all(index, order)
    src = np.flatnonzero(targets >= 0)
    logger.debug(f"MDSF com {ps.n - src.size} sorvedouro(s) em n = {ps.n}")
    return WeightedDigraph(ps.n, src, targets[src], dists[src])


def build_gabriel(ps, index=None):
    from utils.graphs.gabriel import gabriel_graph

    _require_points(ps, 2, "Grafo de Gabriel")
    return gabriel_graph(ps, index=index)


def build_graph(ps, family, index=None):
    """
    Constrói o grafo da família pedida.

    Args:
        ps: PointSet
        family: GraphFamily
        index: KdIndex opcional sobre ps

    Returns:
        WeightedDigraph ou WeightedGraph; com sorvedouro na origem os índices
        referem o conjunto aumentado (origem no índice 0)
    """
    kind = family.kind
    if family.with_origin_sink and not ps.origin_appended:
        ps = append_origin(ps)
        index = None
    if kind is FamilyKind.JTH_NNG:
        return build_jth_nng(ps, family.j, index)
    if kind is FamilyKind.KNNG:
        return build_knng(ps, family.k, index)
    if kind is FamilyKind.KNNG_UNDIRECTED:
        return build_knng_undirected(ps, family.k, index)
    if kind is FamilyKind.ONG:
        return build_ong(ps, index=index)
    if kind is FamilyKind.MDSF:
        return build_mdsf(ps, family.order, index)
    return build_gabriel(ps, index)
