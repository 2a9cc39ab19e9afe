"""
Consultas de vizinhança: k vizinhos, vizinho dirigido por cone e vizinho online.
"""

from utils.spatial.kdindex import KdIndex, euclidean, knn, knn_all, directed_search
from utils.spatial.cones import ConeOrder, cone_nn, cone_nn_all
from utils.spatial.online import online_nn, online_nn_all, online_order_from_marks

__all__ = [
    'KdIndex',
    'euclidean',
    'knn',
    'knn_all',
    'directed_search',
    'ConeOrder',
    'cone_nn',
    'cone_nn_all',
    'online_nn',
    'online_nn_all',
    'online_order_from_marks',
]
