"""
Grafos ponderados como listas de arestas.
"""

from dataclasses import dataclass

import numpy as np

from utils.core.errors import InvalidParameterError


@dataclass(frozen=True, eq=False)
class WeightedDigraph:
    """Arestas dirigidas src -> dst com comprimento euclidiano, sobre n vértices."""

    n: int
    src: np.ndarray
    dst: np.ndarray
    length: np.ndarray

    directed = True

    def __post_init__(self):
        src = np.asarray(self.src, dtype=np.int64).ravel()
        dst = np.asarray(self.dst, dtype=np.int64).ravel()
        length = np.asarray(self.length, dtype=float).ravel()
        if not (src.shape == dst.shape == length.shape):
            raise InvalidParameterError("src, dst e length devem ter o mesmo tamanho")
        if src.size and (src.min() < 0 or dst.min() < 0 or max(src.max(), dst.max()) >= self.n):
            raise InvalidParameterError(f"Aresta com vértice fora de 0..{self.n - 1}")
        if np.any(src == dst):
            raise InvalidParameterError("Laços não são permitidos")
        for name, arr in (('src', src), ('dst', dst), ('length', length)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def edge_count(self):
        return int(self.src.shape[0])

    def edges(self):
        """Lista de tuplas (src, dst, comprimento)."""
        return [(int(a), int(b), float(r)) for a, b, r in zip(self.src, self.dst, self.length)]

    def edge_set(self):
        return {(int(a), int(b)) for a, b in zip(self.src, self.dst)}

    def out_degrees(self):
        return np.bincount(self.src, minlength=self.n)


class WeightedGraph(WeightedDigraph):
    """
    Grafo não dirigido: cada aresta aparece uma única vez com src < dst.

    As arestas ficam ordenadas por (src, dst).
    """

    directed = False

    def __post_init__(self):
        src = np.asarray(self.src, dtype=np.int64).ravel()
        dst = np.asarray(self.dst, dtype=np.int64).ravel()
        length = np.asarray(self.length, dtype=float).ravel()
        if src.shape != dst.shape or src.shape != length.shape:
            raise InvalidParameterError("src, dst e length devem ter o mesmo tamanho")
        lo = np.minimum(src, dst)
        hi = np.maximum(src, dst)
        order = np.lexsort((hi, lo))
        lo, hi, length = lo[order], hi[order], length[order]
        if lo.size:
            keep = np.ones(lo.size, dtype=bool)
            keep[1:] = (lo[1:] != lo[:-1]) | (hi[1:] != hi[:-1])
            lo, hi, length = lo[keep], hi[keep], length[keep]
        object.__setattr__(self, 'src', lo)
        object.__setattr__(self, 'dst', hi)
        object.__setattr__(self, 'length', length)
        super().__post_init__()

    def degrees(self):
        return np.bincount(self.src, minlength=self.n) + np.bincount(self.dst, minlength=self.n)
