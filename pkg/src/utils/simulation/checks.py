"""
Estimativas Monte Carlo de grandezas auxiliares com alvo em forma fechada.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from joblib import Parallel, delayed

from utils.core.errors import InvalidParameterError
from utils.config.constants import default_threads
from utils.config.logging import get_logger
from utils.data.density import DensitySpec
from utils.data.points import generate
from utils.graphs.counts import count_minimal_elements, count_reciprocal_pairs
from utils.graphs.gabriel import gabriel_graph
from utils.limits.constants import (
    expected_minimal_elements, gabriel_rank_edge_probability, reciprocal_pair_fraction
)
from utils.simulation.config import SIGMAS
from utils.simulation.seeds import trial_seed
from utils.spatial.cones import ConeOrder
from utils.spatial.kdindex import KdIndex

logger = get_logger("SIM")


@dataclass(frozen=True)
class StatisticSummary:
    """Média de uma estatística, seu erro padrão e o alvo teórico (se houver)."""

    name: str
    mean: float
    stderr: float
    target: Optional[float]
    samples: int

    def within(self, sigmas=SIGMAS, allowance=0.0):
        if self.target is None:
            raise InvalidParameterError(f"{self.name}: sem alvo teórico")
        return bool(abs(self.mean - self.target) <= sigmas * self.stderr + allowance)


def _summary(name, values, target):
    values = np.asarray(values, dtype=float)
    if values.shape[0] < 2:
        raise InvalidParameterError(f"{name}: são necessárias pelo menos 2 repetições")
    mean = math.fsum(values.tolist()) / values.shape[0]
    stderr = float(np.std(values, ddof=1)) / math.sqrt(values.shape[0])
    summary = StatisticSummary(name, mean, stderr, target, int(values.shape[0]))
    logger.info(f"{name}: média={mean:.6g} ep={stderr:.3g} alvo={target}")
    return summary


def _reciprocal_trial(d, n, density, seed):
    points = generate(n, d, density, seed)
    return 2.0 * count_reciprocal_pairs(points) / n


def estimate_reciprocal_fraction(d, n, trials, seed, density=None, n_jobs=None):
    """Fração de pontos em pares recíprocos de vizinhos; alvo v_d / omega_d."""
    density = density or DensitySpec.uniform()
    if n < 2:
        raise InvalidParameterError(f"Pares recíprocos exigem n >= 2 (recebido {n})")
    values = Parallel(n_jobs=n_jobs or default_threads())(
        delayed(_reciprocal_trial)(d, n, density, trial_seed(seed, n, t)) for t in range(trials))
    return _summary("fracao_reciproca", values, reciprocal_pair_fraction(d))


def _minimal_trial(n, order, seed):
    return count_minimal_elements(generate(n, 2, DensitySpec.uniform(), seed), order)


def estimate_minimal_elements(n, trials, seed, order=None, n_jobs=None):
    """Número de sorvedouros de n pontos uniformes no quadrado; alvo H_n para a ordem estrela."""
    order = order or ConeOrder.star()
    values = Parallel(n_jobs=n_jobs or default_threads())(
        delayed(_minimal_trial)(n, order, trial_seed(seed, n, t)) for t in range(trials))
    target = expected_minimal_elements(n) if order.is_star else None
    return _summary("elementos_minimais", values, target)


def gabriel_rank_counts(d, n, ranks, seed):
    """
    Por posto k: pontos interiores (bola do k-ésimo vizinho dentro do cubo) e quantos
    deles têm a aresta para o k-ésimo vizinho no grafo de Gabriel.
    """
    points = generate(n, d, DensitySpec.uniform(), seed)
    index = KdIndex(points)
    idx, dist = index.ranked_neighbours(np.arange(n), max(ranks))
    graph = gabriel_graph(points, index=index)
    edge_keys = graph.src * n + graph.dst

    own = np.arange(n)
    counts, hits = [], []
    for k in ranks:
        radius = dist[:, k - 1][:, None]
        interior = np.all(points.coords - radius >= 0.0, axis=1) & np.all(points.coords + radius <= 1.0, axis=1)
        neighbour = idx[:, k - 1]
        keys = np.minimum(own, neighbour) * n + np.maximum(own, neighbour)
        present = np.isin(keys, edge_keys)
        counts.append(int(np.count_nonzero(interior)))
        hits.append(int(np.count_nonzero(interior & present)))
    return counts, hits


def estimate_gabriel_rank_probability(d, n, samples, seed, ranks=(1, 2, 3), n_jobs=None):
    """
    Probabilidade de a aresta até o k-ésimo vizinho pertencer ao grafo de Gabriel.

    Pontos de uma mesma amostra não são independentes: o erro padrão é calculado com
    as amostras como conglomerados (estimador de razão).

    Returns:
        list[StatisticSummary]: um resumo por posto, na ordem de `ranks`
    """
    ranks = tuple(int(k) for k in ranks)
    if not ranks or min(ranks) < 1 or max(ranks) > n - 1:
        raise InvalidParameterError(f"Postos devem estar em 1..n-1 (recebido {ranks})")
    if samples < 2:
        raise InvalidParameterError("São necessárias pelo menos 2 amostras")

    results = Parallel(n_jobs=n_jobs or default_threads())(
        delayed(gabriel_rank_counts)(d, n, ranks, trial_seed(seed, n, s)) for s in range(samples))
    counts = np.array([c for c, _ in results], dtype=float)
    hits = np.array([h for _, h in results], dtype=float)

    summaries = []
    for col, k in enumerate(ranks):
        c, h = counts[:, col], hits[:, col]
        total = c.sum()
        if total == 0:
            raise InvalidParameterError(f"Nenhum ponto interior para o posto {k}")
        p = h.sum() / total
        residual = h - p * c
        stderr = math.sqrt(np.sum(residual ** 2) / (samples * (samples - 1))) / c.mean()
        summary = StatisticSummary(f"gabriel_posto_{k}", float(p), stderr,
                                   gabriel_rank_edge_probability(d, k), int(total))
        logger.info(f"{summary.name}: p={p:.5f} ep={stderr:.3g} alvo={summary.target:.5f}")
        summaries.append(summary)
    return summaries
