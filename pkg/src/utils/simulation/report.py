"""
Relatórios de convergência: estatísticas por n, regras de aceitação e persistência.
"""

import math
from dataclasses import dataclass, field, asdict
from typing import List, Optional

import numpy as np
import pandas as pd

from utils.core.errors import InvalidParameterError
from utils.config.constants import REPORT_COLUMNS
from utils.config.logging import get_logger
from utils.data.io import write_frame, write_json
from utils.simulation.config import REPORTS_OUTPUT_DIR, SIGMAS

logger = get_logger("REPORT")


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    trials: int
    mean: float
    stdev: float
    stderr: float
    target: float
    abs_dev: float
    l1: float
    l2: float


def summarize(n, values, target=None, p_modes=frozenset({1, 2})):
    """
    Estatísticas de uma entrada do cronograma.

    Sem alvo, target/abs_dev/l1/l2 ficam NaN; l1 e l2 também ficam NaN fora de p_modes.
    """
    values = np.asarray(values, dtype=float)
    trials = values.shape[0]
    if trials < 2:
        raise InvalidParameterError(f"São necessárias pelo menos 2 repetições (recebido {trials})")
    if not np.all(np.isfinite(values)):
        raise InvalidParameterError(f"Valores não finitos nas repetições com n = {n}")

    mean = math.fsum(values.tolist()) / trials
    stdev = float(np.std(values, ddof=1))
    stderr = stdev / math.sqrt(trials)
    if target is None:
        return ConvergenceRow(int(n), trials, mean, stdev, stderr, math.nan, math.nan, math.nan, math.nan)

    deviations = np.abs(values - target)
    l1 = math.fsum(deviations.tolist()) / trials if 1 in p_modes else math.nan
    l2 = math.fsum((deviations ** 2).tolist()) / trials if 2 in p_modes else math.nan
    return ConvergenceRow(int(n), trials, mean, stdev, stderr, float(target), abs(mean - target), l1, l2)


@dataclass
class ConvergenceReport:
    """Linhas por tamanho de amostra de uma execução."""

    family: str
    d: int
    alpha: float
    rows: List[ConvergenceRow] = field(default_factory=list)
    allowance: Optional[float] = None

    @property
    def target(self):
        if not self.rows or math.isnan(self.rows[-1].target):
            return None
        return self.rows[-1].target

    @property
    def last(self):
        return self.rows[-1]

    def to_records(self):
        return [{'family': self.family, 'd': self.d, 'alpha': self.alpha, **asdict(row)} for row in self.rows]

    def to_frame(self):
        return pd.DataFrame(self.to_records(), columns=REPORT_COLUMNS)


def trend_check(report):
    """
    Aproximação monótona ao longo do cronograma.

    Verdadeiro se o desvio absoluto no maior n não supera o do menor n e se o L^1
    no maior n é o mínimo do cronograma, ambos com folga de um erro padrão do maior n.
    Sem L^1 estimado, usa o desvio absoluto no lugar.
    """
    rows = report.rows
    if len(rows) < 3:
        raise InvalidParameterError(f"trend_check exige ao menos 3 tamanhos de amostra (recebido {len(rows)})")
    if report.target is None:
        raise InvalidParameterError("trend_check exige um alvo")

    slack = rows[-1].stderr
    errors = [row.l1 if not math.isnan(row.l1) else row.abs_dev for row in rows]
    approaching = rows[-1].abs_dev <= rows[0].abs_dev + slack
    smallest = errors[-1] <= min(errors) + slack
    return bool(approaching and smallest)


def meets_target(report, allowance=None, sigmas=SIGMAS):
    """|média - alvo| <= sigmas * erro padrão + folga, no maior n."""
    if report.target is None:
        raise InvalidParameterError("Relatório sem alvo")
    if allowance is None:
        allowance = report.allowance or 0.0
    last = report.last
    return bool(last.abs_dev <= sigmas * last.stderr + allowance)


def generate_report_filename(report, seed=None):
    """Nome padronizado do relatório."""
    filename = f"report_{report.family}_d{report.d}_a{report.alpha:g}"
    if seed is not None:
        filename += f"_s{seed}"
    filename += ".csv"

    # Remove caracteres inválidos para nomes de arquivo
    return "".join(c if c.isalnum() or c in ('-', '_', '.') else '_' for c in filename)


def save_report(report, out_csv=None, seed=None):
    """
    Salva o relatório em CSV e o espelho JSON (mesmo nome, extensão .json).

    Returns:
        tuple: (caminho do CSV, caminho do JSON)
    """
    if out_csv is None:
        out_csv = REPORTS_OUTPUT_DIR / generate_report_filename(report, seed)
    csv_path = write_frame(report.to_frame(), out_csv)
    json_path = write_json(report.to_records(), csv_path.with_suffix('.json'))
    logger.info(f"  -> Relatório com {len(report.rows)} linha(s) salvo em: {csv_path}")
    return csv_path, json_path
