"""Verificação Monte Carlo das leis dos grandes números."""

# Configurações
from .config import SimConfig, SIGMAS, systematic_allowance, REPORTS_OUTPUT_DIR

# Execução
from .runner import run, resolve_target, trial_value
from .seeds import trial_seed

# Relatórios
from .report import ConvergenceReport, ConvergenceRow, summarize, trend_check, meets_target, save_report

# Estimativas auxiliares
from .checks import (
    StatisticSummary, estimate_reciprocal_fraction, estimate_minimal_elements, estimate_gabriel_rank_probability
)
