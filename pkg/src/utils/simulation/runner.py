"""
Execução das repetições Monte Carlo.
"""

from joblib import Parallel, delayed

from utils.config.constants import default_threads
from utils.config.logging import get_logger
from utils.data.density import density_integral
from utils.data.points import generate
from utils.graphs.builders import build_graph
from utils.graphs.functionals import rescaled_weight
from utils.limits.constants import limit_constant
from utils.limits.families import FamilyKind
from utils.simulation.report import ConvergenceReport, summarize
from utils.simulation.seeds import trial_seed

logger = get_logger("SIM")


def resolve_target(cfg):
    """
    Alvo = constante limite x fator de densidade, ou None quando não há lei conhecida.

    Raises:
        HypothesisError: se alpha ou d estão fora das hipóteses da lei limite
    """
    family = cfg.family
    if family.kind is FamilyKind.KNNG_UNDIRECTED and family.k != 1:
        logger.warning(f"{family.label}: sem constante limite conhecida para k >= 2; relatório sem alvo")
        return None

    constant = limit_constant(cfg.query)
    if family.kind is FamilyKind.ONG and not cfg.density.is_uniform:
        logger.warning("ONG com densidade não uniforme: lei limite só vale para pontos uniformes; relatório sem alvo")
        return None
    return constant * density_integral(cfg.density, cfg.d, cfg.alpha)


def trial_value(cfg, n, trial):
    """Peso reescalonado de uma repetição (a origem, se pedida, não conta no n)."""
    points = generate(n, cfg.d, cfg.density, trial_seed(cfg.seed, n, trial))
    graph = build_graph(points, cfg.family)
    return rescaled_weight(graph, cfg.alpha, n, cfg.d)


def run(cfg, n_jobs=None):
    """
    Executa o cronograma completo de uma configuração.

    Args:
        cfg: SimConfig
        n_jobs: workers do joblib (padrão: NNLLN_THREADS ou 1)

    Returns:
        ConvergenceReport: uma linha por n do cronograma
    """
    n_jobs = n_jobs or default_threads()
    target = resolve_target(cfg)
    report = ConvergenceReport(cfg.family.label, cfg.d, cfg.alpha, allowance=cfg.allowance)

    logger.info(f"Iniciando {cfg.family.label} d={cfg.d} alpha={cfg.alpha:g} "
                f"densidade={cfg.density.label} n={list(cfg.n_schedule)} repetições={cfg.trials}")
    with Parallel(n_jobs=n_jobs) as parallel:
        for n in cfg.n_schedule:
            logger.info(f"  -> n = {n}: {cfg.trials} repetição(ões) em {n_jobs} worker(s)")
            values = parallel(delayed(trial_value)(cfg, n, t) for t in range(cfg.trials))
            if logger.debug_enabled:
                logger.debug(f"     valores: min={min(values):.6g} max={max(values):.6g}")
            row = summarize(n, values, target, cfg.p_modes)
            report.rows.append(row)
            if target is None:
                logger.info(f"     média={row.mean:.6g} ep={row.stderr:.3g}")
            else:
                logger.info(f"     média={row.mean:.6g} ep={row.stderr:.3g} alvo={target:.6g} desvio={row.abs_dev:.3g}")

    logger.info(f"Execução concluída: {cfg.family.label}")
    return report
