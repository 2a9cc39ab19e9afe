"""
Configurações da verificação Monte Carlo das leis dos grandes números.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import FrozenSet, Tuple

from utils.core.errors import InvalidParameterError
from utils.data.density import DensitySpec
from utils.data.points import validate_seed
from utils.limits.families import FamilyKind, GraphFamily, LimitQuery

# Regra de aceitação: |média - alvo| <= SIGMAS * erro padrão + folga sistemática
SIGMAS = 3.0
DEFAULT_P_MODES = frozenset({1, 2})

# Folga sistemática por família (viés de borda em n finito)
ALLOWANCE_NNG_ALPHA_ONE = 0.005
ALLOWANCE_NNG_DEFAULT = 0.02
ALLOWANCE_UNDIRECTED = 0.005
ALLOWANCE_ONG = 0.03
ALLOWANCE_MDSF = 0.05
ALLOWANCE_GABRIEL = 0.02
ALLOWANCE_NON_UNIFORM = 0.01

# Sementes de referência dos critérios de aceitação
REFERENCE_SEEDS = (20240601, 20240602, 20240603)

# Diretórios
ROOT_DIR = Path(__file__).resolve().parents[3]  # Volta 3 níveis: simulation -> utils -> src -> root
REPORTS_OUTPUT_DIR = ROOT_DIR / 'output' / 'reports'


def systematic_allowance(family, alpha, density=None):
    """Folga sistemática usada junto com SIGMAS erros padrão."""
    kind = family.kind
    if kind in (FamilyKind.JTH_NNG, FamilyKind.KNNG):
        rank = family.j if kind is FamilyKind.JTH_NNG else family.k
        base = ALLOWANCE_NNG_ALPHA_ONE if rank == 1 and alpha == 1 else ALLOWANCE_NNG_DEFAULT
    elif kind is FamilyKind.KNNG_UNDIRECTED:
        base = ALLOWANCE_UNDIRECTED
    elif kind is FamilyKind.ONG:
        base = ALLOWANCE_ONG
    elif kind is FamilyKind.MDSF:
        base = ALLOWANCE_MDSF
    else:
        base = ALLOWANCE_GABRIEL
    if density is not None and not density.is_uniform:
        base = max(base, ALLOWANCE_NON_UNIFORM)
    return base


@dataclass(frozen=True)
class SimConfig:
    """Parâmetros de uma execução: família, d, alpha, densidade, tamanhos, repetições e semente."""

    family: GraphFamily
    d: int
    alpha: float
    n_schedule: Tuple[int, ...]
    trials: int
    seed: int
    density: DensitySpec = field(default_factory=DensitySpec.uniform)
    p_modes: FrozenSet[int] = DEFAULT_P_MODES

    def __post_init__(self):
        query = LimitQuery(self.family, self.d, self.alpha)
        object.__setattr__(self, 'd', query.d)
        object.__setattr__(self, 'alpha', query.alpha)
        self.density.check_dimension(query.d)

        schedule = tuple(self.n_schedule)
        if not schedule:
            raise InvalidParameterError("n_schedule não pode ser vazio")
        for n in schedule:
            if isinstance(n, bool) or int(n) != n:
                raise InvalidParameterError(f"Tamanho de amostra inválido: {n!r}")
        schedule = tuple(int(n) for n in schedule)
        if any(b <= a for a, b in zip(schedule, schedule[1:])):
            raise InvalidParameterError(f"n_schedule deve ser estritamente crescente: {schedule}")
        if schedule[0] < self.family.min_points:
            raise InvalidParameterError(
                f"{self.family.label} exige n >= {self.family.min_points} (recebido {schedule[0]})")
        object.__setattr__(self, 'n_schedule', schedule)

        if isinstance(self.trials, bool) or int(self.trials) != self.trials or self.trials < 2:
            raise InvalidParameterError(f"trials deve ser inteiro >= 2 (recebido {self.trials!r})")
        object.__setattr__(self, 'trials', int(self.trials))
        object.__setattr__(self, 'seed', validate_seed(self.seed))

        p_modes = frozenset(self.p_modes)
        if not p_modes or not p_modes <= {1, 2}:
            raise InvalidParameterError(f"p_modes deve ser subconjunto não vazio de {{1, 2}}: {sorted(p_modes)}")
        object.__setattr__(self, 'p_modes', p_modes)

    @property
    def query(self):
        return LimitQuery(self.family, self.d, self.alpha)

    @property
    def allowance(self):
        return systematic_allowance(self.family, self.alpha, self.density)
