"""
Conjuntos de pontos e geração de amostras i.i.d. reprodutíveis.
"""

import numbers
from dataclasses import dataclass

import numpy as np

from utils.core.errors import InvalidParameterError
from utils.config.logging import get_logger
from utils.data.density import DensitySpec
from utils.limits.special import validate_dimension

logger = get_logger("POINTS")

SEED_MAX = 2 ** 64


@dataclass(frozen=True, eq=False)
class PointSet:
    """
    Lista ordenada de n pontos em R^d (a ordem é a ordem de chegada).

    As coordenadas são copiadas para um array float64 somente leitura.
    """

    coords: np.ndarray
    origin_appended: bool = False

    def __post_init__(self):
        coords = np.array(self.coords, dtype=float, copy=True)
        if coords.ndim == 1:
            coords = coords[:, None]
        if coords.ndim != 2 or coords.shape[1] < 1:
            raise InvalidParameterError(f"Coordenadas devem formar uma matriz n x d (forma {coords.shape})")
        if coords.shape[0] < 1:
            raise InvalidParameterError("Conjunto de pontos vazio")
        if not np.all(np.isfinite(coords)):
            raise InvalidParameterError("Coordenadas devem ser finitas")
        coords.setflags(write=False)
        object.__setattr__(self, 'coords', coords)

    @property
    def n(self):
        return self.coords.shape[0]

    @property
    def d(self):
        return self.coords.shape[1]

    def __len__(self):
        return self.n


def validate_seed(seed):
    """Semente inteira de 64 bits sem sinal."""
    if isinstance(seed, bool) or not isinstance(seed, numbers.Integral) or not 0 <= seed < SEED_MAX:
        raise InvalidParameterError(f"Semente deve ser inteiro em [0, 2^64) (recebido {seed!r})")
    return int(seed)


def make_rng(seed):
    """Gerador Philox (baseado em contador) para a semente dada."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(validate_seed(seed))))


def _draw(rng, count, d, density):
    if density.is_uniform:
        return rng.random((count, d))
    boxes = density.boxes
    masses = density.masses()
    choice = rng.choice(len(boxes), size=count, p=masses / masses.sum())
    lo = np.array([box.lo for box in boxes])[choice]
    hi = np.array([box.hi for box in boxes])[choice]
    return lo + (hi - lo) * rng.random((count, d))


def _duplicate_rows(coords):
    _, first = np.unique(coords, axis=0, return_index=True)
    mask = np.ones(coords.shape[0], dtype=bool)
    mask[first] = False
    return np.flatnonzero(mask)


def generate(n, d, density, seed):
    """
    Gera n pontos i.i.d. com a densidade dada.

    Caixas são sorteadas com probabilidade f_i vol_i e o ponto é uniforme dentro da caixa.
    Pontos repetidos são sorteados de novo.

    Args:
        n: número de pontos (>= 1)
        d: dimensão
        density: DensitySpec
        seed: semente de 64 bits

    Returns:
        PointSet: pontos em [0,1)^d
    """
    if isinstance(n, bool) or not isinstance(n, numbers.Integral) or n < 1:
        raise InvalidParameterError(f"n deve ser inteiro >= 1 (recebido {n!r})")
    if not isinstance(density, DensitySpec):
        raise InvalidParameterError("density deve ser um DensitySpec")
    d = density.check_dimension(validate_dimension(d))

    rng = make_rng(seed)
    coords = _draw(rng, int(n), d, density)
    # Pontos no bordo superior de uma caixa podem valer 1.0 por arredondamento
    coords = np.minimum(coords, np.nextafter(1.0, 0.0))

    duplicates = _duplicate_rows(coords)
    while duplicates.size:
        logger.debug(f"Sorteando novamente {duplicates.size} ponto(s) repetido(s)")
        coords[duplicates] = np.minimum(_draw(rng, duplicates.size, d, density), np.nextafter(1.0, 0.0))
        duplicates = _duplicate_rows(coords)

    return PointSet(coords)


def append_origin(ps):
    """Novo PointSet com a origem (0, 0) no índice 0 (sorvedouro do MDST)."""
    if ps.origin_appended:
        raise InvalidParameterError("Origem já adicionada a este conjunto de pontos")
    if ps.d != 2:
        raise InvalidParameterError(f"Sorvedouro na origem só existe em d = 2 (recebido d = {ps.d})")
    coords = np.vstack([np.zeros((1, ps.d)), ps.coords])
    return PointSet(coords, origin_appended=True)
