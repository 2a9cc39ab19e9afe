"""
Densidades suportadas: uniforme no cubo unitário ou constante por partes em caixas.
"""

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from utils.core.errors import InvalidParameterError
from utils.config.constants import DENSITY_VOLUME_TOL, DENSITY_MASS_TOL
from utils.limits.special import validate_dimension


@dataclass(frozen=True)
class Box:
    """Caixa alinhada aos eixos [lo, hi] com densidade constante f."""

    lo: Tuple[float, ...]
    hi: Tuple[float, ...]
    f: float

    def __post_init__(self):
        lo = tuple(float(v) for v in self.lo)
        hi = tuple(float(v) for v in self.hi)
        if len(lo) == 0 or len(lo) != len(hi):
            raise InvalidParameterError(f"Caixa com extremos incompatíveis: lo={lo}, hi={hi}")
        for a, b in zip(lo, hi):
            if not (math.isfinite(a) and math.isfinite(b)) or not 0.0 <= a < b <= 1.0:
                raise InvalidParameterError(f"Caixa fora de [0,1]^d ou degenerada: lo={lo}, hi={hi}")
        f = float(self.f)
        if not math.isfinite(f) or f <= 0:
            raise InvalidParameterError(f"Densidade da caixa deve estar em (0, inf): f={self.f!r}")
        object.__setattr__(self, 'lo', lo)
        object.__setattr__(self, 'hi', hi)
        object.__setattr__(self, 'f', f)

    @property
    def dim(self):
        return len(self.lo)

    @property
    def volume(self):
        return math.prod(b - a for a, b in zip(self.lo, self.hi))

    def contains(self, points):
        """Máscara dos pontos em [lo, hi) (o bordo superior 1 é incluído)."""
        lo = np.asarray(self.lo)
        hi = np.asarray(self.hi)
        upper = np.where(hi >= 1.0, points <= hi, points < hi)
        return np.all((points >= lo) & upper, axis=1)


def _overlap(a, b):
    return math.prod(max(0.0, min(ah, bh) - max(al, bl))
                     for al, ah, bl, bh in zip(a.lo, a.hi, b.lo, b.hi))


@dataclass(frozen=True)
class DensitySpec:
    """
    Densidade uniforme (boxes = None) ou constante por partes.

    As caixas particionam [0,1]^d e a massa total sum f_i vol_i vale 1.
    """

    boxes: Optional[Tuple[Box, ...]] = None

    def __post_init__(self):
        if self.boxes is None:
            return
        boxes = tuple(self.boxes)
        if not boxes:
            raise InvalidParameterError("Densidade por partes sem caixas")
        dims = {box.dim for box in boxes}
        if len(dims) != 1:
            raise InvalidParameterError(f"Caixas com dimensões diferentes: {sorted(dims)}")

        volume = math.fsum(box.volume for box in boxes)
        if abs(volume - 1.0) > DENSITY_VOLUME_TOL:
            raise InvalidParameterError(f"Caixas não cobrem [0,1]^d: volume total {volume!r}")
        for a, b in itertools.combinations(boxes, 2):
            if _overlap(a, b) > DENSITY_VOLUME_TOL:
                raise InvalidParameterError(f"Caixas se sobrepõem: {a} e {b}")
        mass = math.fsum(box.f * box.volume for box in boxes)
        if abs(mass - 1.0) > DENSITY_MASS_TOL:
            raise InvalidParameterError(f"Massa total da densidade deve ser 1 (obtido {mass!r})")
        object.__setattr__(self, 'boxes', boxes)

    @classmethod
    def uniform(cls):
        return cls(None)

    @classmethod
    def piecewise(cls, boxes):
        return cls(tuple(b if isinstance(b, Box) else Box(**b) for b in boxes))

    @property
    def is_uniform(self):
        return self.boxes is None

    @property
    def dim(self):
        """Dimensão exigida pelas caixas, ou None para a uniforme."""
        return None if self.boxes is None else self.boxes[0].dim

    @property
    def label(self):
        return "uniform" if self.is_uniform else f"piecewise[{len(self.boxes)}]"

    def check_dimension(self, d):
        d = validate_dimension(d)
        if self.dim is not None and self.dim != d:
            raise InvalidParameterError(f"Densidade definida em d = {self.dim}, pedido d = {d}")
        return d

    def masses(self):
        """Probabilidade de cada caixa (f_i vol_i)."""
        if self.boxes is None:
            return np.ones(1)
        return np.array([box.f * box.volume for box in self.boxes])

    def evaluate(self, points):
        """Valor da densidade em cada ponto de [0,1]^d (0 fora do cubo)."""
        points = np.atleast_2d(np.asarray(points, dtype=float))
        inside = np.all((points >= 0.0) & (points <= 1.0), axis=1)
        if self.boxes is None:
            return inside.astype(float)
        values = np.zeros(points.shape[0])
        for box in self.boxes:
            hit = box.contains(points) & (values == 0.0)
            values[hit] = box.f
        return values


def density_integral(density, d, alpha):
    """
    Fator de densidade: integral de f^((d - alpha)/d).

    Args:
        density: DensitySpec
        d: dimensão
        alpha: expoente do peso

    Returns:
        float: 1 para a uniforme; sum f_i^((d-alpha)/d) vol_i caso contrário
    """
    d = density.check_dimension(d)
    alpha = float(alpha)
    if density.is_uniform:
        return 1.0
    exponent = (d - alpha) / d
    return math.fsum(box.f ** exponent * box.volume for box in density.boxes)
