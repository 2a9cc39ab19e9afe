"""
Famílias de grafos e consultas de constante limite.
"""

import math
import numbers
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from utils.core.errors import InvalidParameterError, HypothesisError
from utils.limits.special import validate_dimension
from utils.spatial.cones import ConeOrder


class FamilyKind(str, Enum):
    JTH_NNG = 'jth_nng'
    KNNG = 'knng'
    KNNG_UNDIRECTED = 'knng_undirected'
    ONG = 'ong'
    MDSF = 'mdsf'
    GABRIEL = 'gabriel'


def _positive_int(value, name):
    if isinstance(value, bool) or not isinstance(value, numbers.Integral) or value < 1:
        raise InvalidParameterError(f"{name} deve ser inteiro >= 1 (recebido {value!r})")
    return int(value)


@dataclass(frozen=True)
class GraphFamily:
    """
    Seletor da família de grafo e seus parâmetros.

    Use os construtores de classe (`jth_nng`, `knng`, ...) em vez do construtor direto.
    """

    kind: FamilyKind
    j: Optional[int] = None
    k: Optional[int] = None
    order: Optional[ConeOrder] = None
    with_origin_sink: bool = False

    def __post_init__(self):
        kind = FamilyKind(self.kind)
        object.__setattr__(self, 'kind', kind)

        if kind is FamilyKind.JTH_NNG:
            object.__setattr__(self, 'j', _positive_int(self.j, "j"))
        elif self.j is not None:
            raise InvalidParameterError(f"Parâmetro j não se aplica a {kind.value}")

        if kind in (FamilyKind.KNNG, FamilyKind.KNNG_UNDIRECTED):
            object.__setattr__(self, 'k', _positive_int(self.k, "k"))
        elif self.k is not None:
            raise InvalidParameterError(f"Parâmetro k não se aplica a {kind.value}")

        if kind is FamilyKind.MDSF:
            if not isinstance(self.order, ConeOrder):
                raise InvalidParameterError("MDSF exige uma ordem por cone")
            if self.with_origin_sink and not self.order.is_star:
                raise InvalidParameterError("Sorvedouro na origem só é permitido com a ordem estrela (theta = phi = pi/2)")
        elif self.order is not None or self.with_origin_sink:
            raise InvalidParameterError(f"Ordem por cone não se aplica a {kind.value}")

    @classmethod
    def jth_nng(cls, j=1):
        return cls(FamilyKind.JTH_NNG, j=j)

    @classmethod
    def knng(cls, k=1):
        return cls(FamilyKind.KNNG, k=k)

    @classmethod
    def knng_undirected(cls, k=1):
        return cls(FamilyKind.KNNG_UNDIRECTED, k=k)

    @classmethod
    def ong(cls):
        return cls(FamilyKind.ONG)

    @classmethod
    def mdsf(cls, order=None, with_origin_sink=False):
        return cls(FamilyKind.MDSF, order=order or ConeOrder.star(), with_origin_sink=with_origin_sink)

    @classmethod
    def gabriel(cls):
        return cls(FamilyKind.GABRIEL)

    @property
    def label(self):
        """Rótulo curto usado em relatórios (sem vírgulas, seguro para CSV)."""
        kind = self.kind
        if kind is FamilyKind.JTH_NNG:
            return f"jth_nng[j={self.j}]"
        if kind in (FamilyKind.KNNG, FamilyKind.KNNG_UNDIRECTED):
            return f"{kind.value}[k={self.k}]"
        if kind is FamilyKind.MDSF:
            suffix = ";origin" if self.with_origin_sink else ""
            return f"mdsf[{self.order.label}{suffix}]"
        return kind.value

    @property
    def min_points(self):
        """Menor n para o qual o grafo está definido."""
        if self.kind is FamilyKind.JTH_NNG:
            return self.j + 1
        if self.kind in (FamilyKind.KNNG, FamilyKind.KNNG_UNDIRECTED):
            return self.k + 1
        if self.kind is FamilyKind.MDSF:
            return 1
        return 2


@dataclass(frozen=True)
class LimitQuery:
    """Família, dimensão d e expoente alpha de uma constante limite."""

    family: GraphFamily
    d: int
    alpha: float

    def __post_init__(self):
        if not isinstance(self.family, GraphFamily):
            raise InvalidParameterError("family deve ser um GraphFamily")
        object.__setattr__(self, 'd', validate_dimension(self.d))
        alpha = float(self.alpha)
        if not math.isfinite(alpha) or alpha < 0:
            raise InvalidParameterError(f"alpha deve ser real finito >= 0 (recebido {self.alpha!r})")
        object.__setattr__(self, 'alpha', alpha)
        if self.family.kind is FamilyKind.MDSF and self.d != 2:
            raise InvalidParameterError(f"MDSF exige d = 2 (recebido d = {self.d})")

    def check_hypotheses(self):
        """Levanta HypothesisError se a lei limite não cobre estes parâmetros."""
        kind = self.family.kind
        if kind is FamilyKind.ONG and not self.alpha < self.d:
            raise HypothesisError(f"ONG: a lei limite exige 0 <= alpha < d (alpha = {self.alpha}, d = {self.d})")
        if kind is FamilyKind.MDSF and not 0 < self.alpha < 2:
            raise HypothesisError(f"MDSF: a lei limite exige 0 < alpha < 2 (alpha = {self.alpha})")
        if kind is FamilyKind.KNNG_UNDIRECTED and self.family.k != 1:
            raise HypothesisError(f"Grafo não dirigido: limite conhecido apenas para k = 1 (k = {self.family.k})")
