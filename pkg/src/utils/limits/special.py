"""
Funções especiais: log-Gamma, volume da bola unitária e volume da união de duas bolas.
"""

import math
import numbers

import numpy as np
from scipy import integrate, special

from utils.core.errors import InvalidParameterError


def validate_dimension(d):
    """Garante que d é um inteiro positivo e o devolve como int."""
    if isinstance(d, bool) or not isinstance(d, numbers.Integral):
        raise InvalidParameterError(f"Dimensão inválida: {d!r} (esperado inteiro >= 1)")
    if d < 1:
        raise InvalidParameterError(f"Dimensão inválida: {d} (esperado d >= 1)")
    return int(d)


def log_gamma(x):
    """
    Logaritmo natural de Gamma(x) para x > 0.

    Avaliado em domínio logarítmico (scipy.special.gammaln) para não estourar
    com k grande; só é exponenciado por quem consome.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 0:
        raise InvalidParameterError(f"log_gamma exige argumento positivo, recebido {x}")
    return float(special.gammaln(x))


def _ball_volume(d):
    # d = 0 é aceito aqui (v_0 = 1) porque a quadratura usa v_{d-1}
    return math.exp((d / 2.0) * math.log(math.pi) - special.gammaln(1.0 + d / 2.0))


def unit_ball_volume(d):
    """v_d = pi^(d/2) / Gamma(1 + d/2)."""
    d = validate_dimension(d)
    return _ball_volume(d)


def union_two_balls_volume(d):
    """
    Volume omega_d da união de duas bolas unitárias com centros a distância 1.

    omega_d = 2 v_d - lente, e a lente são duas calotas de altura 1/2:
    lente = v_d * I_{3/4}((d+1)/2, 1/2), com I a beta incompleta regularizada.
    """
    d = validate_dimension(d)
    v_d = _ball_volume(d)
    lens = v_d * float(special.betainc((d + 1) / 2.0, 0.5, 0.75))
    return 2.0 * v_d - lens


def union_two_balls_volume_quadrature(d):
    """
    Mesmo omega_d, por integração em fatias perpendiculares ao eixo dos centros.

    Com t = -cos(u) a seção da união vira v_{d-1} sin(u)^(d-1) e o integrando
    fica suave: omega_d = 2 v_{d-1} * integral_0^{2pi/3} sin(u)^d du.
    """
    d = validate_dimension(d)
    value, _ = integrate.quad(
        lambda u: np.sin(u) ** d, 0.0, 2.0 * math.pi / 3.0,
        epsabs=0.0, epsrel=1e-13, limit=200)
    return 2.0 * _ball_volume(d - 1) * value
