"""
Constantes limite em forma fechada das leis dos grandes números.
"""

import math

from utils.core.errors import InvalidParameterError
from utils.config.logging import get_logger
from utils.limits.families import FamilyKind, LimitQuery
from utils.limits.special import (
    log_gamma, unit_ball_volume, union_two_balls_volume, validate_dimension
)

logger = get_logger("LIMITS")


def _validate_alpha(alpha):
    alpha = float(alpha)
    if not math.isfinite(alpha) or alpha < 0:
        raise InvalidParameterError(f"alpha deve ser real finito >= 0 (recebido {alpha})")
    return alpha


def knng_constant(d, alpha, k):
    """C(d, alpha, k) = v_d^(-alpha/d) (d/(d+alpha)) Gamma(k+1+alpha/d) / Gamma(k)."""
    a = alpha / d
    log_value = (-a * math.log(unit_ball_volume(d)) + math.log(d / (d + alpha))
                 + log_gamma(k + 1 + a) - log_gamma(k))
    return math.exp(log_value)


def jth_constant(d, alpha, j):
    """Média limite de |x - j-ésimo vizinho|^alpha: v_d^(-alpha/d) Gamma(j+alpha/d) / Gamma(j)."""
    a = alpha / d
    return math.exp(-a * math.log(unit_ball_volume(d)) + log_gamma(j + a) - log_gamma(j))


def knng_constant_by_sum(d, alpha, k):
    """Mesma constante do k-NNG somando as constantes de j = 1..k."""
    d = validate_dimension(d)
    alpha = _validate_alpha(alpha)
    return math.fsum(jth_constant(d, alpha, j) for j in range(1, k + 1))


def jth_constant_by_poisson_sum(d, alpha, j):
    """
    Constante do j-ésimo vizinho pela soma sobre o número de pontos mais próximos.

    v_d^(-alpha/d) (alpha/d) sum_{i<j} Gamma(i+alpha/d) / Gamma(i+1); exige alpha > 0.
    """
    d = validate_dimension(d)
    alpha = _validate_alpha(alpha)
    if alpha == 0:
        raise InvalidParameterError("A forma em soma exige alpha > 0")
    a = alpha / d
    terms = (math.exp(log_gamma(i + a) - log_gamma(i + 1)) for i in range(j))
    return unit_ball_volume(d) ** (-a) * a * math.fsum(terms)


def limit_constant(query):
    """
    Constante limite por ponto para densidade uniforme.

    Args:
        query: LimitQuery com família, d e alpha

    Returns:
        float: constante positiva

    Raises:
        HypothesisError: se a lei limite não cobre os parâmetros
    """
    if not isinstance(query, LimitQuery):
        raise InvalidParameterError("limit_constant espera um LimitQuery")
    query.check_hypotheses()

    family, d, alpha = query.family, query.d, query.alpha
    kind = family.kind
    a = alpha / d

    if kind is FamilyKind.JTH_NNG:
        value = jth_constant(d, alpha, family.j)
    elif kind is FamilyKind.KNNG:
        value = knng_constant(d, alpha, family.k)
    elif kind is FamilyKind.KNNG_UNDIRECTED:
        v_d = unit_ball_volume(d)
        omega_d = union_two_balls_volume(d)
        value = math.gamma(1 + a) * (v_d ** (-a) - 0.5 * v_d * omega_d ** (-1 - a))
    elif kind is FamilyKind.ONG:
        value = d / (d - alpha) * unit_ball_volume(d) ** (-a) * math.gamma(1 + a)
    elif kind is FamilyKind.MDSF:
        # Independe de theta e do sorvedouro na origem
        value = (2.0 / family.order.phi) ** (alpha / 2.0) * math.gamma(1 + alpha / 2.0)
    else:
        value = unit_ball_volume(d) ** (-a) * 2.0 ** (d + alpha - 1) * math.gamma(1 + a)

    logger.debug(f"Constante {family.label} d={d} alpha={alpha}: {value:.12g}")
    return value


def reciprocal_pair_fraction(d):
    """Fração limite de pontos em pares recíprocos de vizinhos mais próximos: v_d / omega_d."""
    return unit_ball_volume(d) / union_two_balls_volume(d)


def reciprocal_edge_expectation(d, alpha):
    """
    Média limite de |x - NN(x)|^alpha restrita a pares recíprocos.

    v_d omega_d^(-1-alpha/d) Gamma(1+alpha/d); em alpha = 0 é a própria fração recíproca.
    """
    d = validate_dimension(d)
    alpha = _validate_alpha(alpha)
    a = alpha / d
    return unit_ball_volume(d) * union_two_balls_volume(d) ** (-1 - a) * math.gamma(1 + a)


def undirected_count_fraction(d):
    """Arestas do grafo não dirigido de 1-NN por ponto no limite: 1 - v_d / (2 omega_d)."""
    return 1.0 - 0.5 * reciprocal_pair_fraction(d)


def expected_minimal_elements(n):
    """Número esperado de elementos minimais de n pontos uniformes sob a ordem estrela (H_n)."""
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidParameterError(f"n deve ser inteiro >= 1 (recebido {n!r})")
    return math.fsum(1.0 / i for i in range(1, int(n) + 1))


def origin_correction_bound(n, alpha):
    """
    Cota para a contribuição das arestas até a origem no MDST com raiz em 0.

    Cada sorvedouro está a no máximo sqrt(2) da origem, e o número esperado de sorvedouros é H_n;
    após o reescalonamento n^(alpha/2 - 1) a cota tende a zero para alpha < 2.
    """
    alpha = _validate_alpha(alpha)
    return 2.0 ** (alpha / 2.0) * float(n) ** (alpha / 2.0 - 1.0) * expected_minimal_elements(n)


def gabriel_rank_edge_probability(d, k):
    """
    Probabilidade de o k-ésimo vizinho de um ponto interior ser vizinho de Gabriel.

    Os k-1 pontos mais próximos são uniformes na bola de raio r_k e cada um evita
    a bola diametral (volume 2^-d da bola) independentemente: (1 - 2^-d)^(k-1).
    """
    d = validate_dimension(d)
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise InvalidParameterError(f"k deve ser inteiro >= 1 (recebido {k!r})")
    return (1.0 - 2.0 ** (-d)) ** (int(k) - 1)
