"""
Hierarquia de exceções da aplicação.

Tudo que deriva de InvalidParameterError é erro de uso (código de saída 2 na CLI);
o restante é tratado como erro interno (código 1).
"""


class NNLLNError(Exception):
    """Base de todos os erros do pacote."""


class InvalidParameterError(NNLLNError, ValueError):
    """Parâmetro fora do domínio da operação."""


class HypothesisError(InvalidParameterError):
    """Parâmetros violam a hipótese de uma lei dos grandes números."""


class FormatError(InvalidParameterError):
    """Arquivo de entrada (CSV/JSON) malformado."""
