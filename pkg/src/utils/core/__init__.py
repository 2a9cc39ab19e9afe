"""Funcionalidades centrais: CLI e erros."""

from .errors import NNLLNError, InvalidParameterError, HypothesisError, FormatError
