"""Constantes e logging do pacote."""

from .logging import get_logger, set_level
