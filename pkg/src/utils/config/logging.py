"""
Logging do pacote: um único logger 'nnlln' em stderr, com prefixo de contexto por módulo.

stdout fica reservado para o payload JSON da CLI.
"""

import logging

from utils.config.constants import LOG_LEVEL, LOGGER_NAME


class ContextLogger:
    """Adaptador que prefixa as mensagens com [CONTEXTO] (ex.: [SIM], [GRAPHS])."""

    def __init__(self, base_logger, context="NNLLN"):
        self.base_logger = base_logger
        self.context = context

    def _log(self, level, message, **kwargs):
        if self.base_logger.isEnabledFor(level):
            self.base_logger.log(level, f"[{self.context}] {message}", **kwargs)

    @property
    def debug_enabled(self):
        """True quando mensagens DEBUG serão emitidas (evita montar textos caros à toa)."""
        return self.base_logger.isEnabledFor(logging.DEBUG)

    def debug(self, message):
        self._log(logging.DEBUG, message)

    def info(self, message):
        self._log(logging.INFO, message)

    def warning(self, message):
        self._log(logging.WARNING, message)

    def error(self, message):
        self._log(logging.ERROR, message)

    def exception(self, message):
        self._log(logging.ERROR, message, exc_info=True)


def _base_logger():
    base_logger = logging.getLogger(LOGGER_NAME)
    if not base_logger.handlers:
        base_logger.setLevel(LOG_LEVEL)
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter('[%(levelname)s] %(message)s'))
        base_logger.addHandler(handler)
        base_logger.propagate = False
    return base_logger


def set_level(level):
    """Ajusta o nível do logger do pacote (flags --verbose/--quiet)."""
    _base_logger().setLevel(level)


def get_logger(context="NNLLN"):
    """
    Logger do pacote com o contexto informado.

    Args:
        context: Rótulo exibido entre colchetes no início de cada mensagem
    """
    return ContextLogger(_base_logger(), context)
