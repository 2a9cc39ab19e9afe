"""
Interface de linha de comando: constant, generate, build, simulate e report.

Códigos de saída: 0 sucesso, 2 erro de uso ou de domínio, 1 erro interno.
"""

import argparse
import json
import logging
import sys

from utils.core.commands import (
    GRAPH_CHOICES, cmd_build, cmd_constant, cmd_generate, cmd_report, cmd_simulate
)
from utils.core.errors import InvalidParameterError
from utils.config.constants import default_threads
from utils.config.logging import get_logger, set_level
from utils.data.io import json_safe

logger = get_logger("CLI")

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2


def _add_family_arguments(parser):
    parser.add_argument('--graph', required=True, choices=GRAPH_CHOICES, help="família do grafo")
    parser.add_argument('--j', type=int, help="posto do vizinho (nng)")
    parser.add_argument('--k', type=int, help="número de vizinhos (knng, knng-undirected)")
    parser.add_argument('--order', choices=('star',), help="ordem estrela: theta = phi = pi/2 (mdsf)")
    parser.add_argument('--theta', type=float, help="ângulo do raio de fronteira em radianos (mdsf)")
    parser.add_argument('--phi', type=float, help="abertura do cone em radianos (mdsf)")
    parser.add_argument('--with-origin', action='store_true', help="adiciona a origem como sorvedouro (mdsf, só na ordem estrela)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog='nnlln',
        description="Leis dos grandes números para grafos de vizinhos mais próximos.")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('--verbose', action='store_true', help="log em nível DEBUG")
    verbosity.add_argument('--quiet', action='store_true', help="log apenas a partir de WARNING")
    subparsers = parser.add_subparsers(dest='command', required=True)

    constant = subparsers.add_parser('constant', help="constante limite em forma fechada")
    _add_family_arguments(constant)
    constant.add_argument('--d', type=int, default=2, help="dimensão (padrão 2)")
    constant.add_argument('--alpha', type=float, required=True, help="expoente do peso")
    constant.set_defaults(handler=cmd_constant)

    generate = subparsers.add_parser('generate', help="gera pontos i.i.d. em CSV")
    generate.add_argument('--n', type=int, required=True)
    generate.add_argument('--d', type=int, required=True)
    generate.add_argument('--density', default='uniform', help="'uniform' ou arquivo JSON de caixas")
    generate.add_argument('--seed', type=int, required=True)
    generate.add_argument('--out', required=True)
    generate.set_defaults(handler=cmd_generate)

    build = subparsers.add_parser('build', help="constrói o grafo de um CSV de pontos")
    _add_family_arguments(build)
    build.add_argument('--points', required=True)
    build.add_argument('--out', required=True)
    build.set_defaults(handler=cmd_build)

    simulate = subparsers.add_parser('simulate', help="verificação Monte Carlo da lei limite")
    _add_family_arguments(simulate)
    simulate.add_argument('--d', type=int, default=2, help="dimensão (padrão 2)")
    simulate.add_argument('--alpha', type=float, required=True)
    simulate.add_argument('--n-schedule', required=True, help="tamanhos separados por vírgula, ex.: 1000,2000,4000")
    simulate.add_argument('--trials', type=int, required=True)
    simulate.add_argument('--seed', type=int, required=True)
    simulate.add_argument('--density', default='uniform')
    simulate.add_argument('--p-modes', default='1,2', help="erros L^p estimados (subconjunto de 1,2)")
    simulate.add_argument('--allowance', type=float, help="substitui a folga sistemática da família")
    simulate.add_argument('--threads', type=int, default=default_threads(), help="workers (padrão: NNLLN_THREADS ou 1)")
    simulate.add_argument('--out', help="CSV do relatório (padrão: output/reports/)")
    simulate.set_defaults(handler=cmd_simulate)

    report = subparsers.add_parser('report', help="peso total de um CSV de arestas")
    report.add_argument('--edges', required=True)
    report.add_argument('--alpha', type=float, required=True)
    report.add_argument('--points', help="CSV de pontos para reescalonar e conferir comprimentos")
    report.set_defaults(handler=cmd_report)

    return parser


def main(argv=None):
    """Ponto de entrada; devolve o código de saída."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (None, 0) else EXIT_USAGE

    if args.verbose:
        set_level(logging.DEBUG)
    elif args.quiet:
        set_level(logging.WARNING)

    if getattr(args, 'threads', 1) < 1:
        logger.error("--threads deve ser >= 1")
        return EXIT_USAGE

    try:
        payload = args.handler(args)
    except InvalidParameterError as e:
        logger.error(str(e))
        return EXIT_USAGE
    except Exception as e:
        logger.exception(f"[!] ERRO interno em '{args.command}': {e}")
        return EXIT_INTERNAL

    if payload is not None:
        sys.stdout.write(json.dumps(json_safe(payload), ensure_ascii=False) + '\n')
    return EXIT_OK
