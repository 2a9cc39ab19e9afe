"""
Implementação dos subcomandos da CLI.

Cada função recebe o Namespace do argparse e devolve o payload JSON impresso em stdout.
"""

import math

import numpy as np

from utils.core.errors import InvalidParameterError
from utils.config.logging import get_logger
from utils.data.io import read_density, read_edges, read_points, write_edges, write_points
from utils.data.points import append_origin, generate
from utils.graphs.builders import build_graph
from utils.graphs.functionals import rescaled_weight, total_weight
from utils.limits.constants import limit_constant
from utils.limits.families import FamilyKind, GraphFamily, LimitQuery
from utils.limits.special import unit_ball_volume, union_two_balls_volume
from utils.simulation.config import SimConfig
from utils.simulation.report import meets_target, save_report, trend_check
from utils.simulation.runner import run
from utils.spatial.cones import ConeOrder
from utils.spatial.kdindex import euclidean

logger = get_logger("CLI")

GRAPH_CHOICES = ('nng', 'knng', 'knng-undirected', 'ong', 'mdsf', 'gabriel')


def _reject(args, names, graph):
    for name in names:
        if getattr(args, name, None) not in (None, False):
            flag = '--' + name.replace('_', '-')
            raise InvalidParameterError(f"{flag} não se aplica a --graph {graph}")


def family_from_args(args):
    """Monta o GraphFamily a partir de --graph e das flags da família."""
    graph = args.graph
    cone_flags = ('theta', 'phi', 'order', 'with_origin')

    if graph == 'nng':
        _reject(args, ('k',) + cone_flags, graph)
        return GraphFamily.jth_nng(1 if args.j is None else args.j)
    if graph in ('knng', 'knng-undirected'):
        _reject(args, ('j',) + cone_flags, graph)
        k = 1 if args.k is None else args.k
        return GraphFamily.knng(k) if graph == 'knng' else GraphFamily.knng_undirected(k)
    if graph in ('ong', 'gabriel'):
        _reject(args, ('j', 'k') + cone_flags, graph)
        return GraphFamily.ong() if graph == 'ong' else GraphFamily.gabriel()

    _reject(args, ('j', 'k'), graph)
    if args.order == 'star':
        if args.theta is not None or args.phi is not None:
            raise InvalidParameterError("--order star já fixa theta = phi = pi/2")
        order = ConeOrder.star()
    else:
        # Sem --theta/--phi vale a ordem estrela; o sorvedouro na origem é validado em GraphFamily
        theta = math.pi / 2.0 if args.theta is None else args.theta
        phi = math.pi / 2.0 if args.phi is None else args.phi
        order = ConeOrder(theta, phi)
    return GraphFamily.mdsf(order, with_origin_sink=bool(args.with_origin))


def _family_params(family):
    params = {}
    if family.j is not None:
        params['j'] = family.j
    if family.k is not None:
        params['k'] = family.k
    if family.order is not None:
        params.update(theta=family.order.theta, phi=family.order.phi, with_origin=family.with_origin_sink)
    return params


def cmd_constant(args):
    family = family_from_args(args)
    query = LimitQuery(family, args.d, args.alpha)
    payload = {
        'family': family.label,
        'd': query.d,
        'alpha': query.alpha,
        'params': _family_params(family),
        'limit': limit_constant(query),
        'v_d': unit_ball_volume(query.d),
    }
    if family.kind is FamilyKind.KNNG_UNDIRECTED:
        payload['omega_d'] = union_two_balls_volume(query.d)
    return payload


def cmd_generate(args):
    density = read_density(args.density)
    points = generate(args.n, args.d, density, args.seed)
    path = write_points(points, args.out)
    return {'out': str(path), 'n': points.n, 'd': points.d, 'density': density.label, 'seed': args.seed}


def cmd_build(args):
    family = family_from_args(args)
    points = read_points(args.points)
    if family.kind is FamilyKind.MDSF and points.d != 2:
        raise InvalidParameterError(f"MDSF exige pontos em d = 2 (arquivo tem d = {points.d})")
    graph = build_graph(points, family)
    path = write_edges(graph, args.out)
    logger.info(f"{family.label}: {graph.edge_count} aresta(s) sobre {graph.n} vértice(s)")
    return {
        'family': family.label,
        'n': graph.n,
        'd': points.d,
        'edges': graph.edge_count,
        'directed': graph.directed,
        'origin_appended': graph.n == points.n + 1,
        'out': str(path),
    }


def parse_int_list(text, name):
    """'1000,2000,4000' -> (1000, 2000, 4000)."""
    try:
        values = tuple(int(part) for part in str(text).split(',') if part.strip())
    except ValueError as e:
        raise InvalidParameterError(f"{name} deve ser uma lista de inteiros separados por vírgula: {text!r}") from e
    if not values:
        raise InvalidParameterError(f"{name} vazio")
    return values


def cmd_simulate(args):
    family = family_from_args(args)
    cfg = SimConfig(
        family=family,
        d=args.d,
        alpha=args.alpha,
        n_schedule=parse_int_list(args.n_schedule, '--n-schedule'),
        trials=args.trials,
        seed=args.seed,
        density=read_density(args.density),
        p_modes=frozenset(parse_int_list(args.p_modes, '--p-modes')),
    )
    report = run(cfg, n_jobs=args.threads)
    csv_path, json_path = save_report(report, args.out, seed=cfg.seed)

    allowance = cfg.allowance if args.allowance is None else args.allowance
    has_target = report.target is not None
    last = report.last
    return {
        'family': report.family,
        'd': cfg.d,
        'alpha': cfg.alpha,
        'density': cfg.density.label,
        'seed': cfg.seed,
        'target': report.target,
        'largest_n': last.n,
        'mean': last.mean,
        'stderr': last.stderr,
        'abs_dev': last.abs_dev,
        'allowance': allowance,
        'meets_target': meets_target(report, allowance) if has_target else None,
        'trend_check': trend_check(report) if has_target and len(report.rows) >= 3 else None,
        'report': str(csv_path),
        'json': str(json_path),
    }


def cmd_report(args):
    src, dst, length = read_edges(args.edges)
    payload = {
        'edges': int(src.shape[0]),
        'alpha': args.alpha,
        'total_weight': total_weight(length, args.alpha),
    }
    if args.points is not None:
        points = read_points(args.points)
        top = int(max(src.max(), dst.max())) if src.size else -1
        # Arestas de 'build --with-origin' indexam a origem como vértice 0
        origin_prepended = top == points.n
        coords = append_origin(points).coords if origin_prepended else points.coords
        if top >= coords.shape[0]:
            raise InvalidParameterError(f"Arestas referem vértices fora do arquivo de pontos (n = {points.n})")
        recomputed = euclidean(coords[src], coords[dst])
        payload.update(
            n=points.n,
            d=points.d,
            origin_prepended=origin_prepended,
            rescaled_weight=rescaled_weight(length, args.alpha, points.n, points.d),
            max_length_error=float(np.max(np.abs(recomputed - length))) if src.size else 0.0,
        )
    return payload
