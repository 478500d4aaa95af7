__author__ = 'max'

import os
import sys
import json
import argparse
from typing import Dict, List, Optional

from witten.errors import WittenError, InvalidInputError
from witten.grid.density import DensityGrid, normalize_density
from witten.data.grid_file import read_grid, write_grid, write_report
from witten.data.densities import AnalyticDensity
from witten.potential import build_potential, potential_alternate_form_check
from witten.solvers.hm1 import weighted_hm1_norm, witten_norm
from witten.embedding import embed, DEFAULT_DEGREE
from witten.experiments import cmd_gaussian_check, cmd_circle, cmd_scaling, cmd_timing, cmd_embed_demo
from witten.experiments.report import echo_config, solver_config

EXIT_OK = 0
EXIT_NON_CONVERGED = 3

# options shared by every subcommand, mapped onto keyword arguments
COMMON_OPTIONS = ('n', 'tau', 'tol', 'max_iter', 'floor')


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--n', type=int, default=None, metavar='N', help='grid points per axis, 2^k + 1')
    common.add_argument('--tau', type=float, default=None, help='heat time of the potential regularisation, mode k of f^1/2 decays by exp(-tau |k|^2)')
    common.add_argument('--tol', type=float, default=None, help='relative residual of the conjugate gradient solve')
    common.add_argument('--max-iter', type=int, default=None, metavar='N', help='iteration cap of the conjugate gradient solve')
    common.add_argument('--floor', type=float, default=None, help='relative positivity floor of the smoothed root density')
    common.add_argument('--out', type=str, default=None, help='output grid file or directory')
    common.add_argument('--json', type=str, default=None, help='path of the json report')
    common.add_argument('--config', type=str, default=None, help='json file of default options')
    return common


def _density_parser() -> argparse.ArgumentParser:
    density = argparse.ArgumentParser(add_help=False)
    density.add_argument('--no-normalize', action='store_false', dest='normalize',
                         help='use the grid values as they are instead of rescaling them to unit mass')
    return density


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    density = _density_parser()
    parser = argparse.ArgumentParser(description='Linearised Wasserstein distances through the Witten Laplacian')
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    norm = commands.add_parser('norm', parents=[common, density], help='weighted H^-1 norm of (f - g) / f_tau')
    norm.add_argument('--f', type=str, required=True, help='grid file of the reference density')
    norm.add_argument('--g', type=str, required=True, help='grid file of the second density')

    potential = commands.add_parser('potential', parents=[common, density], help='write the regularised potential as a grid')
    potential.add_argument('--f', type=str, required=True, help='grid file of the density')
    potential.add_argument('--binary', action='store_true', help='write the binary grid format')

    emb = commands.add_parser('embed', parents=[common, density], help='write the embedded field of g with respect to f')
    emb.add_argument('--f', type=str, required=True, help='grid file of the reference density')
    emb.add_argument('--g', type=str, required=True, help='grid file of the density to embed')
    emb.add_argument('--degree', type=int, default=None, help='Chebyshev degree (default: %d)' % DEFAULT_DEGREE)
    emb.add_argument('--binary', action='store_true', help='write the binary grid format')

    make = commands.add_parser('make-density', parents=[common], help='sample an analytic density on the grid')
    make.add_argument('--kind', choices=['gaussian', 'striped'], default='gaussian', help='analytic density')
    make.add_argument('--params', type=str, default=None, help='json object of density parameters')
    make.add_argument('--shift', type=float, nargs=2, default=None, metavar='V', help='translation, samples f(x + v)')
    make.add_argument('--binary', action='store_true', help='write the binary grid format')

    experiment = commands.add_parser('experiment', help='reproducible numerical experiments')
    experiments = experiment.add_subparsers(dest='experiment')
    experiments.required = True

    gaussian = experiments.add_parser('gaussian', parents=[common], help='norm of a Gaussian pair against analytic W2')
    gaussian.add_argument('--g-equals-f', action='store_true', default=None, help='use g = f')

    circle = experiments.add_parser('circle', parents=[common], help='images of the circle of directions under three metrics')
    circle.add_argument('--kind', choices=['translate', 'variance'], default=None, help='perturbation (default: translate)')
    circle.add_argument('--density', choices=['gaussian', 'striped'], default=None, help='base density (default: striped)')
    circle.add_argument('--epsilon', type=float, default=None, help='perturbation size (default: 5e-3)')
    circle.add_argument('--d', type=int, default=None, help='number of directions (default: 32)')
    circle.add_argument('--threads', type=int, default=None, dest='max_threads', help='maximum worker threads')

    scaling = experiments.add_parser('scaling', parents=[common], help='remainder scaling of |W2 - norm| in epsilon')
    scaling.add_argument('--direction', type=float, nargs=4, default=None, metavar='D', help='(mean_1, mean_2, sigma_1, sigma_2) direction')
    scaling.add_argument('--epsilons', type=float, nargs='+', default=None, metavar='E', help='strictly decreasing step sizes')

    timing = experiments.add_parser('timing', parents=[common], help='wall time of the solver')
    timing.add_argument('--repeats', type=int, default=None, help='number of timed solves (default: 128)')

    demo = experiments.add_parser('embed-demo', parents=[common], help='embedding distance of a Gaussian triple')
    demo.add_argument('--degree', type=int, default=None, help='Chebyshev degree (default: %d)' % DEFAULT_DEGREE)
    demo.add_argument('--h-equals-g', action='store_true', default=None, help='use h = g')
    return parser


def _options(args, names: List[str]) -> Dict:
    """options from the --config file, overridden by the ones given on the command line"""
    options = {}
    if args.config is not None:
        if not os.path.exists(args.config):
            raise InvalidInputError('config file not found: %s' % args.config)
        options.update(json.load(open(args.config, 'r')))
    for name in names:
        value = getattr(args, name, None)
        if value is not None:
            options[name] = value
    unknown = set(options.keys()) - set(names)
    if len(unknown) > 0:
        raise InvalidInputError('unknown options: %s' % sorted(unknown))
    return options


def _emit(args, report: Dict):
    if args.json is not None:
        write_report(args.json, report)
    else:
        print(json.dumps(report, indent=2))


def _read_density(path: str, normalize=True) -> DensityGrid:
    f = DensityGrid(read_grid(path))
    return normalize_density(f) if normalize else f


def _require_out(args):
    if args.out is None:
        raise InvalidInputError('--out is required for %s' % args.command)


def run_norm(args) -> int:
    options = _options(args, list(COMMON_OPTIONS))
    cfg = solver_config(options.get('tau', 1e-3), options.get('tol'), options.get('max_iter'), options.get('floor'))
    f = _read_density(args.f, args.normalize)
    g = _read_density(args.g, args.normalize)
    result = weighted_hm1_norm(f, g, cfg)
    print('norm: {:.6e}, iterations: {}, residual: {:.2e}, v_max: {:.4g}'.format(
        result.value, result.iterations, result.residual, result.v_max))
    report = result.to_dict()
    report['config'] = echo_config(f.n, cfg)
    _emit(args, report)
    return EXIT_OK if result.converged else EXIT_NON_CONVERGED


def run_potential(args) -> int:
    _require_out(args)
    options = _options(args, list(COMMON_OPTIONS))
    cfg = solver_config(options.get('tau', 1e-3), floor=options.get('floor'))
    f = _read_density(args.f, args.normalize)
    pot = build_potential(f, tau=cfg.tau, floor=cfg.floor)
    write_grid(args.out, pot.v, binary=args.binary)
    report = {'config': echo_config(f.n, cfg), 'v_max': pot.v_max,
              'alternate_form_gap': potential_alternate_form_check(f, tau=cfg.tau, floor=cfg.floor)}
    print('v_max: {:.4g}, alternate form gap: {:.2e}'.format(report['v_max'], report['alternate_form_gap']))
    _emit(args, report)
    return EXIT_OK


def run_embed(args) -> int:
    _require_out(args)
    options = _options(args, list(COMMON_OPTIONS) + ['degree'])
    cfg = solver_config(options.get('tau', 1e-3), options.get('tol'), options.get('max_iter'), options.get('floor'))
    degree = options.get('degree', DEFAULT_DEGREE)
    f = _read_density(args.f, args.normalize)
    g = _read_density(args.g, args.normalize)
    pot = build_potential(f, tau=cfg.tau, floor=cfg.floor)
    field = embed(f, g, cfg, degree=degree, pot=pot)
    solver = witten_norm(pot, f.values - g.values, cfg)
    norm = field.norm()
    gap = abs(norm - solver.value) / solver.value if solver.value > 0 else norm
    write_grid(args.out, field.phi, binary=args.binary)
    meta = {'config': echo_config(f.n, cfg, degree=degree), 'tau': field.tau, 'degree': field.cheb_degree,
            'spectral_bound': field.spectral_bound, 'embedding_norm': norm, 'solver_norm': solver.value,
            'isometry_gap': gap, 'iterations': field.iterations, 'residual': field.residual}
    write_report(args.out + '.json', meta)
    print('embedding norm: {:.6e}, solver norm: {:.6e}, isometry gap: {:.2e}'.format(norm, solver.value, gap))
    if args.json is not None:
        write_report(args.json, meta)
    return EXIT_OK


def run_make_density(args) -> int:
    _require_out(args)
    options = _options(args, ['n'])
    try:
        params = json.loads(args.params) if args.params is not None else {}
    except ValueError as e:
        raise InvalidInputError('--params is not valid json: %s' % e)
    if not isinstance(params, dict):
        raise InvalidInputError('--params should be a json object, got: %s' % args.params)
    density = AnalyticDensity.by_name(args.kind).from_params(params)
    if args.shift is not None:
        density = density.translated(args.shift)
    grid = density.grid(options.get('n', 257))
    write_grid(args.out, grid.values, binary=args.binary)
    print('{} written to {}'.format(density, args.out))
    return EXIT_OK


def run_experiment(args) -> int:
    name = args.experiment
    if name == 'gaussian':
        report = cmd_gaussian_check(**_options(args, list(COMMON_OPTIONS) + ['g_equals_f']))
        print('norm: {:.6e}, W2: {:.6e}, gap: {:.2e}, iterations: {}'.format(
            report['norm'], report['w2'], report['gap'], report['iterations']))
        _emit(args, report)
        return EXIT_OK if report['converged'] else EXIT_NON_CONVERGED
    elif name == 'circle':
        options = _options(args, list(COMMON_OPTIONS) + ['kind', 'density', 'epsilon', 'd', 'max_threads', 'params'])
        results = cmd_circle(out=args.out, **options)
        for result in results.values():
            print('{}: ratio {:.4f}, radii [{:.4e}, {:.4e}]'.format(
                result.metric, result.ratio, result.radii.min(), result.radii.max()))
        if args.json is not None:
            write_report(args.json, {'sets': [result.summary() for result in results.values()]})
        return EXIT_OK
    elif name == 'scaling':
        result = cmd_scaling(**_options(args, list(COMMON_OPTIONS) + ['direction', 'epsilons']))
        for eps, value, w2, err in result.rows:
            print('epsilon: {:.1e}, norm: {:.6e}, W2: {:.6e}, error: {:.3e}'.format(eps, value, w2, err))
        print('slope: {:.3f}'.format(result.slope))
        _emit(args, result.to_dict())
        return EXIT_OK
    elif name == 'timing':
        report = cmd_timing(**_options(args, list(COMMON_OPTIONS) + ['repeats']))
        print('mean: {:.4f}s, median: {:.4f}s, iterations: {}, v_max: {:.4g}'.format(
            report['mean_time'], report['median_time'], report['iterations'], report['v_max']))
        _emit(args, report)
        return EXIT_OK
    elif name == 'embed-demo':
        report = cmd_embed_demo(**_options(args, list(COMMON_OPTIONS) + ['degree', 'h_equals_g']))
        print('distance: {:.6e}, W2: {:.6e}, gap: {:.2e}, isometry gap: {:.2e}'.format(
            report['distance'], report['w2'], report['gap'], report['isometry_gap']))
        _emit(args, report)
        return EXIT_OK if report['converged'] else EXIT_NON_CONVERGED
    else:
        raise InvalidInputError('unknown experiment: %s' % name)


COMMANDS = {'norm': run_norm, 'potential': run_potential, 'embed': run_embed,
            'make-density': run_make_density, 'experiment': run_experiment}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except WittenError as e:
        print('error: {}'.format(e), file=sys.stderr)
        return e.exit_code
