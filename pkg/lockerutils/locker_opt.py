"""
Command line driver of lockerutils: generate, solve, export, sweep and compare.

It is intended to be called like:

.. code-block:: bash

    python -m lockerutils.locker_opt gen   --zones 200 --lockers 100 --side 30 --seed 42 --out ds1.json
    python -m lockerutils.locker_opt solve --instance ds1.json --gamma 2 --cost 500 --gap 0.01 --out ds1_result.json
    python -m lockerutils.locker_opt sweep --instance ds1.json --vary xi --values 0.05,0.1,0.5,1 --cost 500 --out xi.csv

or through the ``locker-opt`` console script installed with the package.

Exit codes:

    0   success
    1   the solver stopped on a time or node limit, outputs are valid
    2   usage error
    3   invalid data, unreadable file, failed audit or failed sweep point
"""

import datetime
import hashlib
import json
import math
import os
import sys
import time

EXIT_OK = 0
EXIT_LIMIT = 1
EXIT_USAGE = 2
EXIT_DATA = 3

LOGGER_NAME = 'lockerutils.locker_opt'

_FORMS = ('ipd', 'ipa', 'micqp-d', 'micqp-a')
_EXPORT_FORMATS = ('lp', 'conic', 'json', 'dot')
_COMMENT = {'lp': '\\', 'conic': '#', 'dot': '//'}
_CHOICES = {'--log_level': ('DEBUG', 'INFO', 'WARNING', 'ERROR'),
            '--method': ('bb', 'bruteforce'),
            '--form': _FORMS,
            '--format': _EXPORT_FORMATS,
            '--vary': ('gamma', 'alpha', 'xi', 'f')}


def _setup_logging(args):
    """setup logger and handlers

    Messages of every lockerutils module, and captured warnings, are written to
    stdout and to --log_file when it is given. Handlers installed by a previous
    call in the same interpreter are replaced.
    """

    import logging
    from ._py_tools import output_dir

    targets = [logging.getLogger('lockerutils'), logging.getLogger('py.warnings')]
    for logger in targets:
        for handler in list(logger.handlers):
            if getattr(handler, 'locker_opt', False):
                logger.removeHandler(handler)
                handler.close()

    logging.captureWarnings(True)
    #handlers
    handlers = [logging.StreamHandler(sys.stdout)]
    if args.log_file is not None:
        output_dir(args.log_file)
        handlers.append(logging.FileHandler(args.log_file, 'w'))
    #format
    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    for handler in handlers:
        handler.setLevel(args.log_level)
        handler.setFormatter(formatter)
        handler.locker_opt = True
        for logger in targets:
            logger.addHandler(handler)
    for logger in targets:
        logger.setLevel(args.log_level)

    return logging.getLogger(LOGGER_NAME)


def _jsonable(value):
    """ Values of the argparse namespace as JSON, infinities as 'inf' """
    if isinstance(value, float):
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        if math.isnan(value):
            return None
        return value
    if isinstance(value, (list, tuple)):
        return [_jsonable(val) for val in value]
    if isinstance(value, dict):
        return {key: _jsonable(val) for key, val in value.items()}
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


def _manifest(argv, args, instance=None, solve_config=None):
    """ Record of what produced an output file """

    import shlex
    from . import __version__
    from .instance_tools import instance_hash

    config = {name: _jsonable(value) for name, value in sorted(vars(args).items())}
    if solve_config is not None:
        config['solve_config'] = _jsonable(solve_config.to_dict())
    return {'command_line': 'locker-opt ' + ' '.join(shlex.quote(arg) for arg in argv),
            'config': config,
            'instance_hash': None if instance is None else instance_hash(instance),
            'version': __version__,
            'timestamp': datetime.datetime.now(datetime.timezone.utc).isoformat(timespec='seconds')}


def manifest_hash(manifest):
    """ sha256 of the canonical JSON of a manifest, timestamp excluded """
    stable = {key: val for key, val in manifest.items() if key != 'timestamp'}
    return hashlib.sha256(json.dumps(stable, sort_keys=True).encode('utf-8')).hexdigest()


def _write_text(path, text):
    from ._py_tools import output_dir
    output_dir(path)
    with open(path, 'w', encoding='utf-8', newline='\n') as fid:
        fid.write(text)


def _solve_config(args, threads=None):
    from .solver_tools import SolveConfig
    return SolveConfig(gap_tolerance=args.gap,
                       time_limit_seconds=args.time_limit,
                       node_limit=args.node_limit,
                       threads=args.threads if threads is None else threads)


def _load_instance(args):
    from .instance_tools import load
    instance = load(args.instance)
    if getattr(args, 'gamma', None) is not None:
        instance = instance.with_gamma(args.gamma)
    return instance


def audit(instance, costs, record):
    """ Recompute the profit of a solve record and check its bound and gap

    Args:
        instance:  the :class:`Instance` that was solved
        costs:     facility costs used by the solver
        record:    dictionary written by :meth:`SolveResult.to_dict`

    Returns:
        list of problems found, empty when the record is consistent
    """

    from .choice_tools import LocationDecision, RestrictionDecision, profit
    from .solver_tools import relative_gap

    location = LocationDecision(record['x'])
    breakdown = profit(instance, location, RestrictionDecision(record['y']), costs)
    scale = max(1., abs(breakdown.profit))
    problems = []
    if abs(breakdown.profit - record['profit']) > 1e-9 * scale:
        problems.append('recomputed profit ' + str(breakdown.profit) + ' differs from reported profit ' + str(record['profit']))
    if record['upper_bound'] < record['profit'] - 1e-9 * scale:
        problems.append('upper bound ' + str(record['upper_bound']) + ' is below the profit ' + str(record['profit']))
    if abs(relative_gap(record['upper_bound'], record['profit']) - record['gap']) > 1e-12:
        problems.append('reported gap ' + str(record['gap']) + ' does not match |bound - profit| / |bound|')
    return problems


def cmd_gen(args, argv, logger):
    """ Generate a synthetic instance and write it to --out """

    from dataclasses import replace
    from .instance_tools import GeneratorSpec, generate, save

    spec = GeneratorSpec(zone_count=args.zones,
                         locker_count=args.lockers,
                         square_side=args.side,
                         demand_range=(args.demand_lo, args.demand_hi),
                         alpha=args.alpha,
                         xi=args.xi,
                         seed=args.seed,
                         gamma=args.gamma)
    instance = generate(spec)
    manifest = _manifest(argv, args)
    mhash = manifest_hash(manifest)
    logger.info('manifest: ' + json.dumps(manifest, sort_keys=True))
    save(replace(instance, meta={**instance.meta, 'manifest_hash': mhash}), args.out)
    return EXIT_OK


def cmd_solve(args, argv, logger):
    """ Solve an instance, print a summary and write the result to --out """

    from ._py_tools import cost_vector
    from .eval_tools import solve
    from .solver_tools import TIME_LIMIT, NODE_LIMIT

    instance = _load_instance(args)
    cost = cost_vector(instance.n, args.cost, default=instance.cost)
    config = _solve_config(args)
    manifest = _manifest(argv, args, instance, config)
    mhash = manifest_hash(manifest)

    result = solve(instance, cost, config, args.method)
    record = result.to_dict()

    logger.info('')
    logger.info('status      = ' + result.status)
    logger.info('profit      = ' + str(result.profit))
    logger.info('revenue R   = ' + str(result.revenue))
    logger.info('lockers #F  = ' + str(result.facility_count) + ' ' + str(record['open_lockers']))
    logger.info('upper bound = ' + str(result.upper_bound))
    logger.info('gap         = ' + str(result.gap))
    logger.info('nodes       = ' + str(result.nodes_explored))
    logger.info('time        = ' + '{:.3f}'.format(result.wall_time_seconds) + ' s')
    logger.info('')

    if args.out is not None:
        output = {'manifest': manifest,
                  'manifest_hash': mhash,
                  'result': record,
                  'wall_time_s': result.wall_time_seconds}
        _write_text(args.out, json.dumps(output, indent=1) + '\n')
        logger.info('result written to ' + args.out)
        with open(args.out, 'r', encoding='utf-8') as fid:
            record = json.load(fid)['result']

    if args.seed_check:
        problems = audit(instance, cost, record)
        if problems:
            for problem in problems:
                logger.error('audit failed: ' + problem)
            return EXIT_DATA
        logger.info('audit passed: profit, bound and gap verified from x and y')

    if result.status in (TIME_LIMIT, NODE_LIMIT):
        return EXIT_LIMIT
    return EXIT_OK


def cmd_export(args, argv, logger):
    """ Write a formulation, or the dominance graph of one zone, to --out """

    from .errors import ValidationError
    from . import graph_tools, model_tools

    instance = _load_instance(args)
    manifest = _manifest(argv, args, instance)
    mhash = manifest_hash(manifest)

    if args.format == 'dot':
        if not 1 <= args.zone <= instance.m:
            raise ValidationError('zone', 'zone must be between 1 and ' + str(instance.m) + ', got ' + str(args.zone))
        text = graph_tools.to_dot(graph_tools.build(instance, args.zone - 1)) + '\n'
    else:
        if args.form == 'ipd':
            formulation = model_tools.build_ip_d(instance, args.cost, with_paths=args.paths, extra_paths=args.extra_paths)
        elif args.form == 'ipa':
            formulation = model_tools.build_ip_a(instance, args.cost, extra_paths=args.extra_paths)
        elif args.form == 'micqp-d':
            formulation = model_tools.build_micqp(instance, args.cost, dominance_block=model_tools.DDC)
        else:
            formulation = model_tools.build_micqp(instance, args.cost, dominance_block=model_tools.ADC_PATH,
                                                  extra_paths=args.extra_paths)
        text = model_tools.export(formulation, args.format)

    if args.format == 'json':
        doc = json.loads(text)
        doc['manifest'] = manifest
        doc['manifest_hash'] = mhash
        text = json.dumps(doc, indent=1) + '\n'
    else:
        text = _COMMENT[args.format] + ' manifest_hash=' + mhash + '\n' + text

    _write_text(args.out, text)
    logger.info(args.format + ' export written to ' + args.out)
    return EXIT_OK


def _sweep_base(args):
    from .instance_tools import GeneratorSpec
    if args.instance is not None:
        return _load_instance(args)
    spec = dict(args.spec)
    lo = spec.pop('demand_lo', 1.)
    hi = spec.pop('demand_hi', 1000.)
    return GeneratorSpec(zone_count=spec.pop('zones', 40),
                         locker_count=spec.pop('lockers', 20),
                         square_side=spec.pop('side', 30.),
                         demand_range=(lo, hi),
                         alpha=spec.pop('alpha', 1.),
                         xi=spec.pop('xi', 1.),
                         seed=spec.pop('seed', 0),
                         gamma=spec.pop('gamma', math.inf))


def _limit_exit(statuses):
    from .solver_tools import TIME_LIMIT, NODE_LIMIT
    from .eval_tools.sweep import ERROR
    if ERROR in statuses:
        return EXIT_DATA
    if TIME_LIMIT in statuses or NODE_LIMIT in statuses:
        return EXIT_LIMIT
    return EXIT_OK


def cmd_sweep(args, argv, logger):
    """ Solve a parameter sweep and write one CSV row per value """

    from .eval_tools import sweep, write_csv
    from .instance_tools import GeneratorSpec, generate

    base = _sweep_base(args)
    if isinstance(base, GeneratorSpec):
        base = generate(base)
    # points run in parallel, each point on one thread
    config = _solve_config(args, threads=1)
    manifest = _manifest(argv, args, base, config)
    mhash = manifest_hash(manifest)

    records = sweep(base, args.vary, args.values, args.cost, config,
                    method=args.method, threads=args.threads, with_metrics=args.metrics)
    for rec in records:
        logger.info(rec.param_name + '=' + str(rec.param_value) + '  profit=' + str(rec.profit)
                    + '  R=' + str(rec.revenue) + '  #F=' + str(rec.facility_count) + '  ' + rec.status)
    write_csv(records, args.out, manifest_hash=mhash)
    return _limit_exit([rec.status for rec in records])


def cmd_compare(args, argv, logger):
    """ Compare BNL, TLM and MNL optima and write one CSV row per gamma """

    from .eval_tools import compare_models, write_csv

    instance = _load_instance(args)
    config = _solve_config(args)
    manifest = _manifest(argv, args, instance, config)
    mhash = manifest_hash(manifest)

    records = compare_models(instance, args.gammas, args.cost, config, method=args.method)
    for rec in records:
        logger.info(rec.gamma_label + '  profit=' + str(rec.profit) + '  R=' + str(rec.revenue)
                    + '  #F=' + str(rec.facility_count) + '  delta=' + str(rec.delta_percent)
                    + '%  rel_loss=' + str(rec.rel_loss_pct) + '%')
    write_csv(records, args.out, manifest_hash=mhash)
    return _limit_exit([rec.status for rec in records])


_COMMANDS = {'gen': cmd_gen,
             'solve': cmd_solve,
             'export': cmd_export,
             'sweep': cmd_sweep,
             'compare': cmd_compare}


def main(argv=None):
    """ Entry point of locker-opt

    Args:
        argv:  command line arguments without the program name, sys.argv[1:] by default

    Returns:
        the exit code

    Argument description:

    .. argparse::
        :module: lockerutils.locker_opt
        :func: _define_parser
        :prog: locker-opt
    """

    from .errors import LockerError

    if argv is None:
        argv = sys.argv[1:]
    argv = list(argv)

    parser = _define_parser()
    args = parser.parse_args(argv)

    logger = _setup_logging(args)

    #log header
    logger.info('executing locker-opt ' + args.command)
    logger.info('After parsing, input arguments are:')
    for arg in vars(args):
        logger.info(arg + ' = ' + str(getattr(args, arg)))
    logger.info('')

    time_start = time.monotonic()
    try:
        code = _COMMANDS[args.command](args, argv, logger)
    except LockerError as err:
        logger.error(type(err).__name__ + ': ' + str(err))
        return EXIT_DATA
    except OSError as err:
        logger.error('file problem: ' + str(err))
        return EXIT_DATA

    logger.info('locker-opt ' + args.command + ' completed with exit code ' + str(code)
                + ', runtime was : ' + '{:.3f}'.format(time.monotonic() - time_start) + ' seconds')
    return code


def _float_arg(text):
    import argparse
    from ._py_tools import parse_float
    try:
        return parse_float(text)
    except ValueError:
        raise argparse.ArgumentTypeError('not a number: ' + repr(text))


def _float_list(text):
    """ '0,1,2,inf' -> [0., 1., 2., inf] """
    import argparse
    items = [item.strip() for item in text.split(',') if item.strip()]
    if not items:
        raise argparse.ArgumentTypeError('expected a comma separated list of numbers')
    return [_float_arg(item) for item in items]


_SPEC_KEYS = ('zones', 'lockers', 'side', 'demand_lo', 'demand_hi', 'alpha', 'xi', 'seed', 'gamma')


def _spec_arg(text):
    """ 'zones=40,side=30,seed=42' -> {'zones': 40, 'side': 30., 'seed': 42} """
    import argparse
    spec = {}
    for item in text.split(','):
        if not item.strip():
            continue
        key, sep, value = item.partition('=')
        key = key.strip()
        if not sep or key not in _SPEC_KEYS:
            raise argparse.ArgumentTypeError('expected key=value pairs with keys among ' + ', '.join(_SPEC_KEYS)
                                             + ', got ' + repr(item))
        if key in ('zones', 'lockers', 'seed'):
            try:
                spec[key] = int(value.strip())
            except ValueError:
                raise argparse.ArgumentTypeError(key + ' must be an integer, got ' + repr(value))
        else:
            spec[key] = _float_arg(value.strip())
    return spec


def _default_threads():
    try:
        return max(1, int(os.environ.get('LOCKER_OPT_THREADS', '1')))
    except ValueError:
        return 1


def _add_arguments(parser, required, optional):
    """ Required and optional argument groups from (flag, type, default, help) tuples """
    if required:
        required_args = parser.add_argument_group('Required named arguments')
        for (var_name, vtype, vhelp) in required:
            required_args.add_argument(var_name, type=vtype, required=True, choices=_CHOICES.get(var_name), help=vhelp)
    optional_args = parser.add_argument_group('Optional named arguments')
    for (var_name, vtype, vdefault, vhelp) in optional:
        optional_args.add_argument(var_name, type=vtype, default=vdefault, choices=_CHOICES.get(var_name), help=vhelp)
    return optional_args


def _define_parser():
    '''return argument parser
    '''
    import argparse

    common_args = [
          ('--log_level'  , str,        'INFO',   "minimum level of messages printed to stdout and in the log file"),
          ('--log_file'   , str,        None,     "file where log messages are also written"),
          ]
    solver_args = [
          ('--method'     , str,        'bb',     "solver: bb (branch and bound) or bruteforce (n <= 22)"),
          ('--gap'        , float,      1e-6,     "relative gap at which the branch and bound stops"),
          ('--time-limit' , _float_arg, math.inf, "wall clock limit of each solve (seconds)"),
          ('--node-limit' , int,        None,     "maximum number of branch and bound nodes"),
          ('--threads'    , int,        _default_threads(), "parallel workers, defaults to $LOCKER_OPT_THREADS or 1"),
          ]
    cost_arg = [('--cost', _float_arg, None, "facility cost of every locker, the instance costs by default")]

    desc = "locate parcel lockers under the threshold Luce model"
    parser = argparse.ArgumentParser(prog='locker-opt', description=desc,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    subparsers = parser.add_subparsers(dest='command', required=True, metavar='command')

    gen = subparsers.add_parser('gen', help='generate a synthetic instance')
    _add_arguments(gen, [('--out', str, "instance file to write")], [
          ('--zones'      , int,        40,       "number of customer zones"),
          ('--lockers'    , int,        20,       "number of candidate lockers"),
          ('--side'       , float,      30.,      "side of the square where zones and lockers are drawn"),
          ('--demand-lo'  , float,      1.,       "lowest zone demand"),
          ('--demand-hi'  , float,      1000.,    "highest zone demand"),
          ('--alpha'      , float,      1.,       "distance sensitivity"),
          ('--xi'         , float,      1.,       "scale of the outside option attraction"),
          ('--seed'       , int,        0,        "seed of the random stream, in [0, 2^64)"),
          ('--gamma'      , _float_arg, math.inf, "dominance threshold stored in the instance, inf for MNL"),
          ] + common_args)

    solve = subparsers.add_parser('solve', help='solve an instance to optimality')
    optional_args = _add_arguments(solve, [('--instance', str, "instance file")], [
          ('--gamma'      , _float_arg, None,     "dominance threshold, the one of the instance by default"),
          ('--out'        , str,        None,     "result file to write"),
          ] + cost_arg + solver_args + common_args)
    optional_args.add_argument('--seed-check', action='store_true',
                               help="recompute profit, bound and gap from the written x and y")

    export = subparsers.add_parser('export', help='write a model file for an external solver')
    optional_args = _add_arguments(export, [('--instance', str, "instance file"),
                                            ('--out', str, "model file to write")], [
          ('--gamma'      , _float_arg, None,     "dominance threshold, the one of the instance by default"),
          ('--form'       , str,        'ipd',    "formulation: " + ', '.join(_FORMS)),
          ('--format'     , str,        'lp',     "output format: " + ', '.join(_EXPORT_FORMATS)),
          ('--zone'       , int,        1,        "zone whose dominance graph is written with --format dot (from 1)"),
          ('--extra-paths', int,        0,        "additional disjoint path inequalities per zone"),
          ] + cost_arg + common_args)
    optional_args.add_argument('--paths', action='store_true', help="add path inequalities to the ipd formulation")

    sweep = subparsers.add_parser('sweep', help='solve for a range of one parameter')
    base_args = sweep.add_argument_group('Instance, one of').add_mutually_exclusive_group(required=True)
    base_args.add_argument('--instance', type=str, help="instance file")
    base_args.add_argument('--spec', type=_spec_arg,
                           help="generator recipe, e.g. zones=40,lockers=20,side=30,demand_lo=1,demand_hi=1000,alpha=1,xi=1,seed=42")
    optional_args = _add_arguments(sweep, [('--vary', str, "parameter: gamma, alpha, xi or f"),
                                           ('--values', _float_list, "comma separated values, inf is accepted"),
                                           ('--out', str, "CSV file to write")],
                                   cost_arg + solver_args + common_args)
    optional_args.add_argument('--metrics', action='store_true',
                               help="also solve MNL at every point and report delta and relative loss")

    compare = subparsers.add_parser('compare', help='compare BNL, TLM and MNL optima')
    _add_arguments(compare, [('--instance', str, "instance file"),
                             ('--out', str, "CSV file to write")], [
          ('--gammas'     , _float_list, [0., 1., 2., 3., 5., math.inf], "comma separated dominance thresholds"),
          ] + cost_arg + solver_args + common_args)

    return parser


if __name__ == '__main__':
    sys.exit(main())
