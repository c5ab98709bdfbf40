import logging
import math
import time

GAMMA = 'gamma'
ALPHA = 'alpha'
XI = 'xi'
COST = 'f'
PARAMETERS = (GAMMA, ALPHA, XI, COST)

ERROR = 'ERROR'


def _point_instance(base, vary, value):
    if vary == GAMMA:
        return base.with_gamma(value)
    if vary == ALPHA:
        return base.with_alpha(value)
    if vary == XI:
        return base.with_xi(value)
    return base


def _sweep_point(base, vary, value, costs, config, method, with_metrics):
    """ Solve one point of a sweep, failures are recorded instead of raised """

    from ..errors import LockerError, UndefinedMetricError
    from .actual_profit import actual_profit
    from .metrics import delta_percent, rel_loss
    from .records import SweepRecord
    from .solve import solve

    logger = logging.getLogger(__name__)

    time_start = time.monotonic()
    point_costs = value if vary == COST else costs
    try:
        instance = _point_instance(base, vary, value)
        result = solve(instance, point_costs, config, method)
        delta_pct = None
        loss = None
        if with_metrics:
            # MNL optimum of this very point, alpha and xi change it
            mnl = solve(instance.with_gamma(math.inf), point_costs, config, method)
            try:
                delta_pct = delta_percent(mnl.revenue, result.revenue)
            except UndefinedMetricError:
                logger.warning(vary + '=' + str(value) + ': revenue difference undefined')
            try:
                loss = rel_loss(result.profit, actual_profit(instance, instance.gamma, mnl.location, point_costs))
            except UndefinedMetricError:
                logger.warning(vary + '=' + str(value) + ': relative loss undefined')
    except LockerError as err:
        logger.error(vary + '=' + str(value) + ' failed: ' + str(err))
        return SweepRecord(param_name=vary, param_value=float(value),
                           profit=math.nan, revenue=math.nan, facility_count=0,
                           gap=math.nan, status=ERROR,
                           wall_time_s=time.monotonic() - time_start)

    wall_time = time.monotonic() - time_start
    logger.info(vary + '=' + str(value) + ': profit ' + str(result.profit) + ', '
                + str(result.facility_count) + ' lockers, ' + result.status)
    return SweepRecord(param_name=vary, param_value=float(value),
                       profit=result.profit, revenue=result.revenue,
                       facility_count=result.facility_count, gap=result.gap,
                       status=result.status, wall_time_s=wall_time,
                       delta_pct=delta_pct, rel_loss_pct=loss)


def sweep(base, vary, values, costs=None, config=None, method='bb', threads=1, with_metrics=False):
    """ Optimal profit as one parameter changes, everything else held fixed

    The same zones, lockers and demands are used at every point. Attractions
    are recomputed from the positions for alpha and xi, the threshold of the
    instance is replaced for gamma and the facility cost of every locker for f.

    Points are independent and solved in parallel with dask when threads > 1.
    A point where the solver fails gets a record with status 'ERROR' and the
    sweep goes on.

    Args:
        base:          :class:`Instance` or :class:`GeneratorSpec` to generate it from
        vary:          'gamma', 'alpha', 'xi' or 'f'
        values:        values taken by the parameter
        costs:         facility costs when f is not the varying parameter
        config:        :class:`SolveConfig` of the branch and bound
        method:        'bb' or 'bruteforce'
        threads:       number of points solved at the same time
        with_metrics:  also solve MNL at every point and report delta and relative loss

    Returns:
        List of :class:`SweepRecord` sorted by parameter value

    Raises:
        ValidationError: values is empty, or an alpha sweep is requested on an
                         instance without positions

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.eval_tools as eval_tools
        >>> inst = instance_tools.choice_overload_example()
        >>> records = eval_tools.sweep(inst, 'f', [10., 0.], method='bruteforce')
        >>> [(rec.param_value, rec.facility_count) for rec in records]
        [(0.0, 2), (10.0, 1)]
    """

    import dask

    from ..errors import ValidationError
    from ..instance_tools import GeneratorSpec, generate

    logger = logging.getLogger(__name__)

    if vary not in PARAMETERS:
        raise ValueError('cannot sweep over ' + repr(vary) + ', expected one of ' + ', '.join(PARAMETERS))
    values = [float(val) for val in values]
    if not values:
        raise ValidationError('values', 'a sweep needs at least one parameter value')
    if isinstance(base, GeneratorSpec):
        base = generate(base)
    if vary == ALPHA and (base.zone_xy is None or base.locker_xy is None):
        raise ValidationError('alpha', 'an alpha sweep needs zone and locker positions in the instance')

    logger.info('sweep over ' + vary + ' with ' + str(len(values)) + ' points')
    if threads > 1 and len(values) > 1:
        tasks = [dask.delayed(_sweep_point)(base, vary, value, costs, config, method, with_metrics)
                 for value in values]
        records = dask.compute(*tasks, scheduler='threads', num_workers=threads)
    else:
        records = [_sweep_point(base, vary, value, costs, config, method, with_metrics) for value in values]

    return sorted(records, key=lambda rec: rec.param_value)
