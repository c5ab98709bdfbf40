import logging
from dataclasses import replace
import math


def _solve_all(instance, gammas, costs, config, method):
    """ Optimal solutions for every gamma and for MNL, MNL last """
    from .solve import solve
    results = {}
    for gamma in list(gammas) + [math.inf]:
        gamma = float(gamma)
        if gamma not in results:
            results[gamma] = solve(instance.with_gamma(gamma), costs, config, method)
    return results


def compare_models(instance, gammas, costs=None, config=None, method='bb'):
    """ Optimal solutions of the choice models BNL, TLM-gamma and MNL side by side

    MNL is always solved since every other model is compared against it. For
    each gamma, the record holds the optimal profit, its revenue, the number of
    open lockers, the revenue difference delta against MNL and the relative
    profit loss incurred by opening the MNL-optimal lockers instead.

    Metrics that are undefined (zero TLM revenue or zero optimal profit) are
    left to None and a warning is logged.

    Args:
        instance:  an :class:`Instance`, its own gamma is ignored
        gammas:    dominance thresholds, 0 for BNL and math.inf for MNL
        costs:     facility costs, scalar or length n, defaults to the instance costs
        config:    :class:`SolveConfig` of the branch and bound
        method:    'bb' or 'bruteforce'

    Returns:
        List of :class:`ComparisonRecord` in the order of gammas

    Example:

        >>> import math
        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.eval_tools as eval_tools
        >>> inst = instance_tools.choice_overload_example()
        >>> records = eval_tools.compare_models(inst, [0., 0.5, math.inf], costs=0.)
        >>> [rec.gamma_label for rec in records]
        ['BNL', 'TLM-0.5', 'MNL']
    """

    from ..errors import UndefinedMetricError
    from .actual_profit import actual_profit
    from .metrics import delta_percent, rel_loss
    from .delta import _record

    logger = logging.getLogger(__name__)

    results = _solve_all(instance, gammas, costs, config, method)
    mnl = results[math.inf]

    records = []
    for gamma in gammas:
        gamma = float(gamma)
        result = results[gamma]
        try:
            delta_pct = delta_percent(mnl.revenue, result.revenue)
        except UndefinedMetricError as err:
            logger.warning('no revenue difference for gamma=' + str(gamma) + ': ' + str(err))
            delta_pct = None
        try:
            actual = actual_profit(instance, gamma, mnl.location, costs)
            loss = rel_loss(result.profit, actual)
        except UndefinedMetricError as err:
            logger.warning('no relative loss for gamma=' + str(gamma) + ': ' + str(err))
            loss = None
        record = _record(gamma, result, delta_pct)
        records.append(replace(record, rel_loss_pct=loss))
    return records
