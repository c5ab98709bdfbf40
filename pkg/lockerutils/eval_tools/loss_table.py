import logging
import math


def loss_table(instance, gammas, costs=None, config=None, method='bb'):
    """ Profit lost by locating lockers as if customers followed MNL

    The MNL-optimal locations x_inf are computed once. For every gamma, the
    optimal TLM-gamma profit is compared with the TLM-gamma profit of x_inf,
    choice set restrictions being re-optimized for x_inf.

    Args:
        instance:  an :class:`Instance`, its own gamma is ignored
        gammas:    dominance thresholds
        costs:     facility costs, scalar or length n, defaults to the instance costs
        config:    :class:`SolveConfig` of the branch and bound
        method:    'bb' or 'bruteforce'

    Returns:
        List of :class:`LossRecord` in the order of gammas. rel_loss_percent is
        None when the optimal profit is 0.

    Example:

        >>> import math
        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.eval_tools as eval_tools
        >>> inst = instance_tools.choice_overload_example()
        >>> table = eval_tools.loss_table(inst, [0.5, math.inf], costs=0.)
        >>> [round(rec.rel_loss_percent, 9) for rec in table]
        [0.0, 0.0]
    """

    from ..errors import UndefinedMetricError
    from .actual_profit import actual_profit
    from .compare_models import _solve_all
    from .metrics import rel_loss
    from .records import LossRecord

    logger = logging.getLogger(__name__)

    results = _solve_all(instance, gammas, costs, config, method)
    x_inf = results[math.inf].location

    records = []
    for gamma in gammas:
        gamma = float(gamma)
        optimal = results[gamma].profit
        actual = actual_profit(instance, gamma, x_inf, costs)
        try:
            loss = rel_loss(optimal, actual)
        except UndefinedMetricError as err:
            logger.warning('no relative loss for gamma=' + str(gamma) + ': ' + str(err))
            loss = None
        records.append(LossRecord(gamma=gamma, optimal_profit=optimal, actual_profit=actual, rel_loss_percent=loss))
    return records
