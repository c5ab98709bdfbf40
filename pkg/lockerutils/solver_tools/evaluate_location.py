import numpy as np


def evaluate_location(instance, location, costs=None):
    """ Best restriction for a set of open lockers and the resulting profit

    Each zone is offered the antichain of open lockers with the largest total
    attraction, which maximizes its captured demand.

    Args:
        instance:  an :class:`Instance`
        location:  a :class:`LocationDecision`
        costs:     facility costs, scalar or length n, defaults to the instance costs

    Returns:
        (restriction, breakdown): a :class:`RestrictionDecision` and its :class:`ProfitBreakdown`

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.choice_tools as choice_tools
        >>> import lockerutils.solver_tools as solver_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> y, res = solver_tools.evaluate_location(inst, choice_tools.LocationDecision([1, 1, 1]), costs=0.)
        >>> y.row(0), round(res.revenue, 9)
        ((0, 1), 50.0)
    """

    from ..choice_tools import RestrictionDecision, profit
    from .best_restriction import best_restriction

    open_set = location.indices
    allowed = np.zeros((instance.m, instance.n), dtype=bool)
    for ii in range(instance.m):
        chosen, _ = best_restriction(instance, ii, open_set)
        allowed[ii, list(chosen)] = True
    restriction = RestrictionDecision(allowed)
    return restriction, profit(instance, location, restriction, costs)


def revenue_bound(instance, available_mask):
    """ Sum over zones of d_i A*_i / (A*_i + a_i0) for the lockers in available_mask """
    from .best_restriction import window_sums
    sums, _ = window_sums(instance, available_mask)
    return float(np.sum(instance.demand * sums / (sums + instance.outside_attraction)))


def location_profit(instance, cost, open_mask):
    """ Profit of opening the lockers of open_mask, restrictions chosen optimally """
    open_mask = np.asarray(open_mask, dtype=bool)
    return revenue_bound(instance, open_mask) - float(np.sum(cost[open_mask]))
