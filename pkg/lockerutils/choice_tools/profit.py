import math
import numpy as np


def profit(instance, location, restriction, costs=None, rtol=0.):
    """ Expected revenue, facility cost and profit of a decision

    The revenue captured in zone i is

    .. math::
        d_i \\frac{\\sum_j a_{ij} y_{ij}}{\\sum_j a_{ij} y_{ij} + a_{i0}}

    and the facility cost is the sum of f_j over open lockers.

    Args:
        instance:     an :class:`Instance`
        location:     a :class:`LocationDecision`
        restriction:  a :class:`RestrictionDecision`, antichain rows with y_ij <= x_j
        costs:        facility costs, scalar or length n. Defaults to the costs
                      stored in the instance.
        rtol:         relative tolerance used for the antichain check

    Returns:
        A :class:`ProfitBreakdown`

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.choice_tools as choice_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> x = choice_tools.LocationDecision([1, 1, 0])
        >>> y = choice_tools.RestrictionDecision([[1, 1, 0], [1, 1, 0]])
        >>> print(round(choice_tools.profit(inst, x, y, costs=0.).revenue, 6))
        50.0
    """

    from .._py_tools import cost_vector
    from .decisions import ProfitBreakdown
    from .choice_probabilities import check_antichains

    restriction.check_consistent(location)
    check_antichains(instance, restriction, rtol=rtol)
    cost = cost_vector(instance.n, costs, default=instance.cost)

    offered = np.sum(np.where(restriction.allowed, instance.attraction, 0.), axis=1)
    denominator = offered + instance.outside_attraction
    per_zone_revenue = instance.demand * offered / denominator
    per_zone_lost = instance.demand * instance.outside_attraction / denominator

    revenue = math.fsum(per_zone_revenue)
    facility_cost = math.fsum(cost[location.open])
    return ProfitBreakdown(revenue=revenue,
                           facility_cost=facility_cost,
                           profit=revenue - facility_cost,
                           lost_demand=math.fsum(per_zone_lost),
                           per_zone_revenue=per_zone_revenue)
