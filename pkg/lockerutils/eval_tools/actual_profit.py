def actual_profit(instance, gamma, x_from_mnl, costs=None):
    """ TLM-gamma profit of the locations chosen under MNL

    The locations stay fixed and every zone is offered its best antichain of
    the open lockers under the threshold gamma.

    Args:
        instance:    an :class:`Instance`, its own gamma is ignored
        gamma:       dominance threshold customers actually follow
        x_from_mnl:  :class:`LocationDecision` optimal under MNL
        costs:       facility costs, scalar or length n, defaults to the instance costs

    Returns:
        float

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.choice_tools as choice_tools
        >>> import lockerutils.eval_tools as eval_tools
        >>> inst = instance_tools.choice_overload_example()
        >>> x = choice_tools.LocationDecision([1, 1, 1])
        >>> round(eval_tools.actual_profit(inst, 0.5, x, costs=0.), 9)
        50.0
    """
    from ..solver_tools import evaluate_location
    _, breakdown = evaluate_location(instance.with_gamma(gamma), x_from_mnl, costs)
    return breakdown.profit


def unrestricted_profit(instance, location, costs=None):
    """ Profit when customers of every zone consider all open lockers

    No choice set restriction is applied: customers of zone i use the
    nondominated open lockers c_i(S). Never more than the profit with the best
    restriction of the same locations.

    Returns:
        A :class:`ProfitBreakdown`

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.choice_tools as choice_tools
        >>> import lockerutils.eval_tools as eval_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> x = choice_tools.LocationDecision([1, 1, 1])
        >>> round(eval_tools.unrestricted_profit(inst, x, costs=0.).revenue, 1)
        43.7
    """
    from ..choice_tools import full_nondominated_restriction, profit
    return profit(instance, location, full_nondominated_restriction(instance, location), costs)
