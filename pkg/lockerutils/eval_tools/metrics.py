import math


def gamma_label(gamma):
    """ BNL for 0, MNL for inf, TLM-<gamma> otherwise

    Example:

        >>> import lockerutils.eval_tools as eval_tools
        >>> eval_tools.gamma_label(0.), eval_tools.gamma_label(2.), eval_tools.gamma_label(float('inf'))
        ('BNL', 'TLM-2', 'MNL')
    """
    gamma = float(gamma)
    if gamma == 0:
        return 'BNL'
    if math.isinf(gamma):
        return 'MNL'
    return 'TLM-' + format(gamma, 'g')


def delta_percent(r_mnl, r_tlm):
    """ Relative overestimation of revenue by MNL, in percent

    Args:
        r_mnl:  revenue at the MNL-optimal solution
        r_tlm:  revenue at the TLM-gamma-optimal solution

    Returns:
        (r_mnl - r_tlm) / r_tlm * 100

    Raises:
        UndefinedMetricError: r_tlm is not positive

    Example:

        >>> import lockerutils.eval_tools as eval_tools
        >>> round(eval_tools.delta_percent(57380., 44737.), 2)
        28.26
    """
    from ..errors import UndefinedMetricError
    if not r_tlm > 0:
        raise UndefinedMetricError('revenue difference is undefined for a TLM revenue of ' + str(r_tlm))
    return (r_mnl - r_tlm) / r_tlm * 100.


def rel_loss(optimal_profit, actual_profit):
    """ Share of the optimal profit lost, in percent

    Raises:
        UndefinedMetricError: optimal_profit is not positive

    Example:

        >>> import lockerutils.eval_tools as eval_tools
        >>> round(eval_tools.rel_loss(28737., 26725.), 2)
        7.0
    """
    from ..errors import UndefinedMetricError
    if not optimal_profit > 0:
        raise UndefinedMetricError('relative loss is undefined for an optimal profit of ' + str(optimal_profit))
    return (optimal_profit - actual_profit) / optimal_profit * 100.
