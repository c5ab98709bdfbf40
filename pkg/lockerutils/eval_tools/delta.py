import logging
import math


def _record(gamma, result, delta_pct=None):
    from .records import ComparisonRecord
    from .metrics import gamma_label
    return ComparisonRecord(gamma=float(gamma),
                            gamma_label=gamma_label(gamma),
                            profit=result.profit,
                            revenue=result.revenue,
                            facility_count=result.facility_count,
                            delta_percent=delta_pct,
                            status=result.status)


def delta(instance, gamma, costs=None, config=None, method='bb'):
    """ Revenue overestimated by planning with MNL instead of TLM-gamma

    Both problems are solved to optimality on the same data, the revenue R
    of each optimal solution is compared with

        delta = (R(MNL) - R(TLM-gamma)) / R(TLM-gamma) * 100

    Args:
        instance:  an :class:`Instance`, its own gamma is ignored
        gamma:     dominance threshold of the TLM model
        costs:     facility costs, scalar or length n, defaults to the instance costs
        config:    :class:`SolveConfig` of the branch and bound
        method:    'bb' or 'bruteforce'

    Returns:
        (tlm_record, mnl_record): two :class:`ComparisonRecord`. The TLM record
        carries delta, the MNL one has delta 0.

    Raises:
        UndefinedMetricError: the optimal TLM revenue is 0

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.eval_tools as eval_tools
        >>> inst = instance_tools.choice_overload_example()
        >>> tlm, mnl = eval_tools.delta(inst, 0.5, costs=0.)
        >>> tlm.gamma_label, round(tlm.revenue, 9), mnl.gamma_label, round(mnl.delta_percent, 9)
        ('TLM-0.5', 50.0, 'MNL', 0.0)
    """

    from .metrics import delta_percent
    from .solve import solve

    logger = logging.getLogger(__name__)

    tlm = solve(instance.with_gamma(gamma), costs, config, method)
    mnl = solve(instance.with_gamma(math.inf), costs, config, method)
    value = delta_percent(mnl.revenue, tlm.revenue)
    logger.info('gamma=' + str(gamma) + ': R(TLM)=' + str(tlm.revenue) + ', R(MNL)=' + str(mnl.revenue)
                + ', delta=' + '{:.2f}'.format(value) + '%')
    return _record(gamma, tlm, value), _record(math.inf, mnl, 0.)
