import logging


def build_ip_a(instance, costs=None, extra_paths=0):
    """ Integer program with aggregated dominance constraints

    For every zone i and locker j dominating at least one other locker:

    .. math::
        \\sum_{k \\in \\Omega_{ij}} y_{ik} \\leq |\\Omega_{ij}| (1 - y_{ij})

    plus one path inequality per zone along the longest dominance chain.

    Args:
        instance:     an :class:`Instance`
        costs:        facility costs, scalar or length n, defaults to the instance costs
        extra_paths:  number of additional disjoint path inequalities per zone

    Returns:
        A :class:`Formulation` of kind IP_A

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.model_tools as model_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> form = model_tools.build_ip_a(inst, costs=0.)
        >>> [row.name for row in form.rows if not row.name.startswith('link_')]
        ['adc_1_3', 'path_1_1', 'adc_2_3', 'path_2_1']
    """

    from .._py_tools import cost_vector
    from .formulation import Formulation, Objective, IP_A, ADC_PATH, x_name
    from . import _rows

    logger = logging.getLogger(__name__)

    cost = cost_vector(instance.n, costs, default=instance.cost)
    rows = _rows.linking_rows(instance)
    rows += _rows.dominance_rows(instance, ADC_PATH, extra_paths=extra_paths)
    objective = Objective('max', [(x_name(jj), -cost[jj]) for jj in range(instance.n)])

    logger.debug('IP-A with ' + str(len(rows)) + ' rows')
    return Formulation(kind=IP_A,
                       variables=_rows.location_variables(instance),
                       rows=rows,
                       cones=(),
                       objective=objective,
                       fractional=_rows.fractional_terms(instance),
                       meta=_rows.meta(instance, dominance_block=ADC_PATH, with_paths=True,
                                       extra_paths=int(extra_paths)))
