import logging


def build_ip_d(instance, costs=None, with_paths=False, extra_paths=0):
    """ Integer program with disaggregated dominance constraints

    One row y_ij + y_ik <= 1 per zone and dominance pair (j, k), plus the
    linking rows y_ij <= x_j. The objective is kept as the fractional revenue
    minus the linear facility cost.

    Args:
        instance:     an :class:`Instance`
        costs:        facility costs, scalar or length n, defaults to the instance costs
        with_paths:   also add the path inequalities of every zone
        extra_paths:  number of additional disjoint path inequalities per zone,
                      used with with_paths

    Returns:
        A :class:`Formulation` of kind IP_D

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.model_tools as model_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> form = model_tools.build_ip_d(inst, costs=0.)
        >>> len(form.rows_named('link_')), len(form.rows_named('ddc_'))
        (6, 4)
    """

    from .._py_tools import cost_vector
    from .formulation import Formulation, Objective, IP_D, DDC, x_name
    from . import _rows

    logger = logging.getLogger(__name__)

    cost = cost_vector(instance.n, costs, default=instance.cost)
    rows = _rows.linking_rows(instance)
    rows += _rows.dominance_rows(instance, DDC, with_paths=with_paths, extra_paths=extra_paths)
    objective = Objective('max', [(x_name(jj), -cost[jj]) for jj in range(instance.n)])

    logger.debug('IP-D with ' + str(len(rows)) + ' rows')
    return Formulation(kind=IP_D,
                       variables=_rows.location_variables(instance),
                       rows=rows,
                       cones=(),
                       objective=objective,
                       fractional=_rows.fractional_terms(instance),
                       meta=_rows.meta(instance, dominance_block=DDC, with_paths=bool(with_paths),
                                       extra_paths=int(extra_paths)))
