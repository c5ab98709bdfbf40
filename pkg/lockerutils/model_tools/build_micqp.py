import logging


def build_micqp(instance, costs=None, dominance_block='ADC_PATH', extra_paths=0):
    """ Mixed integer conic quadratic reformulation

    Minimizes lost demand plus facility cost

    .. math::
        \\min \\sum_i d_i \\beta_i + \\sum_j f_j x_j

    subject to z_i = 1 + sum_j pi_ij y_ij with pi_ij = a_ij / a_i0,
    0 <= beta_i <= 1, the rotated cones beta_i z_i >= 1, the linking rows and
    the dominance rows. At an optimum beta_i = 1/z_i so that the total demand
    minus the optimal value is the optimal profit.

    Args:
        instance:         an :class:`Instance`
        costs:            facility costs, scalar or length n, defaults to the instance costs
        dominance_block:  'DDC' or 'ADC_PATH'
        extra_paths:      number of additional disjoint path inequalities per zone

    Returns:
        A :class:`Formulation` of kind MICQP

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.model_tools as model_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> form = model_tools.build_micqp(inst, costs=0.)
        >>> form.rows_named('zdef_1')[0].coefs
        (('z_1', 1.0), ('y_1_1', -0.5), ('y_1_2', -0.5), ('y_1_3', -0.775))
    """

    from .._py_tools import cost_vector
    from .formulation import Formulation, Objective, Variable, Row, Cone, MICQP
    from .formulation import x_name, y_name, b_name, z_name
    from . import _rows
    import math

    logger = logging.getLogger(__name__)

    cost = cost_vector(instance.n, costs, default=instance.cost)

    variables = _rows.location_variables(instance)
    variables += [Variable(b_name(ii), 'continuous', 0., 1.) for ii in range(instance.m)]
    variables += [Variable(z_name(ii), 'continuous', 1., math.inf) for ii in range(instance.m)]

    rows = []
    for ii in range(instance.m):
        pi = instance.attraction[ii] / instance.outside_attraction[ii]
        coefs = [(z_name(ii), 1.)] + [(y_name(ii, jj), -pi[jj]) for jj in range(instance.n)]
        rows.append(Row('zdef_' + str(ii + 1), coefs, '=', 1.))
    rows += _rows.linking_rows(instance)
    rows += _rows.dominance_rows(instance, dominance_block, with_paths=False, extra_paths=extra_paths)

    cones = [Cone('cone_' + str(ii + 1), b_name(ii), z_name(ii)) for ii in range(instance.m)]
    objective = Objective('min', [(b_name(ii), instance.demand[ii]) for ii in range(instance.m)]
                                 + [(x_name(jj), cost[jj]) for jj in range(instance.n)])

    logger.debug('MICQP with ' + str(len(rows)) + ' rows and ' + str(len(cones)) + ' cones')
    return Formulation(kind=MICQP,
                       variables=variables,
                       rows=rows,
                       cones=cones,
                       objective=objective,
                       fractional=(),
                       meta=_rows.meta(instance, dominance_block=dominance_block,
                                       with_paths=dominance_block == 'ADC_PATH',
                                       extra_paths=int(extra_paths)))
