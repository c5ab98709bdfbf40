import numpy as np


def full_nondominated_restriction(instance, location, rtol=0.):
    """ Restriction where customers see every open locker

    Customers of zone i then consider c_i(S), the nondominated open lockers.
    This is what happens when the operator does not restrict choice sets and
    customers react to the whole set of open lockers.

    Args:
        instance:  an :class:`Instance`
        location:  a :class:`LocationDecision`
        rtol:      optional relative tolerance on the dominance threshold

    Returns:
        A :class:`RestrictionDecision`

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.choice_tools as choice_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> x = choice_tools.LocationDecision([1, 1, 1])
        >>> y = choice_tools.full_nondominated_restriction(inst, x)
        >>> y.row(0), y.row(1)
        ((2,), (2,))
    """

    from .decisions import RestrictionDecision
    from .dominance import nondominated_set

    allowed = np.zeros((instance.m, instance.n), dtype=bool)
    open_set = location.indices
    for ii in range(instance.m):
        allowed[ii, list(nondominated_set(instance, ii, open_set, rtol=rtol))] = True
    return RestrictionDecision(allowed)
