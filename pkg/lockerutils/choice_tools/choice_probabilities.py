import numpy as np

from ..errors import ContractViolation


def check_antichains(instance, restriction, rtol=0.):
    """ Raise ContractViolation if a zone is offered a pair of lockers where one dominates the other """

    from .dominance import antichain_violation

    if restriction.shape != (instance.m, instance.n):
        raise ContractViolation('restriction has shape ' + str(restriction.shape)
                                + ', expected ' + str((instance.m, instance.n)))
    if instance.gamma == np.inf:
        return
    for ii in range(instance.m):
        pair = antichain_violation(instance, ii, restriction.row(ii), rtol=rtol)
        if pair is not None:
            raise ContractViolation('offered lockers are not an antichain: locker '
                                    + str(pair[0]) + ' dominates locker ' + str(pair[1]),
                                    zone=ii, pair=pair)


def choice_probabilities(instance, restriction, rtol=0.):
    """ Choice probabilities given the lockers offered to each zone

    Every offered locker is nondominated (checked), so probabilities are
    proportional to attraction among the offered lockers and the outside option:

    .. math::
        p_{ij} = \\frac{a_{ij}}{\\sum_{l \\in S_i} a_{il} + a_{i0}}

    Args:
        instance:     an :class:`Instance`
        restriction:  a :class:`RestrictionDecision` whose rows are antichains
        rtol:         relative tolerance used for the antichain check

    Returns:
        A :class:`ChoiceDistribution`

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.choice_tools as choice_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> only_third = choice_tools.RestrictionDecision([[0, 0, 1], [0, 0, 1]])
        >>> dist = choice_tools.choice_probabilities(inst, only_third)
        >>> print(round(dist.locker[0, 2], 3), round(dist.outside[0], 3))
        0.437 0.563
    """

    from .decisions import ChoiceDistribution

    check_antichains(instance, restriction, rtol=rtol)

    offered = np.where(restriction.allowed, instance.attraction, 0.)
    denominator = np.sum(offered, axis=1) + instance.outside_attraction
    locker = offered / denominator[:, np.newaxis]
    outside = instance.outside_attraction / denominator
    return ChoiceDistribution(locker=locker, outside=outside)
