"""
Dominance between lockers under the threshold Luce model.

For a zone i, locker j dominates locker k when a_ij > (1 + gamma) a_ik.
The comparison is strict so that equally attractive lockers never dominate
each other, even with gamma = 0. With gamma = inf nothing is dominated.

Every function accepts an optional relative tolerance rtol (0 by default)
which widens the threshold to (1 + gamma)(1 + rtol). It is meant for data
with noisy ties only.
"""

import numpy as np


def _factor(instance, rtol):
    if rtol < 0:
        raise ValueError('rtol must be nonnegative')
    return (1. + instance.gamma) * (1. + rtol)


def dominates(instance, zone, j, k, rtol=0.):
    """ True if locker j dominates locker k for zone

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.choice_tools as choice_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> choice_tools.dominates(inst, 0, 2, 0)
        True
        >>> choice_tools.dominates(inst, 0, 0, 1)
        False
    """
    row = instance.attraction[zone]
    return bool(row[j] > _factor(instance, rtol) * row[k])


def dominated_set(instance, zone, j, rtol=0.):
    """ Lockers dominated by locker j for a given zone

    Args:
        instance:  an :class:`Instance`
        zone:      zone index i
        j:         locker index
        rtol:      optional relative tolerance on the threshold

    Returns:
        frozenset of the indices k such that a_ij > (1+gamma) a_ik

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.choice_tools as choice_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> sorted(choice_tools.dominated_set(inst, 0, 2))
        [0, 1]
    """
    if not 0 <= zone < instance.m or not 0 <= j < instance.n:
        raise IndexError('zone or locker index out of bounds')
    row = instance.attraction[zone]
    mask = row[j] > _factor(instance, rtol) * row
    return frozenset(int(kk) for kk in np.flatnonzero(mask))


def nondominated_set(instance, zone, offered, rtol=0.):
    """ Lockers of an offered set that no other offered locker dominates

    This is the consideration set c_i(S_i) of customers of the zone. It is never
    empty when the offered set is not: the most attractive locker cannot be
    dominated.

    Args:
        instance:  an :class:`Instance`
        zone:      zone index i
        offered:   iterable of locker indices S_i
        rtol:      optional relative tolerance on the threshold

    Returns:
        frozenset of locker indices

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.choice_tools as choice_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> sorted(choice_tools.nondominated_set(inst, 0, {0, 1, 2}))
        [2]
        >>> sorted(choice_tools.nondominated_set(inst, 0, {0, 1}))
        [0, 1]
    """
    offered = sorted(set(int(jj) for jj in offered))
    if not offered:
        return frozenset()
    row = instance.attraction[zone]
    best = max(row[jj] for jj in offered)
    factor = _factor(instance, rtol)
    # whatever dominates j, the most attractive offered locker dominates it too
    return frozenset(jj for jj in offered if not best > factor * row[jj])


def antichain_violation(instance, zone, lockers, rtol=0.):
    """ A dominance pair inside a set of lockers, None if the set is an antichain

    Uses the window characterization: a set is an antichain exactly when its
    largest attraction is at most (1+gamma) times its smallest one, so only the
    extreme pair needs to be tested once attractions are sorted.

    Returns:
        None or a (dominating, dominated) pair of locker indices
    """
    lockers = sorted(set(int(jj) for jj in lockers))
    if len(lockers) < 2:
        return None
    row = instance.attraction[zone]
    ordered = sorted(lockers, key=lambda jj: (row[jj], jj))
    low, high = ordered[0], ordered[-1]
    if row[high] > _factor(instance, rtol) * row[low]:
        return (high, low)
    return None
