"""
Window oracle: the best antichain of available lockers for a zone.

Under threshold dominance a set of lockers is an antichain exactly when its
largest attraction is at most (1 + gamma) times its smallest one. Once the
available attractions are sorted, the best antichain is therefore one of the
windows [s, e] where e is the last locker with attraction <= (1+gamma) a_s.

Both functions take the relative tolerance rtol of the dominance functions
of choice_tools, which widens the threshold to (1 + gamma)(1 + rtol). The
solvers call them with rtol = 0.
"""

import math
import numpy as np


def _threshold(instance, rtol):
    if rtol < 0:
        raise ValueError('rtol must be nonnegative')
    return (1. + instance.gamma) * (1. + rtol)


def best_restriction(instance, zone, available, rtol=0.):
    """ Antichain of available lockers with the largest total attraction

    Args:
        instance:   an :class:`Instance`
        zone:       zone index i
        available:  iterable of locker indices
        rtol:       optional relative tolerance on the dominance threshold

    Returns:
        (allowed, attraction_sum) where allowed is a sorted tuple of locker indices.
        Among windows of equal sum, the one with the smallest starting attraction
        (then lowest indices) wins. Empty availability gives ((), 0.).

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.solver_tools as solver_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> solver_tools.best_restriction(inst, 0, [0, 1, 2])
        ((0, 1), 4.0)
    """

    factor = _threshold(instance, rtol)
    available = sorted(set(int(jj) for jj in available))
    if not available:
        return (), 0.

    row = instance.attraction[zone]
    ordered = sorted(available, key=lambda jj: (row[jj], jj))
    values = np.array([row[jj] for jj in ordered])
    ends = np.searchsorted(values, factor * values, side='right')

    best_sum = -1.
    best = None
    for start, end in enumerate(ends):
        this_sum = math.fsum(values[start:end])
        if this_sum > best_sum:
            best_sum = this_sum
            best = (start, end)
    return tuple(sorted(ordered[best[0]:best[1]])), best_sum


def window_sums(instance, available_mask, rtol=0.):
    """ Best antichain attraction sum of every zone, vectorized over zones

    Args:
        instance:        an :class:`Instance`
        available_mask:  length n boolean array
        rtol:            optional relative tolerance on the dominance threshold

    Returns:
        (sums, allowed): length m array of A*_i and the (m, n) boolean matrix of
        the corresponding windows. Same tie rule as :func:`best_restriction`.
    """

    factor = _threshold(instance, rtol)
    available_mask = np.asarray(available_mask, dtype=bool)
    m, n = instance.m, instance.n
    allowed = np.zeros((m, n), dtype=bool)
    idx = np.flatnonzero(available_mask)
    kk = idx.size
    if kk == 0 or m == 0:
        return np.zeros(m), allowed

    sub = instance.attraction[:, idx]
    order = np.argsort(sub, axis=1, kind='stable')
    values = np.take_along_axis(sub, order, axis=1)
    csum = np.concatenate([np.zeros((m, 1)), np.cumsum(values, axis=1)], axis=1)

    # ends[i, s] number of sorted values <= factor values[i, s]
    limit = factor * values
    ends = np.sum(values[:, np.newaxis, :] <= limit[:, :, np.newaxis], axis=2)
    starts = np.arange(kk)[np.newaxis, :]
    sums = np.take_along_axis(csum, ends, axis=1) - csum[:, :kk]

    best_start = np.argmax(sums, axis=1)
    rows = np.arange(m)
    best_end = ends[rows, best_start]
    in_window = (starts >= best_start[:, np.newaxis]) & (starts < best_end[:, np.newaxis])
    allowed[rows[:, np.newaxis], idx[order]] = in_window
    return sums[rows, best_start], allowed
