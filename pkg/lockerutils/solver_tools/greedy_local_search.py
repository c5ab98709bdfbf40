import logging
import math
import time
import numpy as np


def _improves(candidate, current):
    return candidate > current + 1e-12 * max(1., abs(current))


def _flipped(mask, flip):
    trial = mask.copy()
    trial[flip] = ~trial[flip]
    return trial


def _expired(deadline):
    return time.monotonic() >= deadline


def _greedy(evaluate, start, pick_open, deadline):
    """ Flip one locker at a time, always the best flip, while profit increases

    pick_open: True adds closed lockers, False drops open ones
    Past the deadline, the location reached so far is returned.
    """
    current = start
    current_profit = evaluate(current)
    while not _expired(deadline):
        best = None
        pool = np.flatnonzero(~current) if pick_open else np.flatnonzero(current)
        for jj in pool:
            if _expired(deadline):
                break
            trial = _flipped(current, [jj])
            value = evaluate(trial)
            if best is None or value > best[1]:
                best = (trial, value)
        if best is None or not _improves(best[1], current_profit):
            break
        current, current_profit = best
    return current, current_profit


def _local_search(evaluate, current, current_profit, deadline):
    """ First improvement over add, drop and swap moves """
    moves = 0
    improved = True
    while improved:
        improved = False
        open_idx = np.flatnonzero(current)
        closed_idx = np.flatnonzero(~current)
        candidates = ([[jj] for jj in closed_idx]
                      + [[jj] for jj in open_idx]
                      + [[jj, kk] for jj in open_idx for kk in closed_idx])
        for flip in candidates:
            if _expired(deadline):
                return current, current_profit, moves
            trial = _flipped(current, flip)
            value = evaluate(trial)
            if _improves(value, current_profit):
                current, current_profit = trial, value
                moves += 1
                improved = True
                break
    return current, current_profit, moves


def greedy_local_search(instance, costs=None, deadline=None):
    """ Heuristic location: greedy construction followed by local search

    Two greedy constructions are tried. The first starts with every locker
    closed and adds, one at a time, the locker giving the largest profit while
    profit increases. The second starts with every locker open and drops
    lockers the same way; it finds the solutions where several lockers only
    pay off together. Each construction is then improved by first improvement
    passes over add, drop and swap moves until no move increases profit, and the
    better of the two local optima is returned (the first one on ties).
    Every accepted move strictly increases profit.

    When the deadline passes, the search stops and the best location met so
    far is returned; the second construction is skipped if the first one
    already ran out of time.

    Args:
        instance:  an :class:`Instance`
        costs:     facility costs, scalar or length n, defaults to the instance costs
        deadline:  time.monotonic() value after which the search stops, none by default

    Returns:
        A :class:`LocationDecision`

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.solver_tools as solver_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> solver_tools.greedy_local_search(inst, costs=0.1).indices
        (0, 1)
    """

    from .._py_tools import cost_vector
    from ..choice_tools import LocationDecision
    from .evaluate_location import location_profit

    logger = logging.getLogger(__name__)

    n = instance.n
    cost = cost_vector(n, costs, default=instance.cost)

    def evaluate(mask):
        return location_profit(instance, cost, mask)

    if deadline is None:
        deadline = math.inf

    best = None
    for pick_open, start in ((True, np.zeros(n, dtype=bool)), (False, np.ones(n, dtype=bool))):
        if best is not None and _expired(deadline):
            logger.debug('greedy removals skipped, deadline reached')
            break
        mask, value = _greedy(evaluate, start, pick_open, deadline)
        mask, value, moves = _local_search(evaluate, mask, value, deadline)
        logger.debug('greedy ' + ('additions' if pick_open else 'removals') + ': '
                     + str(int(mask.sum())) + ' open lockers after ' + str(moves)
                     + ' local moves, profit ' + str(value))
        if best is None or _improves(value, best[1]):
            best = (mask, value)

    return LocationDecision(best[0])
