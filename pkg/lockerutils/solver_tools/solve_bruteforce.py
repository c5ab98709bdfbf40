import logging
import time
import numpy as np

# 2^22 locations is about four million evaluations
MAX_LOCKERS = 22


def solve_bruteforce(instance, costs=None):
    """ Exact solution by enumeration of every set of open lockers

    Each of the 2^n locations is evaluated with the best restriction of every
    zone. Meant as a reference for small instances.

    Args:
        instance:  an :class:`Instance` with at most 22 lockers
        costs:     facility costs, scalar or length n, defaults to the instance costs

    Returns:
        A :class:`SolveResult` with gap 0 and status OPTIMAL. Among locations of
        equal profit the first one enumerated is kept, locker j being bit j of
        the enumeration counter.

    Raises:
        SolverRefusal: the instance has more than 22 lockers

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.solver_tools as solver_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> round(solver_tools.solve_bruteforce(inst, costs=0.).profit, 9)
        50.0
    """

    from .._py_tools import cost_vector
    from ..choice_tools import LocationDecision
    from ..errors import SolverRefusal
    from .evaluate_location import evaluate_location, location_profit
    from .solver_types import SolveResult, OPTIMAL

    logger = logging.getLogger(__name__)

    n = instance.n
    if n > MAX_LOCKERS:
        raise SolverRefusal('brute force enumerates 2^n locations and is limited to n <= '
                            + str(MAX_LOCKERS) + ', this instance has n = ' + str(n))

    time_start = time.monotonic()
    cost = cost_vector(n, costs, default=instance.cost)
    bits = 1 << np.arange(n)

    best_mask = np.zeros(n, dtype=bool)
    best_profit = location_profit(instance, cost, best_mask)
    for counter in range(1, 1 << n):
        mask = (counter & bits) != 0
        value = location_profit(instance, cost, mask)
        if value > best_profit:
            best_mask, best_profit = mask, value

    location = LocationDecision(best_mask)
    restriction, breakdown = evaluate_location(instance, location, cost)
    wall_time = time.monotonic() - time_start
    logger.info('brute force over ' + str(1 << n) + ' locations: profit ' + str(breakdown.profit)
                + ', ' + '{:.3f}'.format(wall_time) + ' s')

    return SolveResult(location=location,
                       restriction=restriction,
                       profit=breakdown.profit,
                       upper_bound=breakdown.profit,
                       gap=0.,
                       nodes_explored=1 << n,
                       wall_time_seconds=wall_time,
                       status=OPTIMAL,
                       breakdown=breakdown,
                       method='bruteforce')
