import heapq
import logging
import math
import time
import numpy as np


def _expand(instance, cost, weights, rule, node):
    """ Completion profit of a node and its two children with their bounds

    The completion closes every free locker. Children fix the branching locker
    open first, then closed.
    """

    from .evaluate_location import revenue_bound
    from .solver_types import NodeState, LOWEST_INDEX

    open_mask = np.zeros(instance.n, dtype=bool)
    open_mask[list(node.committed_open)] = True
    open_cost = float(np.sum(cost[open_mask]))
    completion = revenue_bound(instance, open_mask) - open_cost
    if not node.free:
        return completion, []

    if rule == LOWEST_INDEX:
        jj = min(node.free)
    else:
        jj = max(sorted(node.free), key=lambda kk: weights[kk])
    free = node.free - {jj}

    available = open_mask.copy()
    available[list(node.free)] = True
    opened = NodeState(node.committed_open | {jj}, node.committed_closed, free,
                       bound=revenue_bound(instance, available) - open_cost - cost[jj])
    available[jj] = False
    closed = NodeState(node.committed_open, node.committed_closed | {jj}, free,
                       bound=revenue_bound(instance, available) - open_cost)
    return completion, [opened, closed]


def solve_bb(instance, costs=None, config=None):
    """ Exact solution by best first branch and bound over the open lockers

    Nodes fix lockers open or closed. The bound of a node lets every zone use
    the best antichain of its open and free lockers while charging only the
    open ones. Nodes are explored by decreasing bound and pruned when

        bound - incumbent <= max(gap_tolerance * |bound|, 1e-12)

    At every explored node the solution closing all free lockers is evaluated
    as a candidate incumbent. With config.threads > 1, batches of nodes are
    expanded in parallel with dask; results then agree in value but node
    counts may differ between runs.

    Args:
        instance:  an :class:`Instance`
        costs:     facility costs, scalar or length n, defaults to the instance costs
        config:    a :class:`SolveConfig`, default settings when None

    Returns:
        A :class:`SolveResult`. Its status is OPTIMAL when the search closed with a
        relative gap under 1e-6, GAP_LIMIT when it closed because of a larger
        gap_tolerance, TIME_LIMIT or NODE_LIMIT otherwise. The bound is valid in
        every case.

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.solver_tools as solver_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> res = solver_tools.solve_bb(inst, costs=0.1)
        >>> res.location.indices, round(res.profit, 9), res.status
        ((0, 1), 49.8, 'OPTIMAL')
    """

    import dask

    from .._py_tools import cost_vector
    from ..choice_tools import LocationDecision
    from .evaluate_location import evaluate_location
    from .greedy_local_search import greedy_local_search
    from .node_bound import node_bound
    from . import solver_types as st

    logger = logging.getLogger(__name__)

    time_start = time.monotonic()
    if config is None:
        config = st.SolveConfig()
    cost = cost_vector(instance.n, costs, default=instance.cost)
    weights = instance.demand @ instance.attraction
    node_limit = math.inf if config.node_limit is None else config.node_limit

    def prunable(bound, incumbent_profit):
        return bound - incumbent_profit <= max(config.gap_tolerance * abs(bound), 1e-12)

    logger.info('branch and bound on ' + str(instance.m) + ' zones, ' + str(instance.n)
                + ' lockers, gamma=' + str(instance.gamma) + ', threads=' + str(config.threads))

    # empty location, profit 0
    incumbent = np.zeros(instance.n, dtype=bool)
    incumbent_profit = 0.
    if config.heuristic == st.GREEDY_LOCAL_SEARCH and instance.n > 0:
        # the heuristic shares the time limit of the search
        guess = greedy_local_search(instance, cost, deadline=time_start + config.time_limit_seconds).open
        _, breakdown = evaluate_location(instance, LocationDecision(guess), cost)
        if breakdown.profit > incumbent_profit:
            incumbent, incumbent_profit = guess.copy(), breakdown.profit
            logger.debug('heuristic incumbent ' + str(incumbent_profit))

    root = st.NodeState.root(instance.n)
    root = st.NodeState(root.committed_open, root.committed_closed, root.free,
                        bound=node_bound(instance, cost, root))
    heap = []
    seq = 0
    pruned_bound = -math.inf
    if prunable(root.bound, incumbent_profit):
        pruned_bound = root.bound
    else:
        heapq.heappush(heap, (-root.bound, seq, root))

    nodes = 0
    status = None
    while heap:
        if nodes >= node_limit:
            status = st.NODE_LIMIT
            break
        if time.monotonic() - time_start >= config.time_limit_seconds:
            status = st.TIME_LIMIT
            break

        batch = []
        while heap and len(batch) < config.threads and nodes + len(batch) < node_limit:
            _, _, node = heapq.heappop(heap)
            if prunable(node.bound, incumbent_profit):
                # best first: every node left is prunable too
                pruned_bound = max(pruned_bound, node.bound)
                for _, _, other in heap:
                    pruned_bound = max(pruned_bound, other.bound)
                heap = []
                break
            batch.append(node)
        if not batch:
            break

        if config.threads > 1 and len(batch) > 1:
            tasks = [dask.delayed(_expand)(instance, cost, weights, config.branching_rule, node) for node in batch]
            expanded = dask.compute(*tasks, scheduler='threads', num_workers=config.threads)
        else:
            expanded = [_expand(instance, cost, weights, config.branching_rule, node) for node in batch]
        nodes += len(batch)

        for node, (completion, children) in zip(batch, expanded):
            if completion > incumbent_profit:
                incumbent = np.zeros(instance.n, dtype=bool)
                incumbent[list(node.committed_open)] = True
                incumbent_profit = completion
                logger.debug('node ' + str(nodes) + ': new incumbent ' + str(incumbent_profit))
            for child in children:
                if prunable(child.bound, incumbent_profit):
                    pruned_bound = max(pruned_bound, child.bound)
                else:
                    seq += 1
                    heapq.heappush(heap, (-child.bound, seq, child))

    # children pushed before the last incumbent update may be prunable now
    open_bound = max((node.bound for _, _, node in heap), default=-math.inf)

    location = LocationDecision(incumbent)
    restriction, breakdown = evaluate_location(instance, location, cost)
    profit = breakdown.profit
    upper_bound = max(profit, incumbent_profit, pruned_bound, open_bound)
    gap = st.relative_gap(upper_bound, profit)
    if status is None:
        status = st.OPTIMAL if gap <= st.OPTIMAL_GAP else st.GAP_LIMIT

    wall_time = time.monotonic() - time_start
    logger.info('branch and bound ' + status + ': profit ' + str(profit) + ', bound '
                + str(upper_bound) + ', gap ' + str(gap) + ', ' + str(nodes) + ' nodes, '
                + '{:.3f}'.format(wall_time) + ' s')

    return st.SolveResult(location=location,
                          restriction=restriction,
                          profit=profit,
                          upper_bound=upper_bound,
                          gap=gap,
                          nodes_explored=nodes,
                          wall_time_seconds=wall_time,
                          status=status,
                          breakdown=breakdown,
                          method='bb')
