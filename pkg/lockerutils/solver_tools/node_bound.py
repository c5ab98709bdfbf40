import numpy as np


def node_bound(instance, costs, node):
    """ Upper bound on the profit of every completion of a search node

    Revenue is computed as if every zone could use the best antichain of the
    open and free lockers, and only the costs of the lockers already open are
    paid. Any completion opens a subset of these lockers and the best window
    sum can only shrink on a subset, so the bound is valid.

    Args:
        instance:  an :class:`Instance`
        costs:     facility costs, scalar or length n, defaults to the instance costs
        node:      a :class:`NodeState`

    Returns:
        float

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.solver_tools as solver_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> round(solver_tools.node_bound(inst, 0., solver_tools.NodeState.root(3)), 9)
        50.0
    """

    from .._py_tools import cost_vector
    from .evaluate_location import revenue_bound

    cost = cost_vector(instance.n, costs, default=instance.cost)
    available = np.zeros(instance.n, dtype=bool)
    available[list(node.available())] = True
    return revenue_bound(instance, available) - float(np.sum(cost[list(node.committed_open)]))
