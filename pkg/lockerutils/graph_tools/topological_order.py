import networkx as nx


def topological_order(graph):
    """ Vertices ordered so that every edge points forward

    Ties are broken by ascending locker index, so that the order does not depend
    on how the graph was built.

    Args:
        graph:  a :class:`DominanceGraph`

    Returns:
        list of locker indices

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.graph_tools as graph_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> graph_tools.topological_order(graph_tools.build(inst, 0))
        [2, 0, 1]
    """

    from ..errors import InternalConsistencyError

    try:
        return list(nx.lexicographical_topological_sort(graph.digraph))
    except nx.NetworkXUnfeasible:
        raise InternalConsistencyError('dominance graph of zone ' + str(graph.zone) + ' contains a cycle')
