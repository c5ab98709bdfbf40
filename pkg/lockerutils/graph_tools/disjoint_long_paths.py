import logging


def disjoint_long_paths(graph, k=0):
    """ The longest path followed by up to k vertex disjoint long paths

    Each additional path is the longest path of the graph once the vertices of
    the previous paths are removed. Paths with a single vertex give vacuous
    inequalities and are dropped.

    Args:
        graph:  a :class:`DominanceGraph`
        k:      number of additional paths

    Returns:
        list of :class:`PathInequality`, at most k+1 of them

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.graph_tools as graph_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> paths = graph_tools.disjoint_long_paths(graph_tools.build(inst, 0), k=2)
        >>> [path.vertex_sequence for path in paths]
        [(2, 0)]
    """

    from .longest_path import longest_path

    logger = logging.getLogger(__name__)

    if k < 0:
        raise ValueError('k must be nonnegative')

    paths = []
    remaining = graph
    for _ in range(k + 1):
        path = longest_path(remaining)
        if len(path) < 2:
            break
        paths.append(path)
        remaining = remaining.without(path.vertex_sequence)

    logger.debug('zone ' + str(graph.zone) + ': ' + str(len(paths)) + ' path inequalities')
    return paths
