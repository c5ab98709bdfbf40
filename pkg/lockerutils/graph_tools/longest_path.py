from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class PathInequality:
    """ A dominance chain of a zone, at most one of its lockers can be offered

    Attributes:
        zone:             zone index i
        vertex_sequence:  locker indices, each one dominating the next
    """
    zone: int
    vertex_sequence: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'vertex_sequence', tuple(int(vv) for vv in self.vertex_sequence))

    def __len__(self):
        return len(self.vertex_sequence)


def longest_path(graph):
    """ A path with the largest number of vertices

    Dynamic programming over the topological order: the length of the longest
    path ending at v is one more than the best length among the predecessors of v.
    Ties between predecessors go to the lowest locker index and so do ties
    between end vertices.

    Args:
        graph:  a :class:`DominanceGraph`

    Returns:
        A :class:`PathInequality`. It has a single vertex (the lowest index)
        when the graph has no edge and no vertex when the graph is empty.

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.graph_tools as graph_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> graph_tools.longest_path(graph_tools.build(inst, 0)).vertex_sequence
        (2, 0)
    """

    from .topological_order import topological_order

    order = topological_order(graph)
    if not order:
        return PathInequality(zone=graph.zone, vertex_sequence=())

    length = {}
    previous = {}
    for vv in order:
        best_len = 0
        best_pred = None
        for uu in sorted(graph.digraph.predecessors(vv)):
            if length[uu] > best_len:
                best_len = length[uu]
                best_pred = uu
        length[vv] = best_len + 1
        previous[vv] = best_pred

    top = max(length.values())
    end = min(vv for vv in order if length[vv] == top)

    path = [end]
    while previous[path[-1]] is not None:
        path.append(previous[path[-1]])
    return PathInequality(zone=graph.zone, vertex_sequence=tuple(reversed(path)))


def implied_pair_count(path):
    """ Number of dominance pairs implied by a chain of t lockers, t(t-1)/2

    Example:

        >>> import lockerutils.graph_tools as graph_tools
        >>> graph_tools.implied_pair_count(graph_tools.PathInequality(0, (0, 1, 3, 5)))
        6
    """
    tt = len(path)
    return tt * (tt - 1) // 2
