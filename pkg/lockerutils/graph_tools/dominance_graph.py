"""
Per zone dominance DAG.

Vertices are locker indices, an edge (j, k) means that locker j dominates
locker k for the zone: a_ij > (1 + gamma) a_ik. Edges always go from a
strictly larger attraction to a strictly smaller one so the graph is acyclic.
The relation is transitive and every implied edge is stored.
"""

from dataclasses import dataclass
from typing import Any, Tuple
import numpy as np
import networkx as nx


@dataclass(frozen=True, eq=False)
class DominanceGraph:
    """ Dominance DAG G_i of one customer zone

    Attributes:
        zone:        zone index i
        vertices:    sorted tuple of locker indices
        edges:       sorted tuple of (j, k) dominance pairs
        attraction:  attraction a_ij of every locker of the instance for this zone
        digraph:     the same graph as a networkx.DiGraph
    """
    zone: int
    vertices: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]
    attraction: Any
    digraph: Any

    def without(self, removed):
        """ Graph induced by the vertices not in removed """
        removed = set(removed)
        vertices = tuple(vv for vv in self.vertices if vv not in removed)
        edges = tuple((jj, kk) for jj, kk in self.edges if jj not in removed and kk not in removed)
        return _make(self.zone, vertices, edges, self.attraction)

    def __repr__(self):
        return ('DominanceGraph(zone=' + str(self.zone) + ', vertices=' + str(len(self.vertices))
                + ', edges=' + str(len(self.edges)) + ')')


def _make(zone, vertices, edges, attraction):
    digraph = nx.DiGraph()
    digraph.add_nodes_from(vertices)
    digraph.add_edges_from(edges)
    return DominanceGraph(zone=zone, vertices=tuple(vertices), edges=tuple(edges),
                          attraction=attraction, digraph=digraph)


def build(instance, zone, rtol=0.):
    """ Dominance graph of a zone

    Args:
        instance:  an :class:`Instance`
        zone:      zone index i
        rtol:      optional relative tolerance on the dominance threshold

    Returns:
        A :class:`DominanceGraph` with edges exactly {(j, k) : a_ij > (1+gamma) a_ik}

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.graph_tools as graph_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> graph_tools.build(inst, 0).edges
        ((2, 0), (2, 1))
    """

    if not 0 <= zone < instance.m:
        raise IndexError('zone ' + str(zone) + ' out of bounds')
    if rtol < 0:
        raise ValueError('rtol must be nonnegative')

    row = instance.attraction[zone]
    mask = row[:, np.newaxis] > (1. + instance.gamma) * (1. + rtol) * row[np.newaxis, :]
    edges = [(int(jj), int(kk)) for jj, kk in np.argwhere(mask)]
    return _make(zone, range(instance.n), edges, row)
