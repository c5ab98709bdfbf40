def to_dot(graph):
    """ Graphviz DOT text of a dominance graph

    Vertices are labelled with 1-based locker numbers and their attraction.

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.graph_tools as graph_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> print(graph_tools.to_dot(graph_tools.build(inst, 0)))
        digraph zone_1 {
          rankdir=LR;
          1 [label="1\\na=2"];
          2 [label="2\\na=2"];
          3 [label="3\\na=3.1"];
          3 -> 1;
          3 -> 2;
        }
    """
    lines = ['digraph zone_' + str(graph.zone + 1) + ' {', '  rankdir=LR;']
    for vv in graph.vertices:
        label = str(vv + 1) + '\\na=' + format(float(graph.attraction[vv]), '.6g')
        lines.append('  ' + str(vv + 1) + ' [label="' + label + '"];')
    for jj, kk in graph.edges:
        lines.append('  ' + str(jj + 1) + ' -> ' + str(kk + 1) + ';')
    lines.append('}')
    return '\n'.join(lines)
