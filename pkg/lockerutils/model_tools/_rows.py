"""
Row families shared by the builders.
"""

from .formulation import Row, Variable, FractionalTerm, x_name, y_name


def location_variables(instance):
    xs = [Variable(x_name(jj)) for jj in range(instance.n)]
    ys = [Variable(y_name(ii, jj)) for ii in range(instance.m) for jj in range(instance.n)]
    return xs + ys


def linking_rows(instance):
    """ y_ij - x_j <= 0 for every zone and locker """
    return [Row('link_' + str(ii + 1) + '_' + str(jj + 1),
                ((y_name(ii, jj), 1.), (x_name(jj), -1.)), '<=', 0.)
            for ii in range(instance.m) for jj in range(instance.n)]


def ddc_rows(ii, graph):
    """ y_ij + y_ik <= 1 for every dominance pair (j, k) """
    return [Row('ddc_' + str(ii + 1) + '_' + str(jj + 1) + '_' + str(kk + 1),
                ((y_name(ii, jj), 1.), (y_name(ii, kk), 1.)), '<=', 1.)
            for jj, kk in graph.edges]


def adc_rows(ii, graph):
    """ sum_{k in Omega_ij} y_ik + |Omega_ij| y_ij <= |Omega_ij| when Omega_ij is not empty """
    rows = []
    for jj in graph.vertices:
        omega = sorted(graph.digraph.successors(jj))
        if not omega:
            continue
        size = float(len(omega))
        coefs = [(y_name(ii, jj), size)] + [(y_name(ii, kk), 1.) for kk in omega]
        rows.append(Row('adc_' + str(ii + 1) + '_' + str(jj + 1), coefs, '<=', size))
    return rows


def path_rows(ii, graph, extra_paths=0):
    """ sum over a dominance chain of y_ij <= 1, chains of one locker are skipped """
    from ..graph_tools import disjoint_long_paths
    rows = []
    for pp, path in enumerate(disjoint_long_paths(graph, extra_paths)):
        rows.append(Row('path_' + str(ii + 1) + '_' + str(pp + 1),
                        [(y_name(ii, jj), 1.) for jj in path.vertex_sequence], '<=', 1.))
    return rows


def dominance_rows(instance, block, with_paths=False, extra_paths=0):
    """ Dominance rows of every zone, DDC or ADC plus path inequalities """
    from ..graph_tools import build
    from .formulation import DDC, ADC_PATH

    if block not in (DDC, ADC_PATH):
        raise ValueError('unknown dominance block ' + repr(block))

    rows = []
    for ii in range(instance.m):
        graph = build(instance, ii)
        if block == DDC:
            rows += ddc_rows(ii, graph)
            if with_paths:
                rows += path_rows(ii, graph, extra_paths)
        else:
            rows += adc_rows(ii, graph)
            rows += path_rows(ii, graph, extra_paths)
    return rows


def fractional_terms(instance):
    return [FractionalTerm(zone=ii,
                           demand=instance.demand[ii],
                           outside=instance.outside_attraction[ii],
                           terms=[(y_name(ii, jj), instance.attraction[ii, jj]) for jj in range(instance.n)])
            for ii in range(instance.m)]


def meta(instance, **options):
    from .._py_tools import fmt_float
    out = {'m': instance.m, 'n': instance.n, 'gamma': fmt_float(instance.gamma)}
    out.update(options)
    return out
