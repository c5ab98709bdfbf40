"""
Text exports of a :class:`Formulation`.

Three formats are available:

    lp     the LP file syntax understood by most MIP solvers (Maximize/Minimize,
           Subject To, Bounds, Binaries, End). The fractional objective of the
           IP kinds and the cones of the MICQP are not linear; they are written
           as comments.
    conic  a line oriented block format for conic solvers, see docs/formats.rst
    json   the complete structure, read back by :func:`formulation_from_json`

Every export starts with a header naming the format version.
"""

import json
import logging
import math
import warnings

FORMAT_VERSION = 1
JSON_TAG = 'lockerutils-formulation/' + str(FORMAT_VERSION)

_ALIASES = {'lp': 'lp', 'lp_text': 'lp',
            'conic': 'conic', 'conic_text': 'conic',
            'json': 'json'}


def _num(value):
    value = float(value)
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    if value == int(value) and abs(value) < 1e15:
        return str(int(value))
    return repr(value)


_TERMS_PER_LINE = 10


def _terms(coefs):
    """ Signed terms of an LP style linear expression: ['y_1_3', '+ y_1_1', '- 2 x_1'] """
    parts = []
    for name, coef in coefs:
        sign = '-' if coef < 0 else '+'
        mag = abs(coef)
        term = name if mag == 1. else _num(mag) + ' ' + name
        if not parts:
            parts.append(term if sign == '+' else '- ' + term)
        else:
            parts.append(sign + ' ' + term)
    return parts


def _linear(coefs):
    """ LP style linear expression: 'y_1_3 + y_1_1', '2 y_1_3 - x_1' """
    parts = _terms(coefs)
    return ' '.join(parts) if parts else '0'


def _wrapped(first, coefs, last=''):
    """ Lines of 'first expression last', at most _TERMS_PER_LINE terms per line

    Continuation lines are indented; LP readers join them with the line above.
    """
    parts = _terms(coefs) or ['0']
    chunks = [' '.join(parts[start:start + _TERMS_PER_LINE]) for start in range(0, len(parts), _TERMS_PER_LINE)]
    lines = [first + chunks[0]] + ['   ' + chunk for chunk in chunks[1:]]
    lines[-1] += last
    return lines


def _header(formulation, comment):
    meta = formulation.meta
    return [comment + ' lockerutils ' + formulation.kind + ' model, format version ' + str(FORMAT_VERSION),
            comment + ' zones ' + str(meta.get('m')) + ', lockers ' + str(meta.get('n'))
            + ', gamma ' + str(meta.get('gamma'))]


def _to_lp(formulation):
    logger = logging.getLogger(__name__)

    lines = _header(formulation, '\\')
    if formulation.fractional:
        lines.append('\\ objective = linear part below + sum of the fractional zone revenues:')
        for term in formulation.fractional:
            attraction = _linear([(vv, cc) for vv, cc in term.terms])
            lines.append('\\   ' + _num(term.demand) + ' * (' + attraction + ') / ('
                         + attraction + ' + ' + _num(term.outside) + ')')
    if formulation.cones:
        message = 'LP text cannot hold conic rows, they are written as comments'
        warnings.warn(message, UserWarning)
        logger.warning(message)

    lines.append('Maximize' if formulation.objective.sense == 'max' else 'Minimize')
    lines.extend(_wrapped(' obj: ', formulation.objective.coefs))

    lines.append('Subject To')
    for row in formulation.rows:
        lines.extend(_wrapped(' ' + row.name + ': ', row.coefs, ' ' + row.sense + ' ' + _num(row.rhs)))
    if formulation.cones:
        lines.append('\\ rotated cones u * v >= 1, i.e. ||(2, u - v)|| <= u + v:')
        for cone in formulation.cones:
            lines.append('\\  ' + cone.name + ': ' + cone.u + ' * ' + cone.v + ' >= 1')

    continuous = [var for var in formulation.variables if var.kind != 'binary']
    if continuous:
        lines.append('Bounds')
        for var in continuous:
            if math.isinf(var.upper):
                lines.append(' ' + var.name + ' >= ' + _num(var.lower))
            else:
                lines.append(' ' + _num(var.lower) + ' <= ' + var.name + ' <= ' + _num(var.upper))

    binaries = [var.name for var in formulation.variables if var.kind == 'binary']
    if binaries:
        lines.append('Binaries')
        for start in range(0, len(binaries), _TERMS_PER_LINE):
            lines.append(' ' + ' '.join(binaries[start:start + _TERMS_PER_LINE]))
    lines.append('End')
    return '\n'.join(lines) + '\n'


def _sparse(coefs):
    return ' '.join(name + ' ' + _num(coef) for name, coef in coefs)


def _to_conic(formulation):
    lines = _header(formulation, '#')
    lines.append('KIND ' + formulation.kind)
    lines.append('SENSE ' + formulation.objective.sense.upper())
    lines.append('VARS ' + str(len(formulation.variables)))
    for var in formulation.variables:
        kind = 'BIN' if var.kind == 'binary' else 'CONT'
        lines.append(var.name + ' ' + kind + ' ' + _num(var.lower) + ' ' + _num(var.upper))
    lines.append('OBJ ' + str(len(formulation.objective.coefs)) + ' ' + _num(formulation.objective.constant))
    for name, coef in formulation.objective.coefs:
        lines.append(name + ' ' + _num(coef))
    if formulation.fractional:
        lines.append('FRAC ' + str(len(formulation.fractional)))
        for term in formulation.fractional:
            lines.append(str(term.zone + 1) + ' ' + _num(term.demand) + ' ' + _num(term.outside)
                         + ' ' + str(len(term.terms)) + ' ' + _sparse(term.terms))
    sense_code = {'<=': 'LE', '>=': 'GE', '=': 'EQ'}
    lines.append('ROWS ' + str(len(formulation.rows)))
    for row in formulation.rows:
        lines.append(row.name + ' ' + sense_code[row.sense] + ' ' + _num(row.rhs)
                     + ' ' + str(len(row.coefs)) + ' ' + _sparse(row.coefs))
    lines.append('CONES ' + str(len(formulation.cones)))
    for cone in formulation.cones:
        lines.append('RQUAD ' + cone.name + ' ' + cone.u + ' ' + cone.v + ' 1')
    lines.append('END')
    return '\n'.join(lines) + '\n'


def _bound(value):
    return 'inf' if math.isinf(value) else value


def formulation_to_dict(formulation):
    """ JSON compatible dictionary of a formulation, infinite bounds become 'inf' """
    return {'format': JSON_TAG,
            'kind': formulation.kind,
            'meta': formulation.meta,
            'variables': [[var.name, var.kind, _bound(var.lower), _bound(var.upper)]
                          for var in formulation.variables],
            'objective': {'sense': formulation.objective.sense,
                          'constant': formulation.objective.constant,
                          'coefs': [list(pair) for pair in formulation.objective.coefs]},
            'fractional': [{'zone': term.zone, 'demand': term.demand, 'outside': term.outside,
                            'terms': [list(pair) for pair in term.terms]}
                           for term in formulation.fractional],
            'rows': [{'name': row.name, 'sense': row.sense, 'rhs': row.rhs,
                      'coefs': [list(pair) for pair in row.coefs]}
                     for row in formulation.rows],
            'cones': [[cone.name, cone.u, cone.v] for cone in formulation.cones]}


def export(formulation, fmt='lp'):
    """ Text of a formulation in one of the export formats

    Args:
        formulation:  a :class:`Formulation`
        fmt:          'lp', 'conic' or 'json' ('LP_TEXT' and 'CONIC_TEXT' are accepted)

    Returns:
        str

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> import lockerutils.model_tools as model_tools
        >>> inst = instance_tools.choice_overload_example(gamma=0.5)
        >>> text = model_tools.export(model_tools.build_ip_d(inst, costs=0.), 'lp')
        >>> ' ddc_1_3_1: y_1_3 + y_1_1 <= 1' in text.splitlines()
        True
    """
    key = _ALIASES.get(str(fmt).lower())
    if key is None:
        raise ValueError('unknown export format ' + repr(fmt) + ', expected one of lp, conic, json')
    if key == 'lp':
        return _to_lp(formulation)
    if key == 'conic':
        return _to_conic(formulation)
    return json.dumps(formulation_to_dict(formulation), indent=1) + '\n'


def formulation_from_json(text):
    """ Formulation from the text of a JSON export

    Raises:
        InstanceParseError: text is not a JSON export of a formulation
    """

    from .._py_tools import parse_float
    from ..errors import InstanceParseError
    from .formulation import Formulation, Variable, Row, Cone, Objective, FractionalTerm

    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise InstanceParseError(err.msg, line=err.lineno, column=err.colno)
    if not isinstance(data, dict) or data.get('format') != JSON_TAG:
        raise InstanceParseError('not a formulation file, expected format "' + JSON_TAG + '"', field='format')

    try:
        variables = [Variable(name, kind, parse_float(lower), parse_float(upper))
                     for name, kind, lower, upper in data['variables']]
        objective = Objective(data['objective']['sense'],
                              [tuple(pair) for pair in data['objective']['coefs']],
                              data['objective']['constant'])
        fractional = [FractionalTerm(term['zone'], term['demand'], term['outside'],
                                     [tuple(pair) for pair in term['terms']])
                      for term in data['fractional']]
        rows = [Row(row['name'], [tuple(pair) for pair in row['coefs']], row['sense'], row['rhs'])
                for row in data['rows']]
        cones = [Cone(name, uu, vv) for name, uu, vv in data['cones']]
        return Formulation(kind=data['kind'], variables=variables, rows=rows, cones=cones,
                           objective=objective, fractional=fractional, meta=data['meta'])
    except KeyError as err:
        raise InstanceParseError('missing entry', field=str(err.args[0]))
    except (TypeError, ValueError) as err:
        raise InstanceParseError('malformed formulation: ' + str(err))
