"""
Reading and writing instances as JSON documents.

The layout of the file is documented in docs/formats.rst. In short::

    {
      "format": "lockerutils-instance/1",
      "m": 2,
      "n": 3,
      "gamma": 0.5,              (a number or the string "inf")
      "demand": [...],           (m numbers)
      "cost": [...],             (n numbers)
      "outside": [...],          (m numbers, a_i0)
      "attraction": [[...], ...],(m rows of n numbers, a_ij)
      "zone_xy": [[x, y], ...],  (optional)
      "locker_xy": [[x, y], ...],(optional)
      "meta": {...}
    }

Numbers are written with 17 significant digits so that reading a file back
gives exactly the same doubles.
"""

import hashlib
import json
import math
import numpy as np

from .._py_tools import fmt_float
from ..errors import InstanceParseError

FORMAT_TAG = 'lockerutils-instance/1'
_REQUIRED = ('m', 'n', 'demand', 'cost', 'attraction', 'outside', 'gamma', 'meta')


def _vec(values):
    return '[' + ', '.join(fmt_float(val) for val in values) + ']'


def _rows(matrix):
    if len(matrix) == 0:
        return '[]'
    return '[\n' + ',\n'.join('    ' + _vec(row) for row in matrix) + '\n  ]'


def dumps(instance):
    """ Text of the JSON document describing an instance """

    gamma = '"inf"' if math.isinf(instance.gamma) else fmt_float(instance.gamma)
    parts = ['  "format": "' + FORMAT_TAG + '"',
             '  "m": ' + str(instance.m),
             '  "n": ' + str(instance.n),
             '  "gamma": ' + gamma,
             '  "demand": ' + _vec(instance.demand),
             '  "cost": ' + _vec(instance.cost),
             '  "outside": ' + _vec(instance.outside_attraction),
             '  "attraction": ' + _rows(instance.attraction)]
    if instance.zone_xy is not None:
        parts.append('  "zone_xy": ' + _rows(instance.zone_xy))
    if instance.locker_xy is not None:
        parts.append('  "locker_xy": ' + _rows(instance.locker_xy))
    parts.append('  "meta": ' + json.dumps(instance.meta, sort_keys=True))
    return '{\n' + ',\n'.join(parts) + '\n}\n'


def save(instance, path):
    """ Write an instance to a JSON file

    Args:
        instance:  the :class:`Instance` to write
        path:      destination file name
    """
    import logging
    logger = logging.getLogger(__name__)
    with open(path, 'w', encoding='utf-8', newline='\n') as fid:
        fid.write(dumps(instance))
    logger.info('instance written to ' + str(path))


def _number_array(doc, name, shape):
    try:
        arr = np.array(doc[name], dtype=float)
    except (TypeError, ValueError):
        raise InstanceParseError('expected numbers', field=name)
    if arr.size == 0:
        arr = arr.reshape(shape)
    if arr.shape != shape:
        raise InstanceParseError('expected shape ' + str(shape) + ', got ' + str(arr.shape), field=name)
    return arr


def loads(text):
    """ Instance from the text of a JSON document

    Raises:
        InstanceParseError: the document is not valid JSON or misses/garbles a field
        ValidationError:    the document is well formed but describes an invalid instance
    """

    from .instance import Instance, Zone, Locker

    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise InstanceParseError(err.msg, line=err.lineno, column=err.colno)
    if not isinstance(doc, dict):
        raise InstanceParseError('top level must be an object')
    for name in _REQUIRED:
        if name not in doc:
            raise InstanceParseError('missing required field', field=name)

    m = doc['m']
    n = doc['n']
    for name, val in (('m', m), ('n', n)):
        if not isinstance(val, int) or isinstance(val, bool) or val < 0:
            raise InstanceParseError('expected a nonnegative integer', field=name)

    gamma = doc['gamma']
    if isinstance(gamma, str):
        if gamma.strip().lower() != 'inf':
            raise InstanceParseError('expected a number or "inf", got ' + repr(gamma), field='gamma')
        gamma = math.inf
    elif not isinstance(gamma, (int, float)) or isinstance(gamma, bool):
        raise InstanceParseError('expected a number or "inf"', field='gamma')

    demand = _number_array(doc, 'demand', (m,))
    cost = _number_array(doc, 'cost', (n,))
    outside = _number_array(doc, 'outside', (m,))
    attraction = _number_array(doc, 'attraction', (m, n))
    zone_xy = [None] * m
    locker_xy = [None] * n
    if 'zone_xy' in doc:
        zone_xy = [tuple(pos) for pos in _number_array(doc, 'zone_xy', (m, 2))]
    if 'locker_xy' in doc:
        locker_xy = [tuple(pos) for pos in _number_array(doc, 'locker_xy', (n, 2))]
    if not isinstance(doc['meta'], dict):
        raise InstanceParseError('expected an object', field='meta')

    return Instance(zones=[Zone(ii, demand[ii], zone_xy[ii]) for ii in range(m)],
                    lockers=[Locker(jj, cost[jj], locker_xy[jj]) for jj in range(n)],
                    attraction=attraction,
                    outside_attraction=outside,
                    gamma=float(gamma),
                    meta=doc['meta'])


def load(path):
    """ Read an instance from a JSON file written by :func:`save` """
    with open(path, 'r', encoding='utf-8') as fid:
        return loads(fid.read())


def instance_hash(instance):
    """ sha256 hex digest of the serialized instance """
    return hashlib.sha256(dumps(instance).encode('utf-8')).hexdigest()
