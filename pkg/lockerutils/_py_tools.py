"""
Small helpers shared by the different tools of the package.
"""

import math
import numpy as np


def cost_vector(n_lockers, costs=None, default=None):
    """ Facility costs as a numpy array of length n_lockers

    Args:
        n_lockers:  number of candidate lockers
        costs:      None, a scalar (same cost f for every locker, the usual setting
                    of generated instances) or an array-like of length n_lockers
        default:    array used when costs is None, typically the per-locker costs
                    stored in an instance. Zeros if not provided.

    Returns:
        A float64 array of nonnegative costs

    Example:

        >>> import lockerutils._py_tools as py_tools
        >>> print(py_tools.cost_vector(3, 0.5))
        [0.5 0.5 0.5]
    """

    from .errors import ValidationError

    if costs is None:
        if default is None:
            return np.zeros(n_lockers)
        costs = default

    if np.isscalar(costs):
        try:
            f_val = float(costs)
        except (TypeError, ValueError):
            raise TypeError('costs must be a number or an array of numbers')
        out = np.full(n_lockers, f_val)
    else:
        try:
            out = np.array(costs, dtype=float).ravel()
        except (TypeError, ValueError):
            raise TypeError('costs must be a number or an array of numbers')
        if out.size != n_lockers:
            raise ValidationError('cost', 'expected ' + str(n_lockers) + ' costs, got ' + str(out.size))

    if not np.all(np.isfinite(out)) or np.any(out < 0.):
        raise ValidationError('cost', 'facility costs must be finite and nonnegative')

    return out


def fmt_float(value):
    """ Decimal text for a float, 17 significant digits, 'inf' for infinity

    Example:

        >>> import lockerutils._py_tools as py_tools
        >>> py_tools.fmt_float(0.1)
        '0.10000000000000001'
        >>> py_tools.fmt_float(float('inf'))
        'inf'
    """
    value = float(value)
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return format(value, '.17g')


def parse_float(text):
    """ Inverse of fmt_float, also accepts plain numbers """
    if isinstance(text, str):
        if text.strip().lower() in ('inf', '+inf', 'infinity'):
            return math.inf
        if text.strip().lower() == '-inf':
            return -math.inf
    return float(text)


def output_dir(path):
    """ Make sure the directory that will hold the file 'path' exists

    Sweep workers and concurrent command line runs may share an output
    directory, so a directory created by someone else between the check and
    the creation is not an error.

    Returns:
        The absolute name of the directory
    """

    import os

    this_dir = os.path.dirname(os.path.abspath(path))
    try:
        os.makedirs(this_dir, exist_ok=True)
    except FileExistsError:
        # a file, not a directory, has that name
        raise NotADirectoryError('cannot write ' + str(path) + ', ' + this_dir + ' is not a directory')
    return this_dir
