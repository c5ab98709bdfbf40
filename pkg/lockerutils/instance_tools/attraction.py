from typing import Any
import math
import numpy as np

#smallest positive double; attractions are floored there so they stay strictly positive
_TINY = np.finfo(float).tiny


def attraction_from_distance(distance: Any,
                             alpha:    float):
    """ Exponential decay of the attraction of a locker with distance

    The attraction of a locker located at a distance L from a customer zone is

    .. math::
        a = e^{-\\alpha L}

    with alpha the sensitivity of customers to distance. Large values of alpha
    mean that customers almost always patronize the nearest locker.
    Results that would underflow to zero are set to the smallest positive double
    so that attractions remain strictly positive.

    Args:
        distance:  (array like) nonnegative distance(s), in length units
        alpha:     nonnegative distance sensitivity

    Returns:
        A float for scalar input, a numpy array otherwise, with values in (0, 1]

    Example:

        >>> import lockerutils.instance_tools as instance_tools
        >>> print(round(instance_tools.attraction_from_distance(1., 1.), 6))
        0.367879
        >>> print(instance_tools.attraction_from_distance(0., 5.))
        1.0
    """

    from ..errors import ValidationError

    if alpha < 0 or math.isnan(alpha):
        raise ValidationError('alpha', 'distance sensitivity must be nonnegative, got ' + str(alpha))
    dist = np.asarray(distance, dtype=float)
    if np.any(dist < 0) or np.any(np.isnan(dist)):
        raise ValidationError('distance', 'distances must be nonnegative')

    attraction = np.maximum(np.exp(-alpha * dist), _TINY)
    if attraction.ndim == 0:
        return float(attraction)
    return attraction


def outside_attraction(xi: float):
    """ Attraction of the outside (no locker) option

    Given by xi * e^-1 where xi controls how attractive the outside option is.

    Args:
        xi:   positive scale

    Returns:
        xi * e^-1

    Example:

        >>> import math
        >>> import lockerutils.instance_tools as instance_tools
        >>> print(round(instance_tools.outside_attraction(0.5), 6))
        0.18394
        >>> print(round(instance_tools.outside_attraction(math.e), 12))
        1.0
    """

    from ..errors import ValidationError

    if not xi > 0 or math.isinf(xi):
        raise ValidationError('xi', 'outside option scale must be positive and finite, got ' + str(xi))
    return xi * math.exp(-1.)


def attraction_matrix(zone_xy:   Any,
                      locker_xy: Any,
                      alpha:     float):
    """ Attraction of every locker for every zone from their positions

    Distances are Euclidean.

    Args:
        zone_xy:    (m, 2) array of zone coordinates
        locker_xy:  (n, 2) array of locker coordinates
        alpha:      nonnegative distance sensitivity

    Returns:
        (m, n) array of attractions
    """
    zone_xy = np.asarray(zone_xy, dtype=float).reshape(-1, 2)
    locker_xy = np.asarray(locker_xy, dtype=float).reshape(-1, 2)
    diff = zone_xy[:, np.newaxis, :] - locker_xy[np.newaxis, :, :]
    distance = np.sqrt(np.sum(diff**2, axis=2))
    return np.atleast_2d(attraction_from_distance(distance, alpha)).reshape(zone_xy.shape[0], locker_xy.shape[0])
