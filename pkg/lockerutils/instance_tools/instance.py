"""
Data model of the locker location problem.

An :class:`Instance` gathers customer zones (index set I), candidate lockers
(index set J), the attraction a_ij of every locker for every zone, the
attraction a_i0 of the outside option and the dominance threshold gamma.

Instances are immutable: arrays are flagged read-only and the ``with_*``
methods return modified copies.
"""

from dataclasses import dataclass, field, replace
from typing import Any, Optional, Tuple
import json
import math
import numpy as np

from ..errors import ValidationError


@dataclass(frozen=True)
class Zone:
    """ A customer zone

    Attributes:
        id:        index of the zone in the instance
        demand:    positive demand d_i
        position:  optional (x, y) coordinates, in length units
    """
    id: int
    demand: float
    position: Optional[Tuple[float, float]] = None

    def __post_init__(self):
        demand = float(self.demand)
        if not demand > 0 or math.isinf(demand):
            raise ValidationError('demand', 'demand of zone ' + str(self.id) + ' must be positive and finite, got ' + str(self.demand))
        object.__setattr__(self, 'demand', demand)
        if self.position is not None:
            object.__setattr__(self, 'position', (float(self.position[0]), float(self.position[1])))


@dataclass(frozen=True)
class Locker:
    """ A candidate locker facility

    Attributes:
        id:        index of the locker in the instance
        cost:      nonnegative facility cost f_j
        position:  optional (x, y) coordinates, in length units
    """
    id: int
    cost: float = 0.
    position: Optional[Tuple[float, float]] = None

    def __post_init__(self):
        cost = float(self.cost)
        if not cost >= 0 or math.isinf(cost):
            raise ValidationError('cost', 'cost of locker ' + str(self.id) + ' must be nonnegative and finite, got ' + str(self.cost))
        object.__setattr__(self, 'cost', cost)
        if self.position is not None:
            object.__setattr__(self, 'position', (float(self.position[0]), float(self.position[1])))


def _read_only(arr):
    arr = np.array(arr, dtype=float)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class Instance:
    """ A locker location problem under the threshold Luce model

    Args:
        zones:               sequence of :class:`Zone`, length m
        lockers:             sequence of :class:`Locker`, length n
        attraction:          (m, n) array of strictly positive attractions a_ij
        outside_attraction:  length m array of strictly positive attractions a_i0
        gamma:               nonnegative dominance threshold. math.inf means that no locker
                             ever dominates another one (multinomial logit).
        meta:                free-form provenance record (seed, generator parameters...).
                             It must be serializable to JSON.

    Example:

        The two zone, three locker instance used throughout the documentation

        >>> import lockerutils.instance_tools as instance_tools
        >>> inst = instance_tools.Instance(
        ...     zones=[instance_tools.Zone(0, 50.), instance_tools.Zone(1, 50.)],
        ...     lockers=[instance_tools.Locker(j) for j in range(3)],
        ...     attraction=[[2., 2., 3.1], [2., 2., 3.1]],
        ...     outside_attraction=[4., 4.],
        ...     gamma=0.5)
        >>> inst.m, inst.n
        (2, 3)
    """
    zones: Tuple[Zone, ...]
    lockers: Tuple[Locker, ...]
    attraction: Any
    outside_attraction: Any
    gamma: float
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        zones = tuple(self.zones)
        lockers = tuple(self.lockers)
        object.__setattr__(self, 'zones', zones)
        object.__setattr__(self, 'lockers', lockers)
        m = len(zones)
        n = len(lockers)

        try:
            attraction = np.array(self.attraction, dtype=float)
            outside = np.array(self.outside_attraction, dtype=float).ravel()
        except (TypeError, ValueError):
            raise TypeError('attraction and outside_attraction must be convertible to numeric arrays')
        if attraction.size == 0:
            attraction = attraction.reshape(m, n)
        if attraction.shape != (m, n):
            raise ValidationError('attraction', 'expected a ' + str(m) + 'x' + str(n) + ' matrix, got shape ' + str(attraction.shape))
        if outside.shape != (m,):
            raise ValidationError('outside', 'expected ' + str(m) + ' values, got ' + str(outside.size))
        if not np.all(attraction > 0) or not np.all(np.isfinite(attraction)):
            raise ValidationError('attraction', 'attraction must be positive and finite')
        if not np.all(outside > 0) or not np.all(np.isfinite(outside)):
            raise ValidationError('outside', 'outside attraction must be positive and finite')
        for ii, zone in enumerate(zones):
            if zone.id != ii:
                raise ValidationError('zones', 'zone at position ' + str(ii) + ' has id ' + str(zone.id))
        for jj, locker in enumerate(lockers):
            if locker.id != jj:
                raise ValidationError('lockers', 'locker at position ' + str(jj) + ' has id ' + str(locker.id))

        try:
            gamma = float(self.gamma)
        except (TypeError, ValueError):
            raise ValidationError('gamma', 'gamma must be a number or inf, got ' + repr(self.gamma))
        if not gamma >= 0:
            raise ValidationError('gamma', 'gamma must be nonnegative, got ' + str(self.gamma))

        try:
            meta = json.loads(json.dumps(dict(self.meta), sort_keys=True))
        except (TypeError, ValueError):
            raise ValidationError('meta', 'meta must be a JSON serializable mapping')

        object.__setattr__(self, 'attraction', _read_only(attraction))
        object.__setattr__(self, 'outside_attraction', _read_only(outside))
        object.__setattr__(self, 'gamma', gamma)
        object.__setattr__(self, 'meta', meta)
        object.__setattr__(self, '_demand', _read_only([zone.demand for zone in zones]))
        object.__setattr__(self, '_cost', _read_only([locker.cost for locker in lockers]))

    @property
    def m(self):
        """number of customer zones"""
        return len(self.zones)

    @property
    def n(self):
        """number of candidate lockers"""
        return len(self.lockers)

    @property
    def demand(self):
        """length m array of demands d_i"""
        return self._demand

    @property
    def cost(self):
        """length n array of facility costs f_j"""
        return self._cost

    @property
    def total_demand(self):
        return math.fsum(self._demand)

    @property
    def zone_xy(self):
        """(m, 2) array of zone positions or None if some zone has no position"""
        if self.m == 0 or any(zone.position is None for zone in self.zones):
            return None
        return np.array([zone.position for zone in self.zones])

    @property
    def locker_xy(self):
        """(n, 2) array of locker positions or None if some locker has no position"""
        if self.n == 0 or any(locker.position is None for locker in self.lockers):
            return None
        return np.array([locker.position for locker in self.lockers])

    def with_gamma(self, gamma):
        """ Same instance with another dominance threshold """
        return replace(self, gamma=gamma)

    def with_costs(self, costs):
        """ Same instance with other facility costs (scalar or length n) """
        from .._py_tools import cost_vector
        cost = cost_vector(self.n, costs)
        lockers = [replace(locker, cost=cost[jj]) for jj, locker in enumerate(self.lockers)]
        return replace(self, lockers=lockers)

    def with_alpha(self, alpha):
        """ Same geometry, attractions recomputed for another distance sensitivity

        Requires zone and locker positions.
        """
        from .attraction import attraction_matrix
        zone_xy = self.zone_xy
        locker_xy = self.locker_xy
        if zone_xy is None or locker_xy is None:
            raise ValidationError('alpha', 'attractions can only be recomputed for instances with zone and locker positions')
        meta = dict(self.meta)
        meta['alpha'] = float(alpha)
        return replace(self, attraction=attraction_matrix(zone_xy, locker_xy, alpha), meta=meta)

    def with_xi(self, xi):
        """ Same instance with outside attractions xi * e^-1 for every zone """
        from .attraction import outside_attraction
        meta = dict(self.meta)
        meta['xi'] = float(xi)
        return replace(self, outside_attraction=np.full(self.m, outside_attraction(xi)), meta=meta)

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return (self.zones == other.zones
                and self.lockers == other.lockers
                and np.array_equal(self.attraction, other.attraction)
                and np.array_equal(self.outside_attraction, other.outside_attraction)
                and self.gamma == other.gamma
                and self.meta == other.meta)

    def __repr__(self):
        return 'Instance(m=' + str(self.m) + ', n=' + str(self.n) + ', gamma=' + str(self.gamma) + ')'
