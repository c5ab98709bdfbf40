"""
Decision vectors and the outputs of choice evaluations.

A :class:`LocationDecision` says which lockers are open (x_j), a
:class:`RestrictionDecision` says which open lockers each zone is offered
(y_ij). Under the threshold Luce model only nondominated offered lockers
get a positive probability, so a valid restriction offers every zone an
antichain: a set of lockers none of which dominates another.
"""

from dataclasses import dataclass
from typing import Any
import numpy as np

from ..errors import ContractViolation


def _bool_array(values, shape, name):
    arr = np.array(values, dtype=bool)
    if arr.size == 0:
        arr = arr.reshape(shape)
    if arr.shape != shape:
        from ..errors import ValidationError
        raise ValidationError(name, 'expected shape ' + str(shape) + ', got ' + str(arr.shape))
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class LocationDecision:
    """ Which lockers are open

    Attributes:
        open:  boolean vector of length n, x_j
    """
    open: Any

    def __post_init__(self):
        arr = np.array(self.open, dtype=bool).ravel()
        arr.flags.writeable = False
        object.__setattr__(self, 'open', arr)

    @classmethod
    def from_indices(cls, n, indices):
        """ Decision opening the lockers listed in indices """
        arr = np.zeros(n, dtype=bool)
        arr[list(indices)] = True
        return cls(arr)

    @property
    def n(self):
        return self.open.size

    @property
    def indices(self):
        """ Sorted tuple of open locker indices, the set S """
        return tuple(int(jj) for jj in np.flatnonzero(self.open))

    @property
    def count(self):
        return int(np.count_nonzero(self.open))

    def __eq__(self, other):
        if not isinstance(other, LocationDecision):
            return NotImplemented
        return np.array_equal(self.open, other.open)

    def __repr__(self):
        return 'LocationDecision(open=' + str(list(self.indices)) + ')'


@dataclass(frozen=True, eq=False)
class RestrictionDecision:
    """ Which open lockers each zone may use

    Attributes:
        allowed:  (m, n) boolean matrix, y_ij
    """
    allowed: Any

    def __post_init__(self):
        arr = np.array(self.allowed, dtype=bool)
        if arr.ndim != 2:
            from ..errors import ValidationError
            raise ValidationError('allowed', 'restriction must be a 2D matrix')
        arr.flags.writeable = False
        object.__setattr__(self, 'allowed', arr)

    @classmethod
    def from_sets(cls, m, n, sets):
        """ Restriction from one iterable of locker indices per zone """
        arr = np.zeros((m, n), dtype=bool)
        for ii, this_set in enumerate(sets):
            arr[ii, list(this_set)] = True
        return cls(arr)

    @property
    def shape(self):
        return self.allowed.shape

    def row(self, ii):
        """ Sorted tuple of lockers offered to zone ii, the set S_i """
        return tuple(int(jj) for jj in np.flatnonzero(self.allowed[ii]))

    def check_consistent(self, location):
        """ Raise ContractViolation unless y_ij <= x_j everywhere """
        if self.allowed.shape[1] != location.n:
            raise ContractViolation('restriction has ' + str(self.allowed.shape[1])
                                    + ' columns but there are ' + str(location.n) + ' lockers')
        bad = self.allowed & ~location.open[np.newaxis, :]
        if bad.any():
            ii, jj = np.argwhere(bad)[0]
            raise ContractViolation('locker ' + str(int(jj)) + ' is offered but not open (y > x)', zone=int(ii))

    def __eq__(self, other):
        if not isinstance(other, RestrictionDecision):
            return NotImplemented
        return np.array_equal(self.allowed, other.allowed)


@dataclass(frozen=True, eq=False)
class ChoiceDistribution:
    """ Choice probabilities of every zone

    Attributes:
        locker:   (m, n) array, p_ij
        outside:  length m array, p_i0
    """
    locker: Any
    outside: Any

    def row_sums(self):
        return self.outside + np.sum(self.locker, axis=1)


@dataclass(frozen=True)
class ProfitBreakdown:
    """ Revenue, cost and profit of a decision

    Attributes:
        revenue:           R, expected captured demand
        facility_cost:     F, cost of the open lockers
        profit:            P = R - F
        lost_demand:       demand captured by the outside option, sum_i d_i / z_i
        per_zone_revenue:  length m array of captured demand per zone
    """
    revenue: float
    facility_cost: float
    profit: float
    lost_demand: float
    per_zone_revenue: Any
