from dataclasses import dataclass
from typing import Tuple
import math

from ..errors import ValidationError


@dataclass(frozen=True)
class GeneratorSpec:
    """ Recipe for a synthetic instance

    Zones and lockers are scattered uniformly on a square, demands are uniform
    on demand_range, attractions decay exponentially with Euclidean distance
    and every zone gets the same outside attraction.

    Attributes:
        zone_count:    number of customer zones m (>= 1)
        locker_count:  number of candidate lockers n (>= 1)
        square_side:   side of the square [0, side]^2 where points are drawn
        demand_range:  (lo, hi) with 0 < lo <= hi
        alpha:         distance sensitivity, >= 0
        xi:            outside option scale, > 0
        seed:          64-bit unsigned seed of the random stream
        gamma:         dominance threshold written in the instance, inf by default
    """
    zone_count: int
    locker_count: int
    square_side: float
    demand_range: Tuple[float, float] = (1., 1000.)
    alpha: float = 1.
    xi: float = 1.
    seed: int = 0
    gamma: float = math.inf

    def __post_init__(self):
        if not isinstance(self.zone_count, int) or isinstance(self.zone_count, bool) or self.zone_count < 1:
            raise ValidationError('zone_count', 'must be an integer >= 1, got ' + repr(self.zone_count))
        if not isinstance(self.locker_count, int) or isinstance(self.locker_count, bool) or self.locker_count < 1:
            raise ValidationError('locker_count', 'must be an integer >= 1, got ' + repr(self.locker_count))
        if not self.square_side > 0 or math.isinf(self.square_side):
            raise ValidationError('square_side', 'must be positive and finite, got ' + repr(self.square_side))
        try:
            lo, hi = (float(val) for val in self.demand_range)
        except (TypeError, ValueError):
            raise ValidationError('demand_range', 'must be a pair of numbers (lo, hi)')
        if not (0 < lo <= hi) or math.isinf(hi):
            raise ValidationError('demand_range', 'must satisfy 0 < lo <= hi, got ' + repr(tuple(self.demand_range)))
        object.__setattr__(self, 'demand_range', (lo, hi))
        if not self.alpha >= 0 or math.isinf(self.alpha):
            raise ValidationError('alpha', 'must be nonnegative and finite, got ' + repr(self.alpha))
        if not self.xi > 0 or math.isinf(self.xi):
            raise ValidationError('xi', 'must be positive and finite, got ' + repr(self.xi))
        if not isinstance(self.seed, int) or isinstance(self.seed, bool) or not 0 <= self.seed < 2**64:
            raise ValidationError('seed', 'must be an integer in [0, 2^64), got ' + repr(self.seed))
        if not self.gamma >= 0:
            raise ValidationError('gamma', 'must be nonnegative, got ' + repr(self.gamma))


def ds1_spec(seed=0, alpha=1., xi=1.):
    """ Medium scale recipe: 200 zones and 100 lockers on [0,30]^2, demands on [1,1000] """
    return GeneratorSpec(zone_count=200, locker_count=100, square_side=30.,
                         demand_range=(1., 1000.), alpha=alpha, xi=xi, seed=seed)


def ds2_spec(seed=0, alpha=1., xi=1.):
    """ Large scale recipe: 400 zones and 150 lockers on [0,40]^2, demands on [1,1000] """
    return GeneratorSpec(zone_count=400, locker_count=150, square_side=40.,
                         demand_range=(1., 1000.), alpha=alpha, xi=xi, seed=seed)
