"""
Configuration, search nodes and results of the solvers.
"""

from dataclasses import dataclass
from typing import Any, FrozenSet, Optional
import math

from ..errors import ValidationError

MAX_DEMAND_WEIGHTED_ATTRACTION = 'MAX_DEMAND_WEIGHTED_ATTRACTION'
LOWEST_INDEX = 'LOWEST_INDEX'
GREEDY_LOCAL_SEARCH = 'GREEDY_LOCAL_SEARCH'
NO_HEURISTIC = 'NONE'

OPTIMAL = 'OPTIMAL'
GAP_LIMIT = 'GAP_LIMIT'
TIME_LIMIT = 'TIME_LIMIT'
NODE_LIMIT = 'NODE_LIMIT'

# below this relative gap a closed search is reported as optimal
OPTIMAL_GAP = 1e-6


@dataclass(frozen=True)
class SolveConfig:
    """ Settings of the branch and bound

    Attributes:
        gap_tolerance:       relative gap at which the search stops, 1e-6 for small
                             instances, 1e-3 or 1e-2 for the large ones
        time_limit_seconds:  wall clock limit, math.inf for none
        node_limit:          maximum number of explored nodes, None for none
        branching_rule:      MAX_DEMAND_WEIGHTED_ATTRACTION or LOWEST_INDEX
        heuristic:           GREEDY_LOCAL_SEARCH or NONE, run once before the search
        threads:             number of nodes expanded in parallel

    Both solvers use exact dominance, the rtol = 0 case of
    :func:`best_restriction`, so that their profits match the evaluator.
    """
    gap_tolerance: float = 1e-6
    time_limit_seconds: float = math.inf
    node_limit: Optional[int] = None
    branching_rule: str = MAX_DEMAND_WEIGHTED_ATTRACTION
    heuristic: str = GREEDY_LOCAL_SEARCH
    threads: int = 1

    def __post_init__(self):
        if not self.gap_tolerance > 0:
            raise ValidationError('gap_tolerance', 'gap tolerance must be positive, got ' + str(self.gap_tolerance))
        if not self.time_limit_seconds > 0:
            raise ValidationError('time_limit_seconds', 'time limit must be positive, got ' + str(self.time_limit_seconds))
        if self.node_limit is not None and self.node_limit < 1:
            raise ValidationError('node_limit', 'node limit must be at least 1, got ' + str(self.node_limit))
        if self.branching_rule not in (MAX_DEMAND_WEIGHTED_ATTRACTION, LOWEST_INDEX):
            raise ValidationError('branching_rule', 'unknown branching rule ' + repr(self.branching_rule))
        if self.heuristic not in (GREEDY_LOCAL_SEARCH, NO_HEURISTIC):
            raise ValidationError('heuristic', 'unknown heuristic ' + repr(self.heuristic))
        if int(self.threads) != self.threads or self.threads < 1:
            raise ValidationError('threads', 'threads must be an integer >= 1, got ' + str(self.threads))

    def to_dict(self):
        return {'gap_tolerance': self.gap_tolerance,
                'time_limit_seconds': None if math.isinf(self.time_limit_seconds) else self.time_limit_seconds,
                'node_limit': self.node_limit,
                'branching_rule': self.branching_rule,
                'heuristic': self.heuristic,
                'threads': int(self.threads)}


@dataclass(frozen=True)
class NodeState:
    """ A node of the search tree

    Attributes:
        committed_open:    lockers fixed open
        committed_closed:  lockers fixed closed
        free:              lockers not decided yet
        bound:             upper bound on the profit of every completion
    """
    committed_open: FrozenSet[int]
    committed_closed: FrozenSet[int]
    free: FrozenSet[int]
    bound: float = math.inf

    def __post_init__(self):
        for name in ('committed_open', 'committed_closed', 'free'):
            object.__setattr__(self, name, frozenset(int(jj) for jj in getattr(self, name)))
        if (self.committed_open & self.committed_closed or self.committed_open & self.free
                or self.committed_closed & self.free):
            raise ValidationError('node', 'open, closed and free locker sets must be disjoint')

    @classmethod
    def root(cls, n):
        return cls(frozenset(), frozenset(), frozenset(range(n)))

    def available(self):
        """ Lockers that may still be open in a completion """
        return self.committed_open | self.free


@dataclass(frozen=True, eq=False)
class SolveResult:
    """ Outcome of a solver

    Attributes:
        location:           optimal or best found :class:`LocationDecision`
        restriction:        the matching :class:`RestrictionDecision`
        profit:             profit of (location, restriction)
        upper_bound:        proven upper bound on the optimal profit
        gap:                |upper_bound - profit| / |upper_bound|, 0 when the bound is 0
        nodes_explored:     number of search nodes (or subsets) evaluated
        wall_time_seconds:  elapsed time
        status:             OPTIMAL, GAP_LIMIT, TIME_LIMIT or NODE_LIMIT
        breakdown:          :class:`ProfitBreakdown` of the decision
        method:             name of the solver
    """
    location: Any
    restriction: Any
    profit: float
    upper_bound: float
    gap: float
    nodes_explored: int
    wall_time_seconds: float
    status: str
    breakdown: Any = None
    method: str = 'bb'

    @property
    def facility_count(self):
        return self.location.count

    @property
    def revenue(self):
        return self.breakdown.revenue

    def to_dict(self):
        """ JSON compatible record, lockers numbered from 1, timing left out """
        allowed = self.restriction.allowed
        return {'method': self.method,
                'status': self.status,
                'profit': self.profit,
                'revenue': self.breakdown.revenue,
                'facility_cost': self.breakdown.facility_cost,
                'lost_demand': self.breakdown.lost_demand,
                'upper_bound': self.upper_bound,
                'gap': self.gap,
                'nodes_explored': int(self.nodes_explored),
                'facility_count': self.facility_count,
                'open_lockers': [jj + 1 for jj in self.location.indices],
                'x': [int(vv) for vv in self.location.open],
                'y': [[int(vv) for vv in row] for row in allowed]}


def relative_gap(upper_bound, profit):
    """ |upper_bound - profit| / |upper_bound|, 0 when the bound is 0 """
    if upper_bound == 0:
        return 0.
    return abs(upper_bound - profit) / abs(upper_bound)
