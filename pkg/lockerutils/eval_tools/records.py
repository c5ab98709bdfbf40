"""
Rows of the comparison, loss and sweep tables.

Field order is the column order of the CSV files written by :func:`write_csv`.
Metrics that could not be computed are None (empty in CSV files).
"""

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class ComparisonRecord:
    """ Optimal solution of one choice model

    Attributes:
        gamma:           dominance threshold, inf for MNL
        gamma_label:     BNL, TLM-<gamma> or MNL
        profit:          optimal profit
        revenue:         revenue R at the optimal solution
        facility_count:  number of open lockers #F
        delta_percent:   (R(MNL) - R) / R * 100
        rel_loss_pct:    profit lost by using the MNL-optimal locations, percent
        status:          solver status
    """
    gamma: float
    gamma_label: str
    profit: float
    revenue: float
    facility_count: int
    delta_percent: Optional[float]
    rel_loss_pct: Optional[float] = None
    status: str = 'OPTIMAL'


@dataclass(frozen=True)
class LossRecord:
    """ Cost of planning with MNL when customers follow TLM-gamma

    Attributes:
        gamma:             dominance threshold
        optimal_profit:    optimal TLM-gamma profit
        actual_profit:     TLM-gamma profit of the MNL-optimal locations
        rel_loss_percent:  (optimal - actual) / optimal * 100
    """
    gamma: float
    optimal_profit: float
    actual_profit: float
    rel_loss_percent: Optional[float]


@dataclass(frozen=True)
class SweepRecord:
    """ One point of a parameter sweep """
    param_name: str
    param_value: float
    profit: float
    revenue: float
    facility_count: int
    gap: float
    status: str
    wall_time_s: float
    delta_pct: Optional[float] = None
    rel_loss_pct: Optional[float] = None
