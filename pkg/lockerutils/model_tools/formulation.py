"""
Abstract constraint systems for the locker location problem.

A :class:`Formulation` is a plain record of variables, linear rows, rotated
cone rows and an objective. It knows nothing about solvers: the builders of
this package fill it and the exporters turn it into text.

Variable names are fixed and 1-based:

    x_j      locker j is open
    y_i_j    locker j is offered to zone i
    b_i      share of the demand of zone i lost to the outside option (MICQP)
    z_i      1 + sum_j pi_ij y_ij with pi_ij = a_ij / a_i0 (MICQP)
"""

from dataclasses import dataclass, field
from typing import Tuple
import math
import numpy as np

IP_D = 'IP_D'
IP_A = 'IP_A'
MICQP = 'MICQP'
KINDS = (IP_D, IP_A, MICQP)

DDC = 'DDC'
ADC_PATH = 'ADC_PATH'
DOMINANCE_BLOCKS = (DDC, ADC_PATH)


def x_name(jj):
    return 'x_' + str(jj + 1)


def y_name(ii, jj):
    return 'y_' + str(ii + 1) + '_' + str(jj + 1)


def b_name(ii):
    return 'b_' + str(ii + 1)


def z_name(ii):
    return 'z_' + str(ii + 1)


@dataclass(frozen=True)
class Variable:
    """ A decision variable

    Attributes:
        name:   one of the fixed names x_j, y_i_j, b_i, z_i
        kind:   'binary' or 'continuous'
        lower:  lower bound
        upper:  upper bound, math.inf for none
    """
    name: str
    kind: str = 'binary'
    lower: float = 0.
    upper: float = 1.


@dataclass(frozen=True)
class Row:
    """ A linear row: sum of coef * variable, sense, right hand side

    coefs is a tuple of (variable name, coefficient) pairs, in writing order.
    """
    name: str
    coefs: Tuple[Tuple[str, float], ...]
    sense: str
    rhs: float

    def __post_init__(self):
        if self.sense not in ('<=', '>=', '='):
            raise ValueError('unknown row sense ' + repr(self.sense))
        object.__setattr__(self, 'coefs', tuple((str(vv), float(cc)) for vv, cc in self.coefs))
        object.__setattr__(self, 'rhs', float(self.rhs))

    def activity(self, values):
        return math.fsum(cc * values[vv] for vv, cc in self.coefs)

    def satisfied(self, values, tol=1e-9):
        act = self.activity(values)
        if self.sense == '<=':
            return act <= self.rhs + tol
        if self.sense == '>=':
            return act >= self.rhs - tol
        return abs(act - self.rhs) <= tol


@dataclass(frozen=True)
class Cone:
    """ Rotated cone row u * v >= 1 with u, v >= 0, written ||(2, u - v)|| <= u + v """
    name: str
    u: str
    v: str


@dataclass(frozen=True)
class Objective:
    """ Linear part of the objective

    Attributes:
        sense:     'max' or 'min'
        coefs:     tuple of (variable name, coefficient) pairs
        constant:  constant term
    """
    sense: str
    coefs: Tuple[Tuple[str, float], ...]
    constant: float = 0.

    def __post_init__(self):
        object.__setattr__(self, 'coefs', tuple((str(vv), float(cc)) for vv, cc in self.coefs))
        object.__setattr__(self, 'constant', float(self.constant))


@dataclass(frozen=True)
class FractionalTerm:
    """ The fractional revenue of one zone, d * A / (A + outside) with A = sum a y

    IP formulations keep their objective in this form, it is not linearized.
    """
    zone: int
    demand: float
    outside: float
    terms: Tuple[Tuple[str, float], ...]

    def __post_init__(self):
        object.__setattr__(self, 'terms', tuple((str(vv), float(cc)) for vv, cc in self.terms))
        object.__setattr__(self, 'demand', float(self.demand))
        object.__setattr__(self, 'outside', float(self.outside))

    def value(self, values):
        attraction = math.fsum(cc * values[vv] for vv, cc in self.terms)
        return self.demand * attraction / (attraction + self.outside)


@dataclass(frozen=True)
class Formulation:
    """ A complete model: variables, linear rows, cones and objective

    Attributes:
        kind:        IP_D, IP_A or MICQP
        variables:   tuple of :class:`Variable`
        rows:        tuple of :class:`Row`
        cones:       tuple of :class:`Cone`, MICQP only
        objective:   :class:`Objective`
        fractional:  tuple of :class:`FractionalTerm`, IP kinds only. The
                     objective of an IP kind is their sum plus the linear part.
        meta:        zone and locker counts, gamma and the options of the builder
    """
    kind: str
    variables: Tuple[Variable, ...]
    rows: Tuple[Row, ...]
    cones: Tuple[Cone, ...]
    objective: Objective
    fractional: Tuple[FractionalTerm, ...] = ()
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError('unknown formulation kind ' + repr(self.kind))
        for name in ('variables', 'rows', 'cones', 'fractional'):
            object.__setattr__(self, name, tuple(getattr(self, name)))

    def rows_named(self, prefix):
        """ Rows whose name starts with prefix, e.g. 'ddc_' or 'link_' """
        return [row for row in self.rows if row.name.startswith(prefix)]

    def _values(self, x, y):
        x = np.asarray(getattr(x, 'open', x), dtype=float).ravel()
        y = np.asarray(getattr(y, 'allowed', y), dtype=float)
        m, n = self.meta['m'], self.meta['n']
        if x.size != n or y.shape != (m, n):
            from ..errors import ValidationError
            raise ValidationError('x, y', 'expected ' + str(n) + ' locker values and a '
                                  + str(m) + 'x' + str(n) + ' restriction')
        values = {x_name(jj): x[jj] for jj in range(n)}
        values.update({y_name(ii, jj): y[ii, jj] for ii in range(m) for jj in range(n)})
        if self.kind == MICQP:
            # z follows from its defining row, b = 1/z is the tightest choice
            for row in self.rows_named('zdef_'):
                zvar = row.coefs[0][0]
                values[zvar] = row.rhs - math.fsum(cc * values[vv] for vv, cc in row.coefs[1:])
                values['b_' + zvar[2:]] = 1. / values[zvar]
        return values

    def evaluate(self, x, y):
        """ Objective value of a decision

        For the IP kinds this is the profit, fractional revenue minus facility
        cost. For MICQP it is the lost demand plus facility cost, with b_i = 1/z_i.

        Args:
            x:  :class:`LocationDecision` or length n array
            y:  :class:`RestrictionDecision` or (m, n) array
        """
        values = self._values(x, y)
        linear = math.fsum(cc * values[vv] for vv, cc in self.objective.coefs)
        fractional = math.fsum(term.value(values) for term in self.fractional)
        return self.objective.constant + linear + fractional

    def is_feasible(self, x, y, tol=1e-9):
        """ True if (x, y) satisfies the bounds, every linear row and every cone """
        values = self._values(x, y)
        for var in self.variables:
            val = values[var.name]
            if val < var.lower - tol or val > var.upper + tol:
                return False
            if var.kind == 'binary' and min(abs(val), abs(val - 1.)) > tol:
                return False
        if not all(row.satisfied(values, tol) for row in self.rows):
            return False
        return all(values[cone.u] * values[cone.v] >= 1. - tol for cone in self.cones)

    def __repr__(self):
        return ('Formulation(kind=' + self.kind + ', variables=' + str(len(self.variables))
                + ', rows=' + str(len(self.rows)) + ', cones=' + str(len(self.cones)) + ')')
