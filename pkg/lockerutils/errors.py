"""
Exceptions raised by lockerutils.

All of them derive from :class:`LockerError` so that callers (the command line
tool in particular) can catch everything raised on purpose by this package
while letting genuine bugs through.

Messages are built the same way everywhere: a first line saying what the
problem is about, followed by details on separate lines.
"""

from os import linesep as newline


class LockerError(Exception):
    """Base class for every error raised on purpose by lockerutils"""


class ValidationError(LockerError, ValueError):
    """A value violates an invariant of the data model

    Args:
        field:   name of the offending field, e.g. 'attraction' or 'demand_range'
        detail:  what is wrong with it
    """
    def __init__(self, field, detail):
        self.field = field
        self.detail = detail
        super().__init__(newline + 'Problem with the field "' + field + '"' + newline + detail)


class InstanceParseError(LockerError, ValueError):
    """A file could not be parsed

    Args:
        detail:  what went wrong
        field:   name of the field being read, if known
        line:    line number in the file, if known
        column:  column number in the file, if known
    """
    def __init__(self, detail, field=None, line=None, column=None):
        self.detail = detail
        self.field = field
        self.line = line
        self.column = column
        context = []
        if field is not None:
            context.append('field "' + field + '"')
        if line is not None:
            context.append('line ' + str(line))
        if column is not None:
            context.append('column ' + str(column))
        where = ''
        if context:
            where = ' (' + ', '.join(context) + ')'
        super().__init__(newline + 'Problem parsing file' + where + newline + detail)


class ContractViolation(LockerError, ValueError):
    """The precondition of an operation is not met

    Args:
        detail:  description of the violation
        zone:    zone index concerned, if any
        pair:    pair of locker indices concerned, if any
    """
    def __init__(self, detail, zone=None, pair=None):
        self.detail = detail
        self.zone = zone
        self.pair = pair
        where = ''
        if zone is not None:
            where += ' for zone ' + str(zone)
        if pair is not None:
            where += ' and lockers ' + str(tuple(pair))
        super().__init__(newline + 'Contract violation' + where + newline + detail)


class UndefinedMetricError(LockerError, ArithmeticError):
    """A comparison metric has a zero or negative denominator"""


class SolverRefusal(LockerError, RuntimeError):
    """A solver declines to run on an instance outside of its guard"""


class InternalConsistencyError(LockerError, RuntimeError):
    """A state that valid inputs cannot produce was reached"""
