# Copyright (c) 2026, the transseries authors
#
# All rights reserved.
#
# See the file "LICENCE" for information about the copyright
# and warranty status of this software.

'''Exceptions raised by the kernel.'''


class TransseriesError(Exception):
    '''Base class of all kernel errors.'''


# Constant fields

class ConstantCapabilityMissing(TransseriesError):
    '''The active constant field cannot compute a requested constant.'''


class ConstantExpUnsupported(ConstantCapabilityMissing):
    pass


class ConstantLogUnsupported(ConstantCapabilityMissing):
    pass


# Series observation

class BudgetExhausted(TransseriesError):
    '''An observation of a lazy series ran out of budget.'''


class SafetyCapReached(BudgetExhausted):
    '''An observation hit the global cap on work steps.'''


class SeriesOrderError(TransseriesError):
    '''A term source emitted monomials out of order or a zero coefficient.'''


class DivisionByZero(TransseriesError, ZeroDivisionError):
    pass


class IndeterminatePivot(TransseriesError):
    '''The dominant term of a divisor could not be found within budget.'''


class IndeterminateSign(TransseriesError):
    pass


class InvalidSplit(TransseriesError):
    pass


# Analytic and exponential structure

class ArgumentNotBounded(TransseriesError):
    pass


class ConstantOutsideDomain(TransseriesError):
    pass


class NotPositive(TransseriesError):
    pass


class NotPositiveUnit(NotPositive):
    pass


class IndeterminateCubeMembership(TransseriesError):
    pass
