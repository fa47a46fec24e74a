"""Exception hierarchy for phiseq."""

from __future__ import annotations


class PhiSeqError(Exception):
    """Base class for all errors raised by phiseq."""


class NotPrime(PhiSeqError, ValueError):
    pass


class PrimeOutOfRange(PhiSeqError, ValueError):
    """p is below 5 or not below the 2**31 cap."""


class ZeroInverse(PhiSeqError, ZeroDivisionError):
    pass


class ZeroOrderInput(PhiSeqError, ValueError):
    pass


class ZeroBase(PhiSeqError, ValueError):
    pass


class LengthMismatch(PhiSeqError, ValueError):
    pass


class NotPeriodic(PhiSeqError, ValueError):
    pass


class BadInitial(PhiSeqError, ValueError):
    pass


class BadKappa(PhiSeqError, ValueError):
    pass


class BadExponent(PhiSeqError, ValueError):
    pass


class NotPrimitiveRoot(PhiSeqError, ValueError):
    pass


class WrongRootCount(PhiSeqError, ValueError):
    pass


class NoNonemptyIk(PhiSeqError, RuntimeError):
    """No k <= p-2 gives a nonempty I_k; indicates an upstream bug."""


class BudgetExceeded(PhiSeqError):
    """An exhaustive search would visit more states than allowed."""

    def __init__(self, required: int, budget: int):
        super().__init__(f"search needs {required} states, budget is {budget}")
        self.required = required
        self.budget = budget
