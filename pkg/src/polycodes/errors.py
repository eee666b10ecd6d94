"""Exception types raised across the package.

Every domain error derives from :class:`PolycodesError` so callers (notably
the CLI) can distinguish bad input from genuine bugs.  Budget overruns get
their own branch because they are recoverable by rerunning with a larger
budget.
"""


class PolycodesError(Exception):
    """Base class for all domain errors."""


class BudgetExceeded(PolycodesError):
    """An exhaustive computation would exceed the allotted work budget."""


# --- field construction / element arithmetic ---

class NotPrime(PolycodesError):
    pass


class ReducibleModulus(PolycodesError):
    pass


class UnsupportedSize(PolycodesError):
    pass


class DivisionByZero(PolycodesError):
    pass


class FieldMismatch(PolycodesError):
    pass


# --- polynomials ---

class ZeroPolynomial(PolycodesError):
    pass


class NotMonic(PolycodesError):
    pass


class DuplicateRoots(PolycodesError):
    pass


# --- product ring ---

class NotAUnit(PolycodesError):
    pass


class IndexOutOfRange(PolycodesError):
    pass


class LengthMismatch(PolycodesError):
    pass


class InvalidFactorBasis(PolycodesError):
    pass


# --- polycyclic codes ---

class NonUnitConstantTerm(PolycodesError):
    pass


class NotADivisor(PolycodesError):
    pass


class DegreeTooLarge(PolycodesError):
    pass


class ModulusMismatch(PolycodesError):
    pass


# --- gray maps ---

class PreconditionViolated(PolycodesError):
    pass


# --- linear codes ---

class EmptyInput(PolycodesError):
    pass


class ZeroCode(PolycodesError):
    pass


class DistanceNotExact(PolycodesError):
    pass


# --- quantum construction ---

class NotNested(PolycodesError):
    pass


class NotDualContaining(PolycodesError):
    pass


class MNotScaledOrthogonal(PolycodesError):
    pass
