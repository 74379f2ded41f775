"""Exception types shared across the package.

Every error that a caller may want to catch programmatically has its own
class; they all derive from :class:`LmdsError` so a blanket handler is
possible at the CLI boundary.
"""


class LmdsError(Exception):
    """Base class for all package errors."""


# --- field construction / arithmetic -------------------------------------

class CompositeCharacteristic(LmdsError):
    """The requested characteristic is not a prime number."""


class ReducibleModulus(LmdsError):
    """A supplied tower-step modulus is not irreducible."""

    def __init__(self, step: int, message: str = ""):
        self.step = step
        super().__init__(message or f"modulus of tower step {step} is reducible")


class DegreeMismatch(LmdsError):
    """A modulus has the wrong length/degree, or a step degree is invalid."""


class DivisionByZero(LmdsError, ZeroDivisionError):
    """Inversion of the zero element."""


class ForeignElement(LmdsError):
    """An element of one field was used in an operation of another."""


class RangeOutOfBounds(LmdsError):
    """An element encoding lies outside [0, q)."""


# --- linear algebra -------------------------------------------------------

class NotSquare(LmdsError):
    """Determinant of a non-square matrix was requested."""


# --- codes ----------------------------------------------------------------

class RankDeficient(LmdsError):
    """A supplied generator/parity-check matrix does not have full rank."""


class RepeatedLocator(LmdsError):
    """GRS locators must be pairwise distinct."""


class ZeroMultiplier(LmdsError):
    """GRS column multipliers must be nonzero."""


class LengthExceedsField(LmdsError):
    """A GRS code needs n distinct locators, so n must not exceed q."""


class DimensionDrop(LmdsError):
    """Puncturing would reduce the code dimension below k."""


class TooManyCoordinates(LmdsError):
    """Puncturing set larger than the redundancy is not supported."""


class SearchBudgetExceeded(LmdsError):
    """Brute-force distance search would exceed the codeword budget."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(f"distance search needs {required} codewords, budget is {budget}")


# --- enumeration ----------------------------------------------------------

class BudgetExceeded(LmdsError):
    """An exhaustive enumeration would exceed the vector budget."""

    def __init__(self, required: int, budget: int, what: str = "enumeration"):
        self.required = required
        self.budget = budget
        super().__init__(f"{what} needs {required} vectors, budget is {budget}")


class NotMDS(LmdsError):
    """The operation is only defined for MDS codes."""


class PreconditionRate(LmdsError):
    """The code rate violates the precondition of the determinant test."""


# --- determinant machinery ------------------------------------------------

class IndexOutOfRange(LmdsError):
    """A block subset refers to a column index outside the matrix."""


class SpecViolation(LmdsError):
    """A partition/assignment does not satisfy the block-partition rules."""


# --- constructions ----------------------------------------------------------

class NoQualifyingBeta(LmdsError):
    """No element outside every proper subfield was found (cannot happen)."""


class RepeatedPoint(LmdsError):
    """Interpolation nodes must be pairwise distinct."""


class ParameterTooSmall(LmdsError):
    """Construction parameters below the admissible range."""


class EvenH(LmdsError):
    """The fine-tuned redundancy-3 construction requires odd h."""


class FieldTooSmall(LmdsError):
    """The field cannot accommodate the greedy locator selection."""


class Exhausted(LmdsError):
    """The greedy scan ran out of field elements (cannot happen when the
    field-size precondition holds)."""


# --- bounds / CLI -----------------------------------------------------------

class BadParameters(LmdsError):
    """Parameters outside the admissible range of a bound formula."""


class BadEpsilon(LmdsError):
    """epsilon must lie in (0, 1/2]."""


class UnknownCase(LmdsError):
    """Unknown reproduction case id."""
