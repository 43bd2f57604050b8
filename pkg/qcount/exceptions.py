"""
Domain exceptions with standardized codes for error reports.
All exceptions have a `code` attribute used in {"error": {"code": "...", "message": "..."}}.
"""


class QCountError(Exception):
    """Base exception for engine errors with code and message."""

    code = "QCOUNT_ERROR"

    def __init__(self, message, code=None):
        self._message = message
        if code is not None:
            self.code = code
        super().__init__(message)


class InvalidInputError(QCountError):
    """Raised when an input value is malformed (bad JSON, unsorted partition, ...)."""

    code = "INVALID_INPUT"


class SizeMismatchError(QCountError):
    """Raised when two objects that must have the same size do not."""

    code = "SIZE_MISMATCH"

    def __init__(self, left, right, what="size"):
        self.left = left
        self.right = right
        super().__init__(f"{what} mismatch: {left} != {right}")


class NegativeArgumentError(QCountError):
    """Raised when a q-analog receives a negative argument."""

    code = "NEGATIVE_ARGUMENT"

    def __init__(self, name, value):
        super().__init__(f"{name} must be nonnegative, got {value}")


class DivisionByZeroError(QCountError, ZeroDivisionError):
    """Raised on division by the zero rational function."""

    code = "DIVISION_BY_ZERO"

    def __init__(self, message="division by zero rational function"):
        super().__init__(message)


class PoleError(QCountError):
    """Raised when a rational function is evaluated at a root of its denominator."""

    code = "POLE"

    def __init__(self, value, point):
        super().__init__(f"{value} has a pole at t={point}")


class NonPartitionContentError(QCountError):
    """Raised when charge is requested for a tableau whose content is not a partition."""

    code = "NON_PARTITION_CONTENT"

    def __init__(self, content):
        super().__init__(f"charge needs partition content, got {list(content)}")


class DegreeCapExceededError(QCountError):
    """Raised when a computation would exceed the configured degree cap."""

    code = "DEGREE_CAP_EXCEEDED"

    def __init__(self, degree, cap):
        self.degree = degree
        self.cap = cap
        super().__init__(f"degree {degree} exceeds the configured cap {cap}")


class EnumerationBudgetError(QCountError):
    """Raised before an exhaustive enumeration that would exceed the budget."""

    code = "BUDGET_EXCEEDED"

    def __init__(self, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(f"enumeration needs {required} items, budget is {budget}")


class FieldMismatchError(QCountError):
    """Raised when prime-field objects over different moduli or dimensions are combined."""

    code = "FIELD_MISMATCH"


class NotPrimeError(QCountError):
    """Raised when a modulus is not prime."""

    code = "NOT_PRIME"

    def __init__(self, p):
        super().__init__(f"{p} is not prime")


class UnrealizableTypeError(QCountError):
    """Raised when no matrix of a similarity class type exists over F_p."""

    code = "UNREALIZABLE_TYPE"

    def __init__(self, p, degree, needed, available):
        self.p = p
        self.degree = degree
        super().__init__(
            f"type needs {needed} distinct monic irreducibles of degree {degree} "
            f"over F_{p}, only {available} exist"
        )


class TrailingZeroProfileError(QCountError):
    """Raised when a partial profile ends in zero."""

    code = "TRAILING_ZERO_PROFILE"

    def __init__(self, rho):
        super().__init__(
            f"partial profile {list(rho)} must end in a nonzero entry; "
            "use sigma for stabilized profiles"
        )


class DimensionBoundError(QCountError):
    """Raised when a requested dimension cannot fit in the ambient space."""

    code = "DIMENSION_BOUND"


class NonPolynomialResultError(QCountError):
    """Raised when a quantity that must be a polynomial is not."""

    code = "NON_POLYNOMIAL"

    def __init__(self, what, value):
        super().__init__(f"{what} should be a polynomial, got {value}")


class UnknownFunctionError(QCountError):
    """Raised when a named symmetric function or basis is not known."""

    code = "UNKNOWN_FUNCTION"

    def __init__(self, name, known):
        super().__init__(f"unknown name '{name}'. Known: {sorted(known)}")


class VerificationFailedError(QCountError):
    """Raised when a verification suite finds a counterexample."""

    code = "VERIFICATION_FAILED"

    def __init__(self, suite, counterexample):
        self.suite = suite
        self.counterexample = counterexample
        super().__init__(f"suite '{suite}' failed: {counterexample}")
