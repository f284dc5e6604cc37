"""Exception hierarchy for the toolkit.

Every error names the subsystem that raised it (``module`` attribute) so the
command line front end can emit machine-readable diagnostics.
"""


class DesignIdealError(Exception):
    """Base class for all toolkit errors."""

    module = "core"

    @property
    def kind(self) -> str:
        return type(self).__name__


# ---------------------------------------------------------------------------
# exact scalar arithmetic

class OrderMismatch(DesignIdealError):
    module = "scalars"


class DivisionByZero(DesignIdealError, ZeroDivisionError):
    module = "scalars"


class FieldLiteralError(DesignIdealError):
    module = "scalars"


class CyclotomicOrderCap(DesignIdealError):
    module = "scalars"


# ---------------------------------------------------------------------------
# polynomials

class DimensionMismatch(DesignIdealError):
    module = "polynomials"


class FieldMismatch(DesignIdealError):
    module = "polynomials"


class PolynomialSyntaxError(DesignIdealError):
    """Raised on malformed polynomial text; carries the offending position."""

    module = "polynomials"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariable(PolynomialSyntaxError):
    pass


# ---------------------------------------------------------------------------
# Groebner engine

class MissingGB(DesignIdealError):
    module = "groebner"


class NotZeroDimensional(DesignIdealError):
    module = "groebner"


class NotHomogeneous(DesignIdealError):
    module = "groebner"


class DegreeUnreachable(DesignIdealError):
    module = "groebner"


class SingularMatrix(DesignIdealError):
    module = "linalg"


# ---------------------------------------------------------------------------
# designs

class DuplicatePoint(DesignIdealError):
    module = "designs"


class MixtureViolation(DesignIdealError):
    module = "designs"


class CodingViolation(DesignIdealError):
    module = "designs"


class EmptyLevelSet(DesignIdealError):
    module = "designs"


class LevelIndexError(DesignIdealError):
    module = "designs"


class OriginPoint(DesignIdealError):
    module = "designs"


# ---------------------------------------------------------------------------
# indicator analysis

class NotASubset(DesignIdealError):
    module = "indicators"


class NotFullFactorial(DesignIdealError):
    module = "indicators"


class VerificationFailed(DesignIdealError):
    module = "indicators"


class MissingCoeffs(DesignIdealError):
    module = "indicators"


# ---------------------------------------------------------------------------
# representation switching

class NoUniquePolynomial(DesignIdealError):
    module = "switching"


class LemmaViolated(DesignIdealError):
    module = "switching"


class SingularSystem(DesignIdealError):
    module = "switching"


class DegreeTooSmall(DesignIdealError):
    module = "switching"
