# twostep/core/errors.py

"""
Exception hierarchy for twostep.

Every error raised by the package derives from TwoStepError and from the
builtin exception that best describes it, so callers may catch either.
Verdicts (failed identities, missing certificates, inconsistent systems)
are returned as values and never raised.
"""


class TwoStepError(Exception):
    """Root of all twostep errors."""


class DimensionMismatch(TwoStepError, ValueError):
    pass


class SingularMatrixError(TwoStepError, ArithmeticError):
    pass


class NotSkewError(TwoStepError, ValueError):
    pass


class OddDimensionError(TwoStepError, ValueError):
    pass


class JacobiViolation(TwoStepError, ValueError):
    """Raised with the first basis triple whose cyclic Jacobi sum is nonzero."""

    def __init__(self, i, j, k, cyclic_sum):
        self.triple = (i, j, k)
        self.cyclic_sum = tuple(cyclic_sum)
        super().__init__(f"Jacobi identity fails on (X{i + 1}, X{j + 1}, X{k + 1})")


class NotNilpotent(TwoStepError, ValueError):
    pass


class NotTwoStep(TwoStepError, ValueError):
    pass


class PresentationError(TwoStepError, ValueError):
    pass


class NotAlmostComplex(TwoStepError, ValueError):
    pass


class InvarianceError(TwoStepError, ValueError):
    """A subspace required to be J-invariant is not."""

    def __init__(self, message, subspace=None):
        self.subspace = subspace
        super().__init__(message)


class NotPositiveDefinite(TwoStepError, ValueError):
    pass


class NotHermitian(TwoStepError, ValueError):
    pass


class HypothesisError(TwoStepError, ValueError):
    pass


class FamilyMismatch(TwoStepError, ValueError):
    pass


class CatalogError(TwoStepError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class AlgebraFileError(TwoStepError, ValueError):
    """Syntax or semantic error in an algebra document, with its line number."""

    def __init__(self, line, message):
        self.line = line
        self.message = message
        prefix = f"line {line}: " if line else ""
        super().__init__(prefix + message)


class ConfigError(TwoStepError, ValueError):
    pass
