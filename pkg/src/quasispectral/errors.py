"""Exception hierarchy shared by every module of the package."""


class QuasiSpectralError(Exception):
    """Base class for all errors raised by this package."""


class MissingCoefficientError(QuasiSpectralError, IndexError):
    """A recurrence coefficient was requested beyond the available range."""


class DegreeLimitError(QuasiSpectralError, ValueError):
    """Dense coefficient vectors were requested above the degree guard."""


class ShapeError(QuasiSpectralError, ValueError):
    """Operands have incompatible degrees or sizes."""


class DomainError(QuasiSpectralError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class DegenerateParameterError(QuasiSpectralError, ZeroDivisionError):
    """A closed-form coefficient hits a zero denominator."""

    def __init__(self, message: str, n: int | None = None):
        super().__init__(message)
        self.n = n


class NotARootError(QuasiSpectralError, ValueError):
    """Deflation was attempted at a point that is not a root."""

    def __init__(self, message: str, residual: float):
        super().__init__(message)
        self.residual = residual


class ExistenceError(QuasiSpectralError, ZeroDivisionError):
    """A spectral transformation does not exist at the requested index."""

    def __init__(self, message: str, n: int | None = None):
        super().__init__(message)
        self.n = n


class NotOrthogonalizableError(QuasiSpectralError, ValueError):
    """A coefficient sequence fails the orthogonality difference equation."""

    def __init__(self, message: str, n: int, residual: float):
        super().__init__(message)
        self.n = n
        self.residual = residual


class NumericFailure(QuasiSpectralError, ArithmeticError):
    """An iterative numerical method did not converge."""

    def __init__(self, message: str, residuals=None):
        super().__init__(message)
        self.residuals = residuals
