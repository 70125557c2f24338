"""Exception types shared across the package."""


class FracLangevinError(Exception):
    """Base class for all package-specific errors."""


class DomainError(FracLangevinError, ValueError):
    """An argument lies outside the admissible domain of an operation."""


class GammaPoleError(DomainError):
    """The gamma function was evaluated at (or too close to) a pole."""


class NonIntegrableResultError(DomainError):
    """A fractional power rule would produce a non-integrable power of t."""


class SingularKernelError(FracLangevinError, ValueError):
    """A kernel was evaluated exactly on its singular set."""


class QuadratureMisuseError(FracLangevinError, ValueError):
    """Product-integration weights requested outside their validity contract."""


class MomentOverflowError(QuadratureMisuseError):
    """Requested weight exponent mu <= -2: panel moments do not exist."""


class DivergenceError(FracLangevinError, RuntimeError):
    """Fixed-point iteration blew up (update norm exceeded the divergence cap)."""

    def __init__(self, message, iteration=None, update_norm=None):
        super().__init__(message)
        self.iteration = iteration
        self.update_norm = update_norm


class ConfigError(FracLangevinError, ValueError):
    """Malformed run configuration.  Carries a location when one is known."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column

    def location(self):
        if self.line is None:
            return ""
        if self.column is None:
            return "%d" % self.line
        return "%d:%d" % (self.line, self.column)


class ExpressionError(ConfigError):
    """Forcing expression outside the supported grammar."""
