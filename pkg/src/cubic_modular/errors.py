"""Exception hierarchy shared by every module of the package."""


class CubicModularError(Exception):
    """Base class for all package errors."""


class DomainError(CubicModularError, ValueError):
    """An argument lies outside the domain of the function."""


class ParameterError(CubicModularError, ValueError):
    """Series parameters are forbidden (pole of a Pochhammer denominator),
    or a theorem's parameter region does not contain the requested point."""


class ConvergenceError(CubicModularError, ArithmeticError):
    """An iteration or series did not reach its stopping rule."""


class ConfigurationError(CubicModularError, ValueError):
    """A sweep grid or CLI configuration is unusable."""
