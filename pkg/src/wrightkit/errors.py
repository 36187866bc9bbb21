"""Exception types shared across the package."""


class WrightkitError(Exception):
    """Base class for all errors raised by wrightkit."""


class DomainError(WrightkitError):
    """Parameters lie outside the supported (a, b) region."""


class PoleError(WrightkitError):
    """Evaluation requested at (or too close to) a gamma-function pole."""


class RangeError(WrightkitError):
    """Argument outside the accuracy window declared for an operation."""


class ConvergenceError(WrightkitError):
    """A series failed to satisfy the truncation policy within the term cap."""


class ParameterError(WrightkitError):
    """Invalid hypergeometric parameter list (uncancelled lower-parameter pole)."""


class UnsupportedOrder(WrightkitError):
    """Bessel-K requested at an integer order, which this kernel does not cover."""


class UsageError(WrightkitError):
    """Bad request at the tool surface (unknown suite name, malformed flag)."""
