"""Exception hierarchy.

Everything raised deliberately by this package derives from RecurasymError,
so callers (and the CLI) can distinguish configuration mistakes from numeric
failures.
"""


class RecurasymError(Exception):
    """Base class for all errors raised by recurasym."""


class ConfigurationError(RecurasymError):
    """Invalid model configuration, missing initial value, or missing law."""


class ArgumentError(RecurasymError, ValueError):
    """An argument is outside its documented range."""


class ModeError(RecurasymError):
    """A precision mode was requested that the inputs cannot support."""


class NormalizationError(RecurasymError):
    """A probability row deviates from total mass 1 beyond tolerance."""


class ReductionError(RecurasymError):
    """A weight reduction produced rows that do not sum to 1."""


class DivergentIterationError(RecurasymError):
    """Iterating the contraction map exceeded the hard cap; the gap
    condition is likely violated."""


class InversionError(RecurasymError):
    """The contraction map could not be inverted on the bracketing
    interval."""


class CapabilityError(RecurasymError):
    """A derivative order was requested beyond what a function declares."""


class SingularSystemError(RecurasymError):
    """The boundary-polynomial system is singular or near-singular."""

    def __init__(self, message, determinant=None, condition_estimate=None):
        super().__init__(message)
        self.determinant = determinant
        self.condition_estimate = condition_estimate


class MethodInapplicableError(RecurasymError):
    """The prediction pipeline refused to run (e.g. divergence check
    failed or was inconclusive)."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
