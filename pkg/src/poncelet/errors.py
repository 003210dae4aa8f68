"""Exception types shared across the package."""


class PonceletError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(PonceletError):
    """Operands have incompatible dimensions."""


class NotSymmetricError(PonceletError):
    """A matrix expected to be symmetric is not, beyond tolerance."""


class NotPositiveDefiniteError(PonceletError):
    """A matrix expected to be positive definite has an eigenvalue <= 0."""


class DegeneracyError(PonceletError):
    """Numerically degenerate input: rank deficiency, degenerate face,
    origin on a facet, or a root tie in a two-root selection."""


class InfeasibleError(PonceletError):
    """A construction's feasibility condition fails.

    Carries a ``diagnostics`` dict with the quantities that witnessed the
    failure (traces, scaling factors, circumradii).
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = dict(diagnostics or {})


class TraceBoundError(InfeasibleError):
    """Trace bound violated: no fitting simplex can exist."""
