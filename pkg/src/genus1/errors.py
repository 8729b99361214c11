"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: bad or precondition-violating input is
exit 2, a singular model where a smooth one is required is exit 1, and a
failed internal consistency check (which indicates a bug, never bad user
data) is exit 3.
"""


class Genus1Error(Exception):
    """Base class for all errors raised by this package."""


class InputError(Genus1Error, ValueError):
    """Malformed input or violated precondition (bad file, wrong degree, ...)."""


class SingularModelError(Genus1Error, ValueError):
    """The model has discriminant zero where a smooth curve is required."""


class DegenerateModelError(Genus1Error, ValueError):
    """The model is too degenerate for the requested construction."""


class InternalCheckError(Genus1Error, RuntimeError):
    """An internal consistency assertion failed; this signals a bug."""
