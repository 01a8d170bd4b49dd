"""Exception hierarchy.

Caller bugs (ill-typed or non-composable input) and mathematical failures
(a precondition such as ``g @ f == 0`` that does not hold) are kept apart so
that callers can react differently.
"""


class AdelmanError(Exception):
    """Base class for all package errors."""


class IllTypedError(AdelmanError, TypeError):
    """Objects or morphisms do not fit together (domains, codomains, kinds)."""


class DimensionError(IllTypedError, ValueError):
    """Matrix shapes do not fit together."""


class PreconditionError(AdelmanError, ValueError):
    """A mathematical precondition of an operation fails on valid input."""


class NotWellDefinedError(PreconditionError):
    """A matrix does not descend to a morphism of presented groups."""


class NotInvertibleError(PreconditionError):
    """A morphism required to be invertible is not."""
