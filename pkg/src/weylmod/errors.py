"""Exception hierarchy shared across the package.

Every domain error derives from :class:`WeylmodError` and carries a stable
``name`` used by the CLI when emitting machine-readable error objects.
"""


class WeylmodError(Exception):
    """Base class for all domain errors."""

    @property
    def name(self) -> str:
        return type(self).__name__


class FieldMismatch(WeylmodError):
    """Operands live over different field descriptors."""


class DivisionByZeroPoly(WeylmodError):
    """Polynomial division by the zero polynomial."""


class EnumerationBudgetExceeded(WeylmodError):
    """An exhaustive search would exceed the configured budget."""


class UncertifiedIrreducibility(WeylmodError):
    """Irreducibility could not be decided and was not asserted by the caller."""


class NotMaximalIdeal(WeylmodError):
    """A generator is reducible, so the ideal cannot be maximal."""


class InvalidIdeal(WeylmodError):
    """Structural problem with an ideal description."""


class IndexOutOfArity(WeylmodError):
    """A shift touches a coordinate index beyond the algebra's arity."""


class InfiniteCharPOrbit(WeylmodError):
    """Positive characteristic with unbounded arity gives an unmanageable orbit."""


class ObjectMismatch(WeylmodError):
    """Attempt to compose morphisms whose endpoints do not match."""


class WindowTooSmall(WeylmodError):
    """The module window does not contain the weights a computation needs."""


class WrongCharacteristic(WeylmodError):
    """A construction was invoked in the wrong characteristic."""


class DegenerateOrbit(WeylmodError):
    """A construction requiring a nondegenerate orbit got a degenerate one."""


class NotASkeletonObject(WeylmodError):
    """The given shift vector is not one of the orbit's skeleton objects."""


class NotPrincipal(WeylmodError):
    """The parametrizing ideal is not principal in the supported sense."""


class QuotientNotFiniteDimensional(WeylmodError):
    """The requested quotient is not finite-dimensional."""


class NotMaximal(WeylmodError):
    """The parametrizing ideal is not maximal: the built module is not simple."""


class WrongBreakOrder(WeylmodError):
    """The orbit's break order does not match the requested construction."""


class RelationViolation(WeylmodError):
    """Input data fails the defining relations it is required to satisfy."""


class InfiniteDimension(WeylmodError):
    """A finite-dimension oracle was asked about an infinite-dimensional module."""


class UnsupportedConstruction(WeylmodError):
    """Explicit matrices are outside the supported range; use descriptors."""


class SchemaError(WeylmodError):
    """Input JSON does not conform to the documented schema."""
