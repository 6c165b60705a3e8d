"""Exception hierarchy shared by every perimod module."""

from __future__ import annotations


class PerimodError(Exception):
    """Base class for all library errors."""


class InputError(PerimodError, ValueError):
    """Malformed diagram or corpus input (CLI exit code 2)."""


class MalformedToken(InputError):
    pass


class CrossingParity(InputError):
    pass


class SignMismatch(InputError):
    pass


class InconsistentEdges(InputError):
    pass


class OrientationFailure(InputError):
    pass


class SameComponent(PerimodError, ValueError):
    pass


class NoCrossings(PerimodError, ValueError):
    pass


class DegenerateDiagram(PerimodError, ValueError):
    pass


class NonClassicalInput(PerimodError, ValueError):
    pass


class NotInInvariant(PerimodError, ValueError):
    """Element whose coordinate sum does not augment to zero."""


class NotDivisible(PerimodError, ArithmeticError):
    pass


class ResourceLimit(PerimodError, RuntimeError):
    """Basis completion exceeded the configured row or degree cap."""
