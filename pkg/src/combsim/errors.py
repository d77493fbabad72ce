"""Exception types raised across the package."""


class CombsimError(Exception):
    """Base class for every error raised by combsim."""


class ParseError(CombsimError, ValueError):
    """Malformed matrix text (bad literal, wrong row or column count)."""


class ValidationError(CombsimError, ValueError):
    """A distance table violates a semimetric axiom.

    ``axiom`` is one of ``"positivity"``, ``"symmetry"`` or ``"triangle"``;
    ``location`` is the offending point or pair.
    """

    def __init__(self, message, axiom=None, location=None):
        super().__init__(message)
        self.axiom = axiom
        self.location = location


class DegreeMismatch(CombsimError, ValueError):
    pass


class SizeMismatch(CombsimError, ValueError):
    pass


class DegreeTooLarge(CombsimError, ValueError):
    """Exhaustive enumeration requested beyond the configured cap."""

    def __init__(self, n, cap):
        super().__init__(f"degree {n} exceeds cap {cap}")
        self.n = n
        self.cap = cap


class NotClosed(CombsimError, ValueError):
    """An element set is not closed under composition.

    ``witness`` holds ``(p, q)`` with ``p * q`` outside the set.
    """

    def __init__(self, p, q):
        super().__init__(f"{p} * {q} is not in the set")
        self.witness = (p, q)


class MissingIdentity(CombsimError, ValueError):
    pass


class EmptySubset(CombsimError, ValueError):
    pass


class IndexOutOfRange(CombsimError, IndexError):
    pass


class NonPositiveParameter(CombsimError, ValueError):
    pass


class BadBlockCount(CombsimError, ValueError):
    pass


class InvalidRGS(CombsimError, ValueError):
    pass


class TooFewPoints(CombsimError, ValueError):
    pass


class InvariantViolation(CombsimError, AssertionError):
    """An internal consistency check failed (a bug, or a counterexample)."""
