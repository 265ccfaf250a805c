"""Exception hierarchy shared by every module of the package."""


class AlgebraError(Exception):
    """Base class for all errors raised by :mod:`semiprimary`."""


class InvalidOrder(AlgebraError, ValueError):
    pass


class InvalidArity(AlgebraError, ValueError):
    pass


class InvalidRing(AlgebraError, ValueError):
    """A user-supplied operation table violates the ring axioms."""


class RingMismatch(AlgebraError, ValueError):
    pass


class NotProper(AlgebraError, ValueError):
    pass


class CapExceeded(AlgebraError):
    """The ring is too large for an exhaustive operation."""


class NotQuasiLocal(AlgebraError, ValueError):
    pass


class IncompleteTable(AlgebraError, KeyError):
    pass


class InvalidExpansion(AlgebraError, ValueError):
    """An expansion function fails extensivity or monotonicity."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class PreconditionViolation(AlgebraError, ValueError):
    pass


class NotSurjective(AlgebraError, ValueError):
    pass


class InvalidHomomorphism(AlgebraError, ValueError):
    pass


class ZeroRing(AlgebraError, ValueError):
    """A construction would collapse to the zero ring (1 = 0)."""


class ImplicationViolation(AlgebraError, AssertionError):
    """A theorem-level implication failed on a concrete instance."""


class NotPrime(AlgebraError, ValueError):
    pass


class InternalError(AlgebraError, RuntimeError):
    pass


class ParseError(AlgebraError, ValueError):
    """DSL or polynomial text failed to parse."""

    def __init__(self, message, text="", pos=0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} (line {line}, column {col})")
        self.text = text
        self.pos = pos
        self.line = line
        self.column = col
