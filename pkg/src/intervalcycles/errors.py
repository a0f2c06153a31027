"""Exception hierarchy.

Every domain failure derives from :class:`DynamicsError`; the CLI maps those
to exit code 1 and prints the class name.
"""

from __future__ import annotations


class DynamicsError(ValueError):
    """Base class for all domain errors raised by this package."""


# permutations and cycles
class CycleSyntaxError(DynamicsError):
    pass


class NotABijection(DynamicsError):
    pass


class NotASingleCycle(DynamicsError):
    pass


class LengthMismatch(DynamicsError):
    pass


class TooShort(DynamicsError):
    pass


class OutOfRange(DynamicsError):
    pass


# digraphs
class Inconsistent(DynamicsError):
    """No cyclic permutation produces the given signed digraph."""


class NotACycle(DynamicsError):
    """The recovered map is a permutation but not a single cycle."""


class EvenSwapCount(DynamicsError):
    pass


# polynomials
class NotSquare(DynamicsError):
    pass


class DivisorZero(DynamicsError, ZeroDivisionError):
    pass


# successors and cascades
class CapExceeded(DynamicsError):
    pass


class NoUnimodalSuccessor(DynamicsError):
    def __init__(self, message: str, candidates=()):
        super().__init__(message)
        self.candidates = list(candidates)


class MultipleUnimodalSuccessors(DynamicsError):
    def __init__(self, message: str, candidates=()):
        super().__init__(message)
        self.candidates = list(candidates)


class FormulaViolation(DynamicsError):
    """An exact polynomial identity that must hold did not. Indicates a bug."""


# forcing
class NotALoop(DynamicsError):
    pass


# logistic family
class NoAttractorDetected(DynamicsError):
    pass


class DegenerateOrbit(DynamicsError):
    pass
