"""Exception hierarchy for the verification engine."""

from typing import Any, Optional


class VerificationError(Exception):
    """Base class for engine errors that stop a computation."""


class MissingImage(VerificationError):
    """A parameter or generator has no image under a map that needs one."""

    def __init__(self, symbol: str):
        self.symbol = symbol
        super().__init__(f"No image given for '{symbol}'")


class PoleAtLimit(VerificationError):
    """A denominator vanishes at the limit point."""

    def __init__(self, component: Any, denominator: Any, location: Optional[str] = None):
        self.component = component
        self.denominator = denominator
        self.location = location
        where = f" in {location}" if location else ""
        super().__init__(f"Pole at limit{where}: denominator {denominator} of {component} vanishes")


class UnknownGenerator(VerificationError):
    def __init__(self, letter: str):
        self.letter = letter
        super().__init__(f"Letter '{letter}' is not a generator of the presentation")


class UnknownPreset(VerificationError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Unknown preset: {name}")


class Singular(VerificationError):
    """Elimination found no unit pivot."""

    def __init__(self, shape: tuple, column: int):
        self.shape = shape
        self.column = column
        super().__init__(f"Matrix of shape {shape} has no unit pivot in column {column}")


class NotInvolutive(VerificationError):
    def __init__(self, entry: Any):
        self.entry = entry
        super().__init__(f"Map is not involutive at {entry}")


class NonInvertibleBasisChange(VerificationError):
    pass


class ConstraintUnsatisfied(VerificationError):
    def __init__(self, leftover: Any):
        self.leftover = leftover
        super().__init__(f"Constraints leave conjugate symbols in {leftover}")


class TruncationTooSmall(VerificationError):
    def __init__(self, order: int):
        self.order = order
        super().__init__(f"Truncation order {order} is too small, need at least 2")


class NonQuadraticRelation(VerificationError):
    def __init__(self, relation: Any):
        self.relation = relation
        super().__init__(f"Relation is not homogeneous of the requested degree: {relation}")


class FixtureMissing(VerificationError):
    def __init__(self, path: Any):
        self.path = path
        super().__init__(f"Fixture not found: {path}")


class FixtureCorrupt(VerificationError):
    def __init__(self, path: Any, expected: str, actual: str):
        self.path = path
        self.expected = expected
        self.actual = actual
        super().__init__(f"Fixture {path} hash mismatch: expected {expected}, got {actual}")


class NonTerminating(VerificationError):
    def __init__(self, word: tuple):
        self.word = word
        super().__init__(f"Rewriting does not terminate on {' '.join(word)}")


class OracleUnavailable(VerificationError):
    def __init__(self, name: str, reason: str):
        self.name = name
        self.reason = reason
        super().__init__(f"No linear-algebra oracle for {name}: {reason}")
