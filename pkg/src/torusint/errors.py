"""Exception hierarchy."""


class TorusIntError(Exception):
    """Base class for package errors."""


class MismatchedTables(TorusIntError):
    """Operands belong to different variable tables."""


class InexactDivision(TorusIntError):
    """A division that must be exact left a remainder.

    Raised by the evaluators when a localization sum or residue fails to
    reduce to a polynomial; this always indicates an internal inconsistency
    (wrong Euler factor, wrong integrand), never a property of the input.
    """


class NonCanonicalIntegrand(TorusIntError):
    """A denominator factor mixes residue variables, or the residue
    variable is absent; the iterated residue is not defined termwise."""


class SymmetryError(TorusIntError):
    """The input class is not symmetric in the residue variables."""


class ParseError(TorusIntError):
    """Class-expression syntax error, with a 0-based input position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position
