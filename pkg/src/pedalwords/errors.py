"""Exception hierarchy shared by all modules."""


class PedalWordsError(Exception):
    pass


class DimensionError(PedalWordsError, ValueError):
    """Concatenation of two-dimensional words with incompatible shapes."""


class EmptyWordError(PedalWordsError, ValueError):
    pass


class FormatError(PedalWordsError, ValueError):
    """Malformed textual input, or a word of the wrong shape or alphabet."""


class DomainError(PedalWordsError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class DegenerateError(DomainError):
    """A triple with a right angle (a = 1/2), where the pedal map is undefined."""


class NotPeriodicError(DomainError):
    pass


class NotInDomainError(DomainError):
    """Word that is not primitive, or column word outside the admissible set."""


class EnumerationBoundError(DomainError):
    pass


class FixtureError(FormatError):
    pass


class PostconditionError(PedalWordsError, AssertionError):
    """An internal result violated its guaranteed postcondition."""


class ContractionViolation(PostconditionError):
    pass


class BijectionViolation(PostconditionError):
    pass
