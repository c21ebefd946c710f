"""Exception hierarchy.

Every domain failure raised by the library derives from :class:`VerbalisError`;
the CLI maps these to exit status 1 and reports the class name.
"""


class VerbalisError(Exception):
    """Base class for all domain errors."""


class CapExceeded(VerbalisError):
    """A configured size cap would be exceeded."""


class ClosureExceedsCap(CapExceeded):
    pass


class EnumerationExceedsCap(CapExceeded):
    pass


class OrderExceedsCap(CapExceeded):
    pass


class EvaluationExceedsCap(CapExceeded):
    pass


class UnknownName(VerbalisError):
    pass


class InvalidParameter(VerbalisError):
    pass


class InvalidGroup(VerbalisError):
    """Raised when a multiplication table fails the group axioms."""


class NotNormal(VerbalisError):
    pass


class NotSimple(VerbalisError):
    pass


class NotSubgroup(VerbalisError):
    pass


class UnboundVariable(VerbalisError):
    pass


class UnknownSupport(VerbalisError):
    pass


class ParseError(VerbalisError):
    """Syntax error in word or formula text, with the offending position."""

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


class WordSyntaxError(ParseError):
    pass


class FormulaSyntaxError(ParseError):
    pass
