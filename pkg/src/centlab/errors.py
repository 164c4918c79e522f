"""Exception types raised by the library."""


class CentlabError(Exception):
    """Base class for all library errors."""


class NotAGroup(CentlabError):
    """A Cayley table failed a group axiom."""


class InvalidParameter(CentlabError, ValueError):
    pass


class CapExceeded(CentlabError):
    """An instance is larger than the configured size cap for an operation."""


class NotNormal(CentlabError):
    pass


class ParseError(CentlabError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InternalTheoremViolation(CentlabError, AssertionError):
    """A classification fact that must hold for every Cpo-group failed.

    Reaching this means a bug in the library, not bad input.
    """
