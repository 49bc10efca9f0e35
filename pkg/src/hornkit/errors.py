"""Exception hierarchy shared by all hornkit modules."""


class HornkitError(Exception):
    """Base class for all errors raised by hornkit."""


class ParseError(HornkitError):
    pass


class UnknownVariable(ParseError):
    pass


class TautologicalClause(HornkitError):
    pass


class EmptyClause(HornkitError):
    pass


class UniverseMismatch(HornkitError):
    pass


class NotHorn(HornkitError):
    pass


class TooLarge(HornkitError):
    """An input exceeds a configured brute-force bound."""


class UniverseTooLarge(TooLarge):
    pass


class SetTooLarge(TooLarge):
    pass


class NotClosed(HornkitError):
    pass


class EmptyModelSet(HornkitError):
    pass


class UnsatisfiableBase(HornkitError):
    pass


class UnsatisfiableUpdate(HornkitError):
    pass


class NeedsSemanticFallback(HornkitError):
    """Raised when no fast construction exists and the caller must enumerate."""


class BadIndex(HornkitError):
    pass


class NotPure(HornkitError):
    pass
