"""Custom exception hierarchy for sylowscope."""


class SylowScopeError(Exception):
    """Base exception for all sylowscope errors."""


class GroupSyntaxError(SylowScopeError):
    """A group expression does not match the group grammar."""


class GroupValidityError(SylowScopeError):
    """A well-formed group expression that does not name a simple group in the universe."""

    def __init__(self, message: str, code: str = "invalid"):
        self.code = code
        super().__init__(message)


class StructureSyntaxError(SylowScopeError):
    """A structure string such as ``C5^2`` could not be parsed."""


class PreconditionError(SylowScopeError):
    """An operation was called outside its domain."""


class TableEncodingError(SylowScopeError):
    """The cyclotomic tables produced an inexact order; this is a bug in the tables."""


class ConfigError(SylowScopeError):
    """Error reading or writing configuration."""
