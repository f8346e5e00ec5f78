"""Exception types shared across the package."""


class AtomspecError(Exception):
    """Base class for all errors raised by this package."""


class InputError(AtomspecError):
    """Malformed or inconsistent input (bad dimensions, bad files, bad values)."""


class ParseError(InputError):
    """Text input that does not match the expected grammar.

    Carries the character offset of the offending token when known.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnsupportedInputError(AtomspecError):
    """Well-formed input outside the supported class of this implementation."""


class ResourceLimitError(UnsupportedInputError):
    """An enumeration cap would be exceeded; raise instead of running forever."""


class InternalInvariantError(AtomspecError):
    """An internal consistency check failed; indicates a bug, not bad input."""
