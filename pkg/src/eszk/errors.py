"""Exception taxonomy shared by all eszk modules."""


class EszkError(Exception):
    """Base class for all errors raised by this package."""


class InputError(EszkError):
    """A value handed to the library violates its documented constraints."""


class ParseError(InputError):
    """Malformed polygon file; the message carries a line/position hint."""


class PreconditionError(EszkError):
    """An operation was called outside its contract (e.g. a strict-only
    test on a non-strict polygon)."""


class CapabilityError(EszkError):
    """The request is well-formed but exceeds a hard enumeration or size
    limit; no partial answer is returned."""


class ExhaustionError(EszkError):
    """A bounded randomized retry loop ran out of attempts."""

    def __init__(self, message: str, attempts: int = 0):
        super().__init__(message)
        self.attempts = attempts
