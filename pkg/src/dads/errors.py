"""Exception hierarchy shared by every module."""


class DadsError(Exception):
    """Base class for all errors raised by the package."""


class NotPrimeError(DadsError, ValueError):
    """The requested field modulus is not a prime in the supported range."""


class DomainError(DadsError, ValueError):
    """Mismatched shapes, variable counts, fields, or truncation bounds."""


class OutsideBallError(DomainError):
    """A coefficient outside the known total-degree ball was requested."""


class SchemaError(DadsError, ValueError):
    """A JSON document does not follow the expected file format."""
