"""Exception types shared across the library."""


class FormatError(ValueError):
    """Malformed input: bad tables, bad group specifiers, bad files."""


class GroupAxiomError(ValueError):
    """A claimed Cayley table fails one of the group axioms."""


class ParseError(FormatError):
    """Text does not match the element grammar; carries the offset."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class SizeLimitError(RuntimeError):
    """An enumeration or sweep would exceed the configured size limit."""

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class NotAChamberError(ValueError):
    """A partition has a non-singleton block where a chamber is required."""


class NotInSpanError(ValueError):
    """An element lies outside the descent algebra; carries a witness pair."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvarianceViolationError(RuntimeError):
    """A sum that should be symmetric-group invariant has a non-constant
    coefficient on some type fiber.  Signals an implementation bug, not a
    user error."""
