"""Exception types shared by every module."""


class InvalidInputError(ValueError):
    """Raised when an argument violates an operation's precondition."""


class InvariantViolation(RuntimeError):
    """Raised when an internal consistency check fails.

    Seeing one of these means either a bug or an input that lies outside the
    geometric model (for instance a configuration whose -1-curves cannot be
    contracted in the expected way).
    """
