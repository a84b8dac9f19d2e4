"""Exception types raised by the library."""


class CharoneError(Exception):
    """Base class for library errors."""


class DepthExceeded(CharoneError):
    """A continued-fraction slope ran out of terms before a comparison was decided."""


class UnsupportedSlopeProduct(CharoneError):
    """The rationality of a slope product cannot be decided exactly."""


class HullMismatch(CharoneError, ValueError):
    pass


class NotRecoverable(CharoneError, ValueError):
    pass


class NotInSubgroup(CharoneError, ValueError):
    pass


class DivergenceError(CharoneError, ArithmeticError):
    pass


class SupportError(CharoneError, ValueError):
    pass


class ConfigError(CharoneError, ValueError):
    pass


class ParseError(CharoneError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnsupportedComposition(CharoneError):
    """Composition with an already deformed correspondence is not supported."""
