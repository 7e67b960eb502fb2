"""Exception hierarchy shared by the engine modules."""


class StratArgError(Exception):
    """Base class for every error raised by the engine."""


class UnknownArgumentError(StratArgError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class SizeBoundExceeded(StratArgError):
    """Raised when an exhaustive computation would exceed its configured size bound.

    This signals a desk-scale limit, not malformed input.
    """


class IllegalMoveError(StratArgError, ValueError):
    pass


class WrongTurnError(IllegalMoveError):
    pass


class IneffectiveMoveError(IllegalMoveError):
    pass


class NotEffectiveError(StratArgError, ValueError):
    """A minimality query was asked about a move that is not effective."""


class UnknownFixtureError(StratArgError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class InvalidParamsError(StratArgError, ValueError):
    pass


class FormatError(StratArgError, ValueError):
    """Malformed framework or trace file."""
