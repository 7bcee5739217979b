"""Exception hierarchy shared by every tileforge module."""


class TileforgeError(Exception):
    """Base class for all domain errors raised by tileforge."""


class DimensionError(TileforgeError, ValueError):
    pass


class EmptyInputError(TileforgeError, ValueError):
    pass


class InvalidArgument(TileforgeError, ValueError):
    pass


class InvalidBridgeSpec(TileforgeError, ValueError):
    pass


class ProjectionError(TileforgeError, ValueError):
    """A set does not embed injectively into the requested finite group."""


class DivisibilityError(TileforgeError, ValueError):
    pass


class SingleComponentError(TileforgeError, ValueError):
    pass


class OverlapSearchExhausted(TileforgeError, RuntimeError):
    pass


class RoundLimitError(TileforgeError, RuntimeError):
    """Raised by the spiral bridge when it runs out of rounds.

    ``log`` holds the rounds completed so far and ``partial`` the cube set
    reached after the last completed round.
    """

    def __init__(self, message, log=(), partial=None):
        super().__init__(message)
        self.log = list(log)
        self.partial = partial


class ValidationError(TileforgeError, ValueError):
    pass


class OverlapError(ValidationError):
    """Two cubes of a cube set share interior points."""


class ParseError(TileforgeError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RenderError(TileforgeError, ValueError):
    pass
