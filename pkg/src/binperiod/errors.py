"""Exception hierarchy shared by every module."""


class SignalError(Exception):
    """Base class. Analysis errors map to CLI exit code 1."""


class ParseError(SignalError):
    """Malformed text input. Carries an optional location string."""

    def __init__(self, message, location=None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class WidthError(SignalError):
    pass


class DomainError(SignalError):
    pass


class NotInOrbit(SignalError):
    pass


class NotEventuallyPeriodic(SignalError):
    pass


class ConstantSignal(SignalError):
    pass


class HorizonError(SignalError):
    pass


class WindowError(SignalError):
    pass


class GridMismatch(SignalError):
    pass


class EditConflict(SignalError):
    pass


class RepresentationError(SignalError):
    pass
