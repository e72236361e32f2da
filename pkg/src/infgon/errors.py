"""
Exception hierarchy for the infgon engine.

Operations raise these; only the CLI layer turns them into exit codes.
"""


class InfgonError(Exception):
    """Base class for every error raised by the engine."""


class ContractViolation(InfgonError):
    """An operation was called outside its precondition."""


class SchemaError(InfgonError):
    """A JSON payload did not match the expected schema.

    Args:
        message: Human readable description
        location: Where in the payload the problem was found (e.g. "rects.0.I")
    """

    def __init__(self, message: str, location: str = ""):
        self.location = location
        if location:
            message = f"{message} (at {location})"
        super().__init__(message)
