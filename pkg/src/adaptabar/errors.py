"""Exception types shared across the engine.

Each error carries a short stable ``code`` that the replay harness writes
into snapshot error logs, so the class names can evolve without breaking
golden files.
"""


class EngineError(Exception):
    """Base class for every error the engine raises on purpose."""

    code = "EngineError"


class DuplicateControlIdError(EngineError):
    code = "DuplicateControlId"


class DuplicateActionError(EngineError):
    code = "DuplicateAction"


class UnknownControlError(EngineError):
    code = "UnknownControl"


class MissingWidthError(EngineError):
    code = "MissingWidth"


class UnknownToolbarError(EngineError):
    code = "UnknownToolbar"


class BadBoundaryError(EngineError):
    code = "BadBoundary"


class BadPositionError(EngineError):
    code = "BadPosition"


class InvalidOptionError(EngineError):
    code = "InvalidOption"


class UnknownContextError(EngineError):
    code = "UnknownContext"


class TraceParseError(EngineError):
    """Malformed trace input. Unlike other engine errors this aborts a replay."""

    code = "TraceParse"


class DefsParseError(EngineError):
    """Malformed toolbar/chain/palette definitions document."""

    code = "DefsParse"


class ProfileParseError(EngineError):
    """Malformed usage-profile file. Never silently replaced with a fresh one."""

    code = "ProfileParse"
