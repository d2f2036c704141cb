"""Exception types shared across the package.

Plain ValueError is used for ordinary argument misuse (zero vectors,
k < 4, empty point sets).  The classes below exist where callers need to
tell failure modes apart, e.g. for CLI exit codes.
"""


class HitSetError(Exception):
    """Base class for package-specific failures."""


class ParseError(HitSetError):
    """Malformed instance/stream/report file.  Carries file and line info."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}:" if line is None else f"{path}:{line}:"
        super().__init__(f"{where} {message}" if where else message)


class DegeneratePairError(HitSetError):
    """Two translates with identical centers where distinct ones are required."""


class DegenerateConfigurationError(HitSetError):
    """Input in general-position terms the algorithm cannot tolerate
    (e.g. two extreme points at the same angle from a quadrant center)."""


class BrokenInvariantError(HitSetError):
    """A structural guarantee failed at runtime; indicates a bug or an
    object that violates the preconditions of the online engine."""


class TooLargeError(HitSetError):
    """Exact solver scale guard exceeded."""


class ProtocolViolationError(HitSetError):
    """A game responder broke the referee's contract."""


class InfeasibleObjectError(HitSetError):
    """An arriving object contains no point of the ground set."""
