from __future__ import annotations


class PathCoverError(Exception):
    """Base class for every error the library raises on bad input or state."""

    exit_code: int = 1


class PreconditionError(PathCoverError):
    exit_code = 2


class GraphParseError(PathCoverError):
    exit_code = 3

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class OracleTooLargeError(PathCoverError):
    exit_code = 4

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(
            f"instance too large for oracle: n={n} exceeds cap {cap}"
        )


class VerificationError(PathCoverError):
    """A solver produced a set that is not a cover. Always an internal bug."""

    exit_code = 5


def error_response(
    exit_code: int, message: str, detail: dict | None = None
) -> dict:
    content: dict = {"error": message, "exit_code": exit_code}
    if detail is not None:
        content["detail"] = detail
    return content
