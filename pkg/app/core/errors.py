from __future__ import annotations


class CharVarError(Exception):
    """Base error carrying the CLI exit code and a human readable detail."""

    exit_code: int = 1

    def __init__(self, detail: str, exit_code: int | None = None) -> None:
        super().__init__(detail)
        self.detail = detail
        if exit_code is not None:
            self.exit_code = exit_code


class UsageError(CharVarError):
    exit_code = 1


class InvariantViolation(CharVarError):
    """Enumeration and closed form disagree, or an exact construction failed to close."""

    exit_code = 2
