"""Shared exception types and the universe-size cap."""

from __future__ import annotations

import os

DEFAULT_BMAX = 1 << 24


class MsumError(Exception):
    """Base class for all library errors."""


class ParameterError(MsumError, ValueError):
    """Invalid argument or malformed inline input (CLI exit code 2)."""


class SetFormatError(MsumError, ValueError):
    """Malformed set text input; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceLimitError(MsumError):
    """A requested bound exceeds the configured cap (CLI exit code 3)."""


class ConditionError(MsumError):
    """A mathematical hypothesis fails on the concrete input (CLI exit code 1).

    `kind` is a stable machine-readable tag, `details` a JSON-able payload.
    """

    def __init__(self, kind: str, message: str, details: dict | None = None):
        self.kind = kind
        self.details = details if details is not None else {}
        super().__init__(message)


class WitnessError(MsumError):
    """A witness fails verification against the ambient set (CLI exit code 1)."""


def bmax() -> int:
    """Largest allowed horizon; override with the MSUM_BMAX environment variable."""
    raw = os.environ.get("MSUM_BMAX")
    if raw is None:
        return DEFAULT_BMAX
    try:
        value = int(raw)
    except ValueError as exc:
        raise ParameterError(f"MSUM_BMAX must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ParameterError("MSUM_BMAX must be >= 1")
    return value
