"""Reader and writer for the shared set text format.

One positive integer per line, strictly ascending.  Lines starting with
'#' are comments; an optional '!horizon B' header line before the first
element declares the horizon (default: the largest element).
"""

from __future__ import annotations

import os

from .errors import SetFormatError
from .intset import IntSet

__all__ = ["parse_set_text", "read_set_file", "format_set_text", "write_set_file"]


def parse_set_text(text: str) -> IntSet:
    horizon: int | None = None
    elements: list[int] = []
    prev = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("!"):
            fields = line.split()
            if fields[0] != "!horizon" or len(fields) != 2:
                raise SetFormatError(f"unknown directive {line!r}", lineno)
            if elements:
                raise SetFormatError("!horizon must precede the elements", lineno)
            if horizon is not None:
                raise SetFormatError("duplicate !horizon directive", lineno)
            try:
                horizon = int(fields[1])
            except ValueError:
                raise SetFormatError(f"horizon must be an integer, got {fields[1]!r}", lineno)
            if horizon < 1:
                raise SetFormatError("horizon must be >= 1", lineno)
            continue
        try:
            value = int(line)
        except ValueError:
            raise SetFormatError(f"expected an integer, got {line!r}", lineno)
        if value < 1:
            raise SetFormatError(f"elements must be >= 1, got {value}", lineno)
        if value <= prev:
            raise SetFormatError(
                f"elements must be strictly ascending ({value} after {prev})", lineno
            )
        if horizon is not None and value > horizon:
            raise SetFormatError(f"element {value} exceeds the declared horizon {horizon}", lineno)
        elements.append(value)
        prev = value
    if not elements:
        raise SetFormatError("no elements found")
    return IntSet(elements, horizon)


def read_set_file(path: str | os.PathLike) -> IntSet:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_set_text(fh.read())


def format_set_text(S: IntSet) -> str:
    lines = [f"!horizon {S.horizon}"]
    lines.extend(str(e) for e in S.elements)
    return "\n".join(lines) + "\n"


def write_set_file(S: IntSet, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_set_text(S))
