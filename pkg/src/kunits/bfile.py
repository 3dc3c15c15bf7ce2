"""OEIS b-file parsing and predicate cross-checking.

A b-file is UTF-8 text with one ``<index> <value>`` pair per line; lines
whose first non-blank character is '#' and blank lines are ignored.
Indices must strictly increase.  Comparison against a predicate is
index-agnostic: only the value sets up to the limit are compared, since
offset conventions differ between sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .errors import DomainError

__all__ = ["BFile", "BFileParseError", "ComparisonReport", "compare_bfile"]


class BFileParseError(DomainError):
    """Malformed b-file content; carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


@dataclass(frozen=True)
class BFile:
    """Parsed b-file: the source path and the (index, value) entries in order."""

    source_path: str
    entries: tuple[tuple[int, int], ...]

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.entries)

    @classmethod
    def parse_text(cls, text: str, source_path: str = "<string>") -> BFile:
        entries: list[tuple[int, int]] = []
        previous_index: int | None = None
        for line_number, line in enumerate(text.splitlines(), start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            tokens = stripped.split()
            if len(tokens) != 2:
                raise BFileParseError(
                    line_number, f"expected exactly two integer tokens, got {len(tokens)}"
                )
            try:
                index, value = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise BFileParseError(
                    line_number, f"non-integer token in {stripped!r}"
                ) from None
            if value < 0:
                raise BFileParseError(line_number, f"negative value {value}")
            if previous_index is not None and index <= previous_index:
                raise BFileParseError(
                    line_number,
                    f"index {index} does not increase past {previous_index}",
                )
            previous_index = index
            entries.append((index, value))
        return cls(source_path=source_path, entries=tuple(entries))

    @classmethod
    def parse_path(cls, path: str | Path) -> BFile:
        return cls.parse_text(Path(path).read_text(encoding="utf-8"), str(path))


@dataclass(frozen=True)
class ComparisonReport:
    """Outcome of checking a b-file against a predicate over [1, limit]."""

    source_path: str
    predicate: str
    limit: int
    compared: int
    missing: tuple[int, ...]  # predicate holds but value absent from the file
    extra: tuple[int, ...]  # value in the file but predicate does not hold

    @property
    def matched(self) -> bool:
        return not self.missing and not self.extra


def compare_bfile(
    bfile: BFile,
    predicate_name: str,
    predicate: Callable[[int], bool],
    limit: int | None = None,
) -> ComparisonReport:
    """Compare the file's value set against {n in [1, L] : predicate(n)}.

    L is ``limit`` when given, else the largest value in the file; file
    values above L are ignored.  An empty file compares 0 terms and
    matches.
    """
    if not bfile.entries:
        return ComparisonReport(bfile.source_path, predicate_name, limit or 0, 0, (), ())
    top = limit if limit is not None else max(bfile.values)
    file_values = {v for v in bfile.values if 1 <= v <= top}
    computed = {n for n in range(1, top + 1) if predicate(n)}
    return ComparisonReport(
        source_path=bfile.source_path,
        predicate=predicate_name,
        limit=top,
        compared=len(file_values),
        missing=tuple(sorted(computed - file_values)),
        extra=tuple(sorted(file_values - computed)),
    )
