"""Delimited text format for square max-plus matrices.

A document is n nonempty lines of n whitespace-separated tokens.  Tokens
are ``-inf``, integers, fractions ``p/q``, or decimals; decimals convert
exactly (``2.5`` reads as 5/2).  Errors carry 1-based line and column
positions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .semiring import (
    ExtReal,
    MpMatrix,
    MpVector,
    format_scalar,
    parse_scalar,
)


class MatrixParseError(ValueError):
    """Malformed matrix or vector text, with a 1-based location."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


@dataclass(frozen=True)
class MatrixDocument:
    """A parsed square matrix plus an optional eigenparameter shift.

    ``lambda_shift`` is the user-requested threshold L for solving
    A (x) >= L (x); :meth:`effective_matrix` folds it into the matrix by
    subtracting L from every entry, reducing to the plain problem.
    """

    matrix: MpMatrix
    lambda_shift: ExtReal | None = None

    @property
    def n(self) -> int:
        return len(self.matrix)

    def effective_matrix(self) -> MpMatrix:
        if self.lambda_shift is None or self.lambda_shift == 0:
            return self.matrix
        return self.matrix.shift(-self.lambda_shift)


def parse_matrix(text: str) -> MatrixDocument:
    """Parse delimited text into a square matrix document."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise MatrixParseError("empty input, expected a square matrix")
    for li, line in enumerate(lines, start=1):
        if not line.strip():
            raise MatrixParseError("blank line inside matrix", line=li)
    n = len(lines)
    rows = []
    for li, line in enumerate(lines, start=1):
        tokens = line.split()
        if len(tokens) != n:
            raise MatrixParseError(
                f"expected {n} entries to match {n} rows, got {len(tokens)}",
                line=li,
            )
        row = []
        for ci, tok in enumerate(tokens, start=1):
            try:
                row.append(parse_scalar(tok))
            except ValueError:
                raise MatrixParseError(
                    f"bad scalar token {tok!r}", line=li, column=ci
                ) from None
        rows.append(row)
    return MatrixDocument(MpMatrix.from_rows(rows))


def parse_vector(text: str, n: int) -> MpVector:
    """Parse n whitespace-separated scalar tokens."""
    tokens = text.split()
    if len(tokens) != n:
        raise MatrixParseError(
            f"expected {n} vector entries, got {len(tokens)}"
        )
    entries = []
    for ci, tok in enumerate(tokens, start=1):
        try:
            entries.append(parse_scalar(tok))
        except ValueError:
            raise MatrixParseError(
                f"bad scalar token {tok!r}", line=1, column=ci
            ) from None
    return MpVector(entries)


def render_matrix(a: MpMatrix) -> str:
    """Inverse of parse_matrix for the matrix part: one line per row."""
    return "\n".join(
        " ".join(format_scalar(e) for e in row) for row in a
    ) + "\n"
