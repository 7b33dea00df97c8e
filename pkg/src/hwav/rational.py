"""Exact rational helpers: parsing, formatting and small dense solves."""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class RationalParseError(ValueError):
    pass


def parse_rational(text: str) -> Fraction:
    """Parse ``"a"`` or ``"a/b"``. Decimal and float notation is rejected."""
    match = _RATIONAL.match(text)
    if match is None:
        raise RationalParseError(f"not an exact rational: {text!r} (use integers or a/b)")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise RationalParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def parse_vector(text: str) -> tuple[Fraction, ...]:
    if not text.strip():
        return ()
    return tuple(parse_rational(part) for part in text.split(","))


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_vector(v: Iterable[Fraction]) -> list[str]:
    return [format_rational(x) for x in v]


def common_denominator(v: Iterable[Fraction]) -> int:
    d = 1
    for x in v:
        d = lcm(d, Fraction(x).denominator)
    return d


def scale_to_integers(v: Sequence[Fraction], even: bool = True) -> tuple[tuple[int, ...], int]:
    """Return ``(V, D)`` with ``v == V / D``; ``D`` is made even when requested."""
    d = common_denominator(v)
    if even and d % 2:
        d *= 2
    return tuple(int(Fraction(x) * d) for x in v), d


def solve_exact(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Solve ``matrix @ x == rhs`` exactly by Gauss-Jordan elimination.

    The matrix may be tall (more equations than unknowns) as long as it has
    full column rank and the system is consistent; otherwise ValueError.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if len(rhs) != rows:
        raise ValueError("right-hand side length does not match the matrix")
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    pivot_row = 0
    for col in range(cols):
        pivot = next((r for r in range(pivot_row, rows) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix does not have full column rank")
        aug[pivot_row], aug[pivot] = aug[pivot], aug[pivot_row]
        p = aug[pivot_row][col]
        aug[pivot_row] = [x / p for x in aug[pivot_row]]
        for r in range(rows):
            if r != pivot_row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[pivot_row])]
        pivot_row += 1
    for r in range(pivot_row, rows):
        if aug[r][cols] != 0:
            raise ValueError("inconsistent linear system")
    return tuple(aug[r][cols] for r in range(cols))


def inverse_exact(matrix: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Inverse of a square nonsingular matrix, exactly."""
    k = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(matrix)]
    for col in range(k):
        pivot = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        if p != 1:
            aug[col] = [x / p for x in aug[col]]
        row_c = aug[col]
        for r in range(k):
            f = aug[r][col]
            if r != col and f != 0:
                aug[r] = [x - f * y if y else x for x, y in zip(aug[r], row_c)]
    return [row[k:] for row in aug]
