"""Exact rational matrices, minors and determinants.

Entries are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator, so equality is structural.  Every public
index is 1-based.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Iterator, Sequence, Union

from .errors import DimensionError, DomainError, VertexIndexError

RationalLike = Union[int, str, Fraction]


def parse_rational(value: RationalLike) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a canonical Fraction.

    Floats are refused: they would smuggle in a lossy binary approximation.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact entry {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact rational: {value!r}") from exc
    raise TypeError(f"unsupported entry type {type(value).__name__}")


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class VertexSubset:
    """A subset of {1, ..., n}, stored as a strictly increasing tuple."""

    n: int
    members: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        members = tuple(sorted(self.members))
        for a, b in zip(members, members[1:]):
            if a == b:
                raise ValueError(f"duplicate vertex {a}")
        for v in members:
            if not 1 <= v <= self.n:
                raise VertexIndexError(f"vertex {v} outside 1..{self.n}")
        object.__setattr__(self, "members", members)

    @classmethod
    def full(cls, n: int) -> "VertexSubset":
        return cls(n, tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def with_vertex(self, v: int) -> "VertexSubset":
        return VertexSubset(self.n, self.members + (v,))

    def count_below(self, x: int) -> int:
        """Number of members strictly smaller than ``x``."""
        return sum(1 for v in self.members if v < x)

    def complement(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if v not in self.members)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


@dataclass(frozen=True)
class ExactMatrix:
    """Row-major rows x cols grid of Fractions.  A 0x0 matrix is legal."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise DimensionError(
                f"entries do not form a {self.rows}x{self.cols} grid"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]], cols: int | None = None) -> "ExactMatrix":
        grid = tuple(tuple(parse_rational(x) for x in row) for row in rows)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        return cls(len(grid), cols, grid)

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise VertexIndexError(f"entry ({i},{j}) outside {self.rows}x{self.cols}")
        return self.entries[i - 1][j - 1]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def replace(self, updates: dict[tuple[int, int], RationalLike]) -> "ExactMatrix":
        """Copy with the given 1-based entries overwritten."""
        grid = self.to_lists()
        for (i, j), v in updates.items():
            self[i, j]  # range check
            grid[i - 1][j - 1] = parse_rational(v)
        return ExactMatrix(self.rows, self.cols, tuple(tuple(r) for r in grid))

    def to_json_obj(self) -> dict:
        if not self.is_square:
            raise DimensionError("matrix JSON format holds square matrices only")
        return {
            "n": self.rows,
            "entries": [[format_rational(x) for x in row] for row in self.entries],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "ExactMatrix":
        try:
            n = obj["n"]
            entries = obj["entries"]
        except (KeyError, TypeError) as exc:
            raise ValueError("matrix JSON needs fields 'n' and 'entries'") from exc
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"bad matrix size {n!r}")
        if len(entries) != n or any(len(r) != n for r in entries):
            raise ValueError(f"'entries' is not an {n}x{n} array")
        return cls.from_rows(entries, cols=n)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> "ExactMatrix":
        return cls.from_json_obj(json.loads(text))


def _require_square(M: ExactMatrix) -> None:
    if not M.is_square:
        raise DimensionError(f"expected a square matrix, got {M.rows}x{M.cols}")


def column_sums(M: ExactMatrix) -> list[Fraction]:
    return [sum((M.entries[r][c] for r in range(M.rows)), Fraction(0)) for c in range(M.cols)]


def is_semi_laplacian(M: ExactMatrix) -> bool:
    """True iff every column of the square matrix ``M`` sums to zero."""
    _require_square(M)
    return all(s == 0 for s in column_sums(M))


def kept_indices(n: int, deleted: Iterable[int]) -> list[int]:
    """1-based indices of 1..n that survive deleting ``deleted``."""
    deleted = set(deleted)
    for v in deleted:
        if not 1 <= v <= n:
            raise VertexIndexError(f"index {v} outside 1..{n}")
    return [v for v in range(1, n + 1) if v not in deleted]


def minor(M: ExactMatrix, W: Iterable[int], U: Iterable[int]) -> ExactMatrix:
    """Delete the rows in ``W`` and the columns in ``U``, keeping order."""
    rows = kept_indices(M.rows, W)
    cols = kept_indices(M.cols, U)
    grid = tuple(tuple(M.entries[r - 1][c - 1] for c in cols) for r in rows)
    return ExactMatrix(len(rows), len(cols), grid)


def bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix (destroys ``rows``)."""
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if rows[r][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            a = ri[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                ri[j] = (pivot * ri[j] - a * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def det_exact(M: ExactMatrix) -> Fraction:
    """Exact determinant; the 0x0 determinant is 1.

    Each row is scaled by the lcm of its denominators, the integer matrix is
    reduced with Bareiss elimination, and the scale is divided back out.
    """
    _require_square(M)
    scale = 1
    int_rows: list[list[int]] = []
    for row in M.entries:
        d = lcm(*(x.denominator for x in row)) if row else 1
        scale *= d
        int_rows.append([x.numerator * (d // x.denominator) for x in row])
    return Fraction(bareiss_det(int_rows), scale)


def random_semi_laplacian(n: int, entry_bound: int, seed: int | str) -> ExactMatrix:
    """Seeded random integer matrix whose columns all sum to zero.

    Off-diagonal entries are uniform in [-entry_bound, entry_bound]; each
    diagonal entry is the negated sum of the rest of its column.
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    if entry_bound < 1:
        raise DomainError("entry_bound must be at least 1")
    rng = random.Random(seed)
    grid = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                grid[i][j] = rng.randint(-entry_bound, entry_bound)
    for j in range(n):
        grid[j][j] = -sum(grid[i][j] for i in range(n) if i != j)
    return ExactMatrix.from_rows(grid, cols=n)
