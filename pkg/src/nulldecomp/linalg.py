"""Exact rational linear algebra: RREF, rank, and canonical null-space bases.

Everything runs over ``fractions.Fraction``, so "this coordinate is zero" is a
decidable, exact test.  That exactness is what the rest of the package is built
on: supports are defined through exact zero/nonzero coordinates, which no
floating-point elimination can provide.

Matrices are plain lists of lists of Fractions; vectors are tuples of
Fractions.  All functions are pure and never mutate their arguments.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch

Vector = tuple[Fraction, ...]
Matrix = list[list[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


def rref(matrix: Sequence[Sequence[Fraction]]) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row echelon form of ``matrix``.

    Returns ``(R, rank, pivot_columns)``.  The RREF is the unique one over the
    rationals; pivoting is plain first-nonzero since exact arithmetic needs no
    numerical care.
    """
    rows = [[Fraction(x) for x in row] for row in matrix]
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, r, tuple(pivots)


def rank(matrix: Sequence[Sequence[Fraction]]) -> int:
    return rref(matrix)[1]


def nullity(matrix: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the kernel: columns minus rank."""
    n_cols = len(matrix[0]) if matrix else 0
    return n_cols - rank(matrix)


def null_space_basis(matrix: Sequence[Sequence[Fraction]]) -> list[Vector]:
    """Canonical kernel basis read off the RREF free columns.

    One vector per free column, carrying 1 at its own free column and 0 at all
    the others; ordered by free-column index.  This normalization makes the
    basis unique, so downstream outputs are reproducible.
    """
    if not matrix:
        return []
    reduced, _, pivots = rref(matrix)
    n_cols = len(matrix[0])
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        coords = [ZERO] * n_cols
        coords[free] = ONE
        for row_idx, pivot_col in enumerate(pivots):
            coords[pivot_col] = -reduced[row_idx][free]
        basis.append(tuple(coords))
    return basis


def mat_vec(matrix: Sequence[Sequence[Fraction]], vec: Sequence[Fraction]) -> Vector:
    if matrix and len(vec) != len(matrix[0]):
        raise DimensionMismatch(
            f"matrix has {len(matrix[0])} columns, vector has {len(vec)} coordinates"
        )
    return tuple(sum((a * b for a, b in zip(row, vec)), ZERO) for row in matrix)


def is_zero_vector(vec: Iterable[Fraction]) -> bool:
    return all(x == 0 for x in vec)


def vec_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> Vector:
    if len(a) != len(b):
        raise DimensionMismatch(f"vector lengths differ: {len(a)} vs {len(b)}")
    return tuple(x + y for x, y in zip(a, b))


def vec_scale(c: Fraction, vec: Sequence[Fraction]) -> Vector:
    return tuple(c * x for x in vec)


def support_indices(vec: Sequence[Fraction]) -> frozenset[int]:
    """Indices of the nonzero coordinates."""
    return frozenset(i for i, x in enumerate(vec) if x != 0)


def row_space_signature(vectors: Sequence[Sequence[Fraction]]) -> tuple[Vector, ...]:
    """The nonzero RREF rows of the stacked vectors: a canonical form of their span."""
    if not vectors:
        return ()
    reduced, rk, _ = rref([list(v) for v in vectors])
    return tuple(tuple(row) for row in reduced[:rk])


def same_span(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> bool:
    """Exact row-space equality, via uniqueness of the RREF."""
    return row_space_signature(a) == row_space_signature(b)
