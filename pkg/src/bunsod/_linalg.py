"""Exact row reduction over Q with deterministic pivoting.

Vectors are dense lists of Fractions. Pivots are taken left to right, so
the column order chosen by the caller fixes the resulting basis.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def rref(rows: Iterable[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    for row in mat:
        if len(row) != ncols:
            raise ValueError(f"row of length {len(row)}, expected {ncols}")
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        lead = mat[r][col]
        if lead != 1:
            mat[r] = [x / lead for x in mat[r]]
        prow = mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], prow)]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Iterable[Sequence], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


class Span:
    """Growing subspace of Q^n kept in reduced echelon form."""

    def __init__(self, ncols: int, vectors: Iterable[Sequence] = ()):
        self.ncols = ncols
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: Sequence) -> list[Fraction]:
        """Residue of ``v`` after cancelling every pivot coordinate."""
        w = [Fraction(x) for x in v]
        for row, p in zip(self.rows, self.pivots):
            if w[p]:
                f = w[p]
                w = [a - f * b for a, b in zip(w, row)]
        return w

    def __contains__(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; returns True if the dimension grew."""
        w = self.reduce(v)
        col = next((i for i, x in enumerate(w) if x), None)
        if col is None:
            return False
        lead = w[col]
        w = [x / lead for x in w]
        for i, row in enumerate(self.rows):
            if row[col]:
                f = row[col]
                self.rows[i] = [a - f * b for a, b in zip(row, w)]
        self.rows.append(w)
        self.pivots.append(col)
        order = sorted(range(len(self.rows)), key=self.pivots.__getitem__)
        self.rows = [self.rows[i] for i in order]
        self.pivots = [self.pivots[i] for i in order]
        return True
