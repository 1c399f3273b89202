from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable
import numpy as np
from sympy import Matrix
from settings import logging
from scripts.groups.words import Presentation, exponent_sums


# ─────────────────────────────────────────────────────────────
# INTEGER MATRICES
# ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class IntegerMatrix:
    ''' Immutable integer matrix; arithmetic runs on numpy object arrays so entries never overflow '''
    entries: tuple[tuple[int, ...], ...]
    cols: int

    def __post_init__(self):
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError(f"Row of length {len(row)} in a matrix with {self.cols} columns")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], cols: int | None = None) -> IntegerMatrix:
        entries = tuple(tuple(int(value) for value in row) for row in rows)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        return cls(entries, cols)

    @classmethod
    def from_array(cls, array: np.ndarray) -> IntegerMatrix:
        rows, cols = array.shape
        return cls.from_rows(array.tolist(), cols=cols)

    @classmethod
    def identity(cls, size: int) -> IntegerMatrix:
        return cls.from_rows([[int(i == j) for j in range(size)] for i in range(size)], cols=size)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key: tuple[int, int]) -> int:
        row, col = key
        return self.entries[row][col]

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        return IntegerMatrix.from_array(self.to_array() @ other.to_array())

    def to_array(self) -> np.ndarray:
        array = np.zeros(self.shape, dtype=object)
        for i, row in enumerate(self.entries):
            for j, value in enumerate(row):
                array[i, j] = value
        return array

    def to_sympy(self) -> Matrix:
        return Matrix(self.rows, self.cols, [value for row in self.entries for value in row])

    def determinant(self) -> int:
        if self.rows != self.cols:
            raise ValueError(f"Determinant of a non-square {self.shape} matrix")
        return int(self.to_sympy().det())

    def diagonal(self) -> list[int]:
        return [self.entries[i][i] for i in range(min(self.shape))]

    def is_diagonal(self) -> bool:
        return all(value == 0 for i, row in enumerate(self.entries) for j, value in enumerate(row) if i != j)


# ─────────────────────────────────────────────────────────────
# DENSE SMITH NORMAL FORM
# ─────────────────────────────────────────────────────────────

def _move_least_to_start(D: np.ndarray, U: np.ndarray, V: np.ndarray, s: int) -> None:
    ''' Swaps the smallest nonzero entry of the trailing block to (s, s) and makes it positive '''
    block = D[s:, s:]
    positions = [(abs(block[i, j]), i, j) for i, j in zip(*np.nonzero(block != 0))]
    _, i, j = min(positions)
    i, j = i + s, j + s
    if i != s:
        D[[s, i], :] = D[[i, s], :]
        U[[s, i], :] = U[[i, s], :]
    if j != s:
        D[:, [s, j]] = D[:, [j, s]]
        V[:, [s, j]] = V[:, [j, s]]
    if D[s, s] < 0:
        D[s, :] = -D[s, :]
        U[s, :] = -U[s, :]


def _reduce_edging(D: np.ndarray, U: np.ndarray, V: np.ndarray, s: int) -> bool:
    ''' Clears row s and column s modulo the pivot; True once both are zero '''
    rows, cols = D.shape
    pivot = D[s, s]
    for i in range(s + 1, rows):
        if quotient := D[i, s] // pivot:
            D[i, :] = D[i, :] - quotient * D[s, :]
            U[i, :] = U[i, :] - quotient * U[s, :]
    for j in range(s + 1, cols):
        if quotient := D[s, j] // pivot:
            D[:, j] = D[:, j] - quotient * D[:, s]
            V[:, j] = V[:, j] - quotient * V[:, s]
    return not any(D[s + 1:, s]) and not any(D[s, s + 1:])


def _ensure_divisibility(D: np.ndarray, U: np.ndarray, s: int) -> bool:
    ''' Adds a row holding an entry the pivot does not divide into row s; True if nothing to fix '''
    pivot = D[s, s]
    for i, j in zip(*np.nonzero(D[s + 1:, s + 1:] != 0)):
        if D[i + s + 1, j + s + 1] % pivot:
            D[s, :] = D[s, :] + D[i + s + 1, :]
            U[s, :] = U[s, :] + U[i + s + 1, :]
            return False
    return True


def smith_normal_form(matrix: IntegerMatrix) -> tuple[IntegerMatrix, IntegerMatrix, IntegerMatrix]:
    """
    Returns (D, U, V) with U·M·V = D, U and V unimodular and D diagonal with
    nonnegative entries d1 | d2 | ... followed by zeros.
    """
    D = matrix.to_array()
    U = IntegerMatrix.identity(matrix.rows).to_array()
    V = IntegerMatrix.identity(matrix.cols).to_array()

    for s in range(min(matrix.shape)):
        if not np.count_nonzero(D[s:, s:]):
            break
        while True:
            _move_least_to_start(D, U, V, s)
            if not _reduce_edging(D, U, V, s):
                continue
            if _ensure_divisibility(D, U, s):
                break

    return IntegerMatrix.from_array(D), IntegerMatrix.from_array(U), IntegerMatrix.from_array(V)


# ─────────────────────────────────────────────────────────────
# SPARSE ELEMENTARY DIVISORS
# ─────────────────────────────────────────────────────────────

def _eliminate_unit_pivots(rows: list[dict[int, int]]) -> tuple[int, list[dict[int, int]]]:
    """
    Pivots on entries equal to ±1 until none are left. Each pivot contributes
    an elementary divisor 1 and removes one row and one column. Returns the
    number of pivots and the surviving nonzero rows.
    """
    active = {index: row for index, row in enumerate(rows) if row}
    by_column: dict[int, set[int]] = {}
    for index, row in active.items():
        for col in row:
            by_column.setdefault(col, set()).add(index)

    pivots = 0
    changed = True
    while changed:
        changed = False
        for index in sorted(active):
            if index not in active:
                continue
            row = active[index]
            units = [col for col, value in row.items() if abs(value) == 1]
            if not units:
                continue
            col = min(units, key=lambda c: (len(by_column[c]), c))
            sign = row[col]
            for other in sorted(by_column[col] - {index}):
                target = active[other]
                factor = target[col] * sign
                for c, value in row.items():
                    updated = target.get(c, 0) - factor * value
                    if updated:
                        if c not in target:
                            by_column.setdefault(c, set()).add(other)
                        target[c] = updated
                    elif c in target:
                        del target[c]
                        by_column[c].discard(other)
                if not target:
                    del active[other]
            for c in row:
                by_column[c].discard(index)
            del by_column[col]
            del active[index]
            pivots += 1
            changed = True

    return pivots, list(active.values())


def elementary_divisors(matrix: IntegerMatrix) -> list[int]:
    ''' Nonzero diagonal of the Smith normal form, ascending; sparse unit elimination first, dense SNF on the rest '''
    rows = [{col: value for col, value in enumerate(row) if value} for row in matrix.entries]
    pivots, remaining = _eliminate_unit_pivots(rows)

    # Row lattice only matters, duplicates and negations carry no information
    unique: dict[tuple, dict[int, int]] = {}
    for row in remaining:
        key = tuple(sorted(row.items()))
        negated = tuple(sorted((c, -v) for c, v in row.items()))
        if key not in unique and negated not in unique:
            unique[key] = row

    columns = sorted({col for row in unique.values() for col in row})
    logging.debug(f"Unit elimination removed {pivots} pivots, {len(unique)}x{len(columns)} block left")
    divisors = [1] * pivots
    if unique and columns:
        position = {col: k for k, col in enumerate(columns)}
        dense = [[0] * len(columns) for _ in unique]
        for r, row in enumerate(unique.values()):
            for col, value in row.items():
                dense[r][position[col]] = value
        D, _, _ = smith_normal_form(IntegerMatrix.from_rows(dense, cols=len(columns)))
        divisors.extend(value for value in D.diagonal() if value)
    return sorted(divisors)


# ─────────────────────────────────────────────────────────────
# ABELIANIZATION
# ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class AbelianInvariants:
    torsion: tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError(f"Negative free rank {self.free_rank}")
        for index, value in enumerate(self.torsion):
            if value < 2:
                raise ValueError(f"Torsion coefficients must be at least 2, got {value}")
            if index and value % self.torsion[index - 1]:
                raise ValueError(f"Torsion chain {self.torsion} is not a divisibility chain")

    def __str__(self) -> str:
        parts = [f"Z_{value}" for value in self.torsion]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) or "0"


def exponent_sum_matrix(presentation: Presentation) -> IntegerMatrix:
    ''' Relator-by-generator matrix of exponent sums '''
    return IntegerMatrix.from_rows(
        [exponent_sums(word, presentation.rank) for word in presentation.relators],
        cols=presentation.rank,
    )


def invariants_from_divisors(divisors: list[int], cols: int) -> AbelianInvariants:
    return AbelianInvariants(
        torsion=tuple(value for value in divisors if value > 1),
        free_rank=cols - len(divisors),
    )


def abelian_invariants(presentation: Presentation) -> AbelianInvariants:
    matrix = exponent_sum_matrix(presentation)
    invariants = invariants_from_divisors(elementary_divisors(matrix), matrix.cols)
    logging.info(f"Abelianized {presentation.rank} generators, {matrix.rows} relators: {invariants}")
    return invariants
