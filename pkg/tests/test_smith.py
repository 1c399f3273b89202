from __future__ import annotations

from itertools import combinations
from math import gcd, prod
import pytest
from scripts.groups.smith import (
    AbelianInvariants, IntegerMatrix, abelian_invariants, elementary_divisors, smith_normal_form,
)
from scripts.groups.words import letter, presentation


def _check_decomposition(matrix: IntegerMatrix):
    D, U, V = smith_normal_form(matrix)
    assert U @ matrix @ V == D
    assert abs(U.determinant()) == 1
    assert abs(V.determinant()) == 1
    assert D.is_diagonal()
    diagonal = D.diagonal()
    assert all(value >= 0 for value in diagonal)
    nonzero = [value for value in diagonal if value]
    assert diagonal[:len(nonzero)] == nonzero
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    return nonzero


def test_known_example():
    matrix = IntegerMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert _check_decomposition(matrix) == [2, 6, 12]
    assert elementary_divisors(matrix) == [2, 6, 12]


def _minor_gcd(matrix: IntegerMatrix, k: int) -> int:
    sympy_matrix = matrix.to_sympy()
    value = 0
    for rows in combinations(range(matrix.rows), k):
        for cols in combinations(range(matrix.cols), k):
            value = gcd(value, int(sympy_matrix.extract(list(rows), list(cols)).det()))
    return value


@pytest.mark.parametrize("shape", [(3, 4), (4, 3), (3, 3), (5, 2)])
def test_random_matrices_match_determinant_divisors(rng, shape):
    rows, cols = shape
    for _ in range(5):
        matrix = IntegerMatrix.from_rows([[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)])
        nonzero = _check_decomposition(matrix)
        assert elementary_divisors(matrix) == nonzero
        for k in range(1, min(shape) + 1):
            expected = prod(nonzero[:k]) if k <= len(nonzero) else 0
            assert _minor_gcd(matrix, k) == expected


def test_sparse_path_on_unit_heavy_matrix():
    matrix = IntegerMatrix.from_rows([
        [1, -1, 0, 0],
        [0, 1, -1, 0],
        [0, 0, 2, 0],
        [1, -1, 0, 0],
        [0, 0, 0, 0],
    ])
    assert elementary_divisors(matrix) == [1, 1, 2]
    assert _check_decomposition(matrix) == [1, 1, 2]


def test_empty_matrices():
    matrix = IntegerMatrix.from_rows([], cols=2)
    assert elementary_divisors(matrix) == []
    assert abelian_invariants(presentation(["x", "y"])) == AbelianInvariants((), 2)


def test_abelian_invariants_combine_coprime_torsion():
    p = presentation(["x", "y", "z"], [letter(0) ** 2, letter(1) ** 3, letter(0) * letter(1) * letter(0).inverse() * letter(1).inverse()])
    invariants = abelian_invariants(p)
    assert invariants == AbelianInvariants((6,), 1)
    assert str(invariants) == "Z_6 + Z"


def test_invariants_validation():
    with pytest.raises(ValueError):
        AbelianInvariants((4, 2), 0)
    with pytest.raises(ValueError):
        AbelianInvariants((1,), 0)
    assert str(AbelianInvariants((2,), 2)) == "Z_2 + Z^2"
    assert str(AbelianInvariants((), 0)) == "0"
