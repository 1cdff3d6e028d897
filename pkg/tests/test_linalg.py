from fractions import Fraction

import pytest
import sympy

import exceptions
import linalg
from scalars import I, ONE, R2, Scalar


def matrix(rows):
    return linalg.scalar_matrix(rows)


def test_determinant_over_the_field():
    assert linalg.determinant(matrix([[1, I], [R2, 2]])) == Scalar(2, 0, 0, -1)
    assert linalg.determinant(linalg.identity(3)) == 1
    assert linalg.determinant(linalg.zeros(0, 0)) == ONE
    assert linalg.determinant(matrix([[1, 2], [2, 4]])) == 0
    with pytest.raises(exceptions.FormError):
        linalg.determinant(linalg.zeros(2, 3))


def test_permanent():
    assert linalg.permanent([[Scalar(1), Scalar(2)], [Scalar(3), Scalar(4)]]) == 10
    assert linalg.permanent([[I, ONE], [ONE, I]]) == 0
    assert linalg.permanent([[R2]]) == R2
    assert linalg.permanent([]) == ONE


def test_rank():
    assert linalg.rank(matrix([[1, I], [I, -1]])) == 1
    assert linalg.rank(linalg.identity(3)) == 3
    assert linalg.rank(linalg.zeros(2, 2)) == 0
    assert linalg.rank(linalg.zeros(0, 0)) == 0


def test_solve_overdetermined_consistent_system():
    a = matrix([[1, 0], [0, R2], [1, 1]])
    assert linalg.solve(a, [ONE, Scalar(2), ONE + R2]) == [ONE, R2]
    assert linalg.solve(matrix([[I]]), [ONE]) == [-I]


def test_solve_rejects_bad_systems():
    with pytest.raises(exceptions.EmbeddingError, match='inconsistent'):
        linalg.solve(matrix([[1], [1]]), [ONE, Scalar(2)])
    with pytest.raises(exceptions.EmbeddingError, match='underdetermined'):
        linalg.solve(matrix([[1, 1]]), [ONE])


def test_sympy_conversion():
    value = Scalar(Fraction(1, 2), -3, Fraction(2, 3), 5)
    assert linalg.from_sympy(linalg.to_sympy(value)) == value
    assert linalg.from_sympy((1 + sympy.sqrt(2)) ** 2) == Scalar(3, 0, 2)
    assert linalg.from_field(linalg.to_field(value)) == value
    with pytest.raises(exceptions.AlgebraError):
        linalg.from_sympy(sympy.sqrt(3))
    with pytest.raises(exceptions.AlgebraError):
        linalg.from_sympy(sympy.pi)
