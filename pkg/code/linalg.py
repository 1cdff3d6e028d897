"""
Matrices of Scalars.

Storage is a numpy object array of Scalars. Determinants, ranks and solutions are computed by sympy
over the number field QQ<i, sqrt 2>, converting at the Scalar boundary.
"""
from __future__ import annotations

import functools
import logging
from fractions import Fraction
from typing import Sequence

import numpy as np
import sympy
from sympy.polys.matrices import DomainMatrix

import exceptions
from scalars import Scalar, ZERO, ONE

logger = logging.getLogger(__name__)

# a + b*i + c*r2 + d*i*r2
GENERATORS = (sympy.S.One, sympy.I, sympy.sqrt(2), sympy.I * sympy.sqrt(2))


@functools.cache
def field():
    return sympy.QQ.algebraic_field(sympy.I, sympy.sqrt(2))


@functools.cache
def _field_generators() -> tuple:
    K = field()
    return tuple(K.from_sympy(g) for g in GENERATORS)


def to_sympy(value: Scalar) -> sympy.Expr:
    return sympy.Add(*(sympy.Rational(p.numerator, p.denominator) * g for p, g in zip(value.parts, GENERATORS)))


def from_sympy(expr) -> Scalar:
    """ Read an expression in i and sqrt(2) with rational coefficients back into a Scalar. """
    coeffs = dict(sympy.expand(expr).as_coefficients_dict())
    parts = [sympy.sympify(coeffs.pop(g, 0)) for g in GENERATORS]
    if any(coeffs.values()) or not all(p.is_Rational for p in parts):
        raise exceptions.AlgebraError(f'{expr} is not in Q(i, sqrt 2)')
    return Scalar(*(Fraction(int(p.p), int(p.q)) for p in parts))


def to_field(value: Scalar):
    K = field()
    out = K.zero
    for p, g in zip(value.parts, _field_generators()):
        if p:
            out += K.from_sympy(sympy.Rational(p.numerator, p.denominator)) * g
    return out


def from_field(element) -> Scalar:
    return from_sympy(field().to_sympy(element))


def domain_matrix(matrix: np.ndarray) -> DomainMatrix:
    rows, cols = matrix.shape
    return DomainMatrix([[to_field(matrix[i, j]) for j in range(cols)] for i in range(rows)], (rows, cols), field())


def scalar_matrix(rows: Sequence[Sequence], shape: tuple[int, int] | None = None) -> np.ndarray:
    """ Build a numpy object array of Scalars from nested sequences of numbers. """
    if shape is None:
        shape = (len(rows), len(rows[0]) if len(rows) else 0)
    out = np.empty(shape, dtype=object)
    if shape[0] and len(rows) != shape[0]:
        raise exceptions.FormError(f'Expected {shape[0]} rows, got {len(rows)}')
    for i in range(shape[0]):
        if len(rows[i]) != shape[1]:
            raise exceptions.FormError(f'Row {i} has {len(rows[i])} entries, expected {shape[1]}')
        for j in range(shape[1]):
            out[i, j] = Scalar.coerce(rows[i][j])
    return out


def zeros(rows: int, cols: int) -> np.ndarray:
    out = np.empty((rows, cols), dtype=object)
    out.fill(ZERO)
    return out


def identity(size: int) -> np.ndarray:
    out = zeros(size, size)
    for i in range(size):
        out[i, i] = ONE
    return out


def frozen(matrix: np.ndarray) -> np.ndarray:
    matrix = matrix.copy()
    matrix.flags.writeable = False
    return matrix


def matrices_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def determinant(matrix: np.ndarray) -> Scalar:
    size = matrix.shape[0]
    if matrix.shape != (size, size):
        raise exceptions.FormError(f'Determinant of non-square {matrix.shape} matrix')
    if not size:
        return ONE
    return from_field(domain_matrix(matrix).det())


def permanent(matrix: Sequence[Sequence[Scalar]]) -> Scalar:
    if not len(matrix):
        return ONE
    return from_sympy(sympy.Matrix([[to_sympy(v) for v in row] for row in matrix]).per())


def rank(matrix: np.ndarray) -> int:
    if matrix.size == 0:
        return 0
    return domain_matrix(matrix).rank()


def solve(a: np.ndarray, b: Sequence[Scalar]) -> list[Scalar]:
    """Solve a @ x = b exactly.

    The system may be overdetermined but must be consistent with a unique solution.
    """
    rows, cols = a.shape
    aug = np.empty((rows, cols + 1), dtype=object)
    aug[:, :cols] = a
    aug[:, cols] = list(b)
    reduced, pivots = domain_matrix(aug).rref()
    if cols in pivots:
        raise exceptions.EmbeddingError('Linear system is inconsistent')
    if len(pivots) != cols:
        raise exceptions.EmbeddingError(f'Linear system is underdetermined (rank {len(pivots)} < {cols})')
    logger.debug('solved %dx%d exact system', rows, cols)
    solution = reduced.to_Matrix()
    return [from_sympy(solution[i, cols]) for i in range(cols)]
