from __future__ import annotations

import logging
from functools import lru_cache
from itertools import combinations
from typing import TYPE_CHECKING

import numpy as np

import exceptions
import linalg
from algebra_types import Bracket, Variant
from exterior import ExtElem, ext_basis, ext_inner, ext_insert_graded, full_word, opp, Word
from scalars import Scalar, ONE
from utils import accumulate

if TYPE_CHECKING:
    from forms import SuperSpace

logger = logging.getLogger(__name__)


@lru_cache(maxsize=65536)
def word_product(space: SuperSpace, u: Word, w: Word) -> tuple[tuple[Word, Scalar], ...]:
    """Clifford product of two basis words.

    Odd u multiplies through the plain generalized insertion, even u through the alternating one.
    """
    variant = Variant.PLAIN if len(u) % 2 else Variant.ALT
    return tuple(full_word(space, u, {w: ONE}, variant).items())


def cl_mul(x: ExtElem, y: ExtElem) -> ExtElem:
    if x.space is not y.space:
        raise exceptions.SpaceMismatch(f'{x.space} and {y.space} are different spaces')
    out: dict = {}
    for u, c in x.terms.items():
        for w, d in y.terms.items():
            cd = c * d
            for word, val in word_product(x.space, u, w):
                accumulate(out, word, cd * val)
    return ExtElem._new(x.space, out)


def cl_bracket(x: ExtElem, y: ExtElem, variant: Bracket = Bracket.LIE) -> ExtElem:
    if variant is Bracket.LIE:
        return cl_mul(x, y) - cl_mul(y, x)
    out = ExtElem.zero(x.space)
    for p, xp in x.parity_parts().items():
        for q, yq in y.parity_parts().items():
            if xp.is_zero() or yq.is_zero():
                continue
            swapped = cl_mul(yq, xp)
            out = out + cl_mul(xp, yq) - (-swapped if p * q else swapped)
    return out


def cl_inner_new(x: ExtElem, y: ExtElem) -> Scalar:
    return ext_inner(opp(x), y)


def cl_ad(y: ExtElem, x: ExtElem) -> ExtElem:
    """ ad(y)(x) = -2 i^(1)_y x for y of order 2. """
    if y.orders() - {2}:
        raise exceptions.OrderError('ad needs an order 2 element')
    if y.is_zero():
        return ExtElem.zero(x.space)
    return ext_insert_graded(y, 1, x) * -2


def _vector_matrix(space: SuperSpace, images: list[ExtElem]) -> np.ndarray:
    T = linalg.zeros(space.n0, space.n0)
    for j, image in enumerate(images):
        for word, val in image.terms.items():
            if len(word) != 1:
                raise exceptions.EmbeddingError('ad does not preserve V')
            T[word[0], j] = val
    return T


def o_project(y: ExtElem) -> np.ndarray:
    space = y.space
    return _vector_matrix(space, [cl_ad(y, ext_basis(space, j)) for j in range(space.n0)])


def is_o_member(space: SuperSpace, T: np.ndarray) -> bool:
    """ <Tv, w> + <v, Tw> = 0 on all basis pairs. """
    if T.shape != (space.n0, space.n0):
        return False
    total = T.T @ space.G + space.G @ T if space.n0 else T
    return all(not v for v in total.flat)


def o_embed(space: SuperSpace, T) -> ExtElem:
    """ The unique y in the order 2 part with [y, v] = T(v) for every vector v. """
    T = linalg.scalar_matrix([list(row) for row in T], (space.n0, space.n0))
    if not space.nondegenerate:
        raise exceptions.EmbeddingError('o(V) embedding needs a non-degenerate form')
    if not is_o_member(space, T):
        raise exceptions.EmbeddingError('Matrix is not antisymmetric for the form')
    basis = [ext_basis(space, a, b) for a, b in combinations(range(space.n0), 2)]
    if not basis:
        return ExtElem.zero(space)
    columns = [o_project(y) for y in basis]
    system = linalg.zeros(space.n0 * space.n0, len(basis))
    for col, M in enumerate(columns):
        system[:, col] = M.reshape(-1)
    coeffs = linalg.solve(system, list(T.reshape(-1)))
    out = ExtElem.zero(space)
    for c, y in zip(coeffs, basis):
        out = out + y * c
    return out
