from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING

import numpy as np

import exceptions
import linalg
from algebra_types import Bracket, Variant
from scalars import Scalar, ONE
from symmetric import SymElem, Exps, full_monomial, sym_basis, sym_insert_graded
from utils import accumulate, sub_multisets

if TYPE_CHECKING:
    from forms import SuperSpace


@lru_cache(maxsize=65536)
def monomial_product(space: SuperSpace, p: Exps, q: Exps) -> tuple[tuple[Exps, Scalar], ...]:
    return tuple(full_monomial(space, p, {q: ONE}, Variant.PLAIN).items())


def wl_mul(x: SymElem, y: SymElem) -> SymElem:
    """ The Weyl product: x y = i_x(y), the plain generalized insertion. """
    if x.space is not y.space:
        raise exceptions.SpaceMismatch(f'{x.space} and {y.space} are different spaces')
    out: dict = {}
    for p, c in x.terms.items():
        for q, d in y.terms.items():
            cd = c * d
            for mono, val in monomial_product(x.space, p, q):
                accumulate(out, mono, cd * val)
    return SymElem._new(x.space, out)


def wl_bracket(x: SymElem, y: SymElem, variant: Bracket = Bracket.LIE) -> SymElem:
    if variant is Bracket.LIE:
        return wl_mul(x, y) - wl_mul(y, x)
    out = SymElem.zero(x.space)
    for p, xp in x.parity_parts().items():
        for q, yq in y.parity_parts().items():
            if xp.is_zero() or yq.is_zero():
                continue
            swapped = wl_mul(yq, xp)
            out = out + wl_mul(xp, yq) - (-swapped if p * q else swapped)
    return out


def wl_ad(xi: SymElem, eta: SymElem) -> SymElem:
    """ ad(xi)(eta) = 2 i^(1)_xi eta for xi of order 2. """
    if xi.orders() - {2}:
        raise exceptions.OrderError('ad needs an order 2 element')
    if xi.is_zero():
        return SymElem.zero(eta.space)
    return sym_insert_graded(xi, 1, eta) * 2


def sp_project(xi: SymElem) -> np.ndarray:
    space = xi.space
    T = linalg.zeros(space.n1, space.n1)
    for j in range(space.n1):
        for exps, val in wl_ad(xi, sym_basis(space, j)).terms.items():
            if sum(exps) != 1:
                raise exceptions.EmbeddingError('ad does not preserve V')
            T[exps.index(1), j] = val
    return T


def is_sp_member(space: SuperSpace, T: np.ndarray) -> bool:
    """ w(T eta, phi) + w(eta, T phi) = 0 on all basis pairs. """
    if T.shape != (space.n1, space.n1):
        return False
    if not space.n1:
        return True
    total = T.T @ space.W + space.W @ T
    return all(not v for v in total.flat)


def sp_embed(space: SuperSpace, T) -> SymElem:
    """ The unique order 2 xi with [xi, eta] = T(eta) for every vector eta. """
    T = linalg.scalar_matrix([list(row) for row in T], (space.n1, space.n1))
    if not space.nondegenerate:
        raise exceptions.EmbeddingError('sp(V) embedding needs a non-degenerate form')
    if not is_sp_member(space, T):
        raise exceptions.EmbeddingError('Matrix is not in sp(V)')
    basis = [SymElem._new(space, {exps: ONE}) for exps, _ in sub_multisets((2,) * space.n1, 2)]
    if not basis:
        return SymElem.zero(space)
    system = linalg.zeros(space.n1 * space.n1, len(basis))
    for col, xi in enumerate(basis):
        system[:, col] = sp_project(xi).reshape(-1)
    coeffs = linalg.solve(system, list(T.reshape(-1)))
    out = SymElem.zero(space)
    for c, xi in zip(coeffs, basis):
        out = out + xi * c
    return out
