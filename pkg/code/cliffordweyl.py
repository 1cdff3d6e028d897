from __future__ import annotations

import logging
from itertools import combinations
from typing import TYPE_CHECKING, Iterator

import numpy as np

import exceptions
import linalg
from clifford import word_product
from elements import Element
from exterior import ExtElem, Word, word_inner
from scalars import Scalar, ZERO, ONE
from symmetric import SymElem, Exps, monomial_inner, unit_exps
from utils import accumulate, sub_multisets
from weyl import monomial_product

if TYPE_CHECKING:
    from forms import SuperSpace

logger = logging.getLogger(__name__)

Key = tuple[Word, Exps]


class ClwElem(Element):
    """An element of CL(V0) (x) WL(V1), keyed by (exterior word, exponent vector).

    Two parities live on each term: the internal one (exterior order + symmetric order) fixes
    the multiplication signs, the physical one (symmetric order) fixes brackets, inner product and star.
    """

    @staticmethod
    def order_of_key(key: Key) -> int:
        return len(key[0]) + sum(key[1])

    def scalar_key(self) -> Key:
        return ((), (0,) * self.space.n1)

    def physical_parts(self) -> dict[int, ClwElem]:
        return self.parity_parts(physical_parity)

    def is_pure_ext(self) -> bool:
        return all(not any(p) for _, p in self.terms)

    def is_pure_sym(self) -> bool:
        return all(not w for w, _ in self.terms)

    def ext_part(self) -> ExtElem:
        """ The CL(V0) element of a pure exterior ClwElem. """
        if not self.is_pure_ext():
            raise exceptions.EvaluationError('Element has a symmetric part')
        return ExtElem._new(self.space, {w: c for (w, _), c in self.terms.items()})

    def sym_part(self) -> SymElem:
        if not self.is_pure_sym():
            raise exceptions.EvaluationError('Element has an exterior part')
        return SymElem._new(self.space, {p: c for (_, p), c in self.terms.items()})


def physical_parity(key: Key) -> int:
    return sum(key[1]) % 2


def tensor_sign(left: Key, right: Key) -> int:
    """ (-1)^(e(xi) e(y)) for (x (x) xi)(y (x) eta): xi passes the exterior letters of y. """
    return -1 if sum(left[1]) % 2 and len(right[0]) % 2 else 1


def clw_scalar(space: SuperSpace, value=1) -> ClwElem:
    return ClwElem(space, {((), (0,) * space.n1): value})


def from_ext(x: ExtElem) -> ClwElem:
    zero = (0,) * x.space.n1
    return ClwElem._new(x.space, {(w, zero): c for w, c in x.terms.items()})


def from_sym(xi: SymElem) -> ClwElem:
    return ClwElem._new(xi.space, {((), p): c for p, c in xi.terms.items()})


def clw_basis(space: SuperSpace, index: int) -> ClwElem:
    """ The global basis vector b_index of V = V0 + V1 as an order 1 element. """
    if index < space.n0:
        return ClwElem._new(space, {((index,), (0,) * space.n1): ONE})
    return ClwElem._new(space, {((), unit_exps(space, index - space.n0)): ONE})


def basis_key(space: SuperSpace, index: int) -> Key:
    return next(iter(clw_basis(space, index).terms))


def _same_space(x: Element, y: Element) -> None:
    if x.space is not y.space:
        raise exceptions.SpaceMismatch(f'{x.space} and {y.space} are different spaces')


def clw_mul(X: ClwElem, Y: ClwElem) -> ClwElem:
    _same_space(X, Y)
    space = X.space
    out: dict = {}
    for left, c in X.terms.items():
        for right, d in Y.terms.items():
            cd = c * d if tensor_sign(left, right) > 0 else -(c * d)
            ext = word_product(space, left[0], right[0])
            if not ext:
                continue
            for mono, b in monomial_product(space, left[1], right[1]):
                for word, a in ext:
                    accumulate(out, (word, mono), cd * a * b)
    return ClwElem._new(space, out)


def clw_bracket(X: ClwElem, Y: ClwElem) -> ClwElem:
    """ The plain commutator XY - YX. """
    return clw_mul(X, Y) - clw_mul(Y, X)


def clw_super_bracket(X: ClwElem, Y: ClwElem) -> ClwElem:
    """ XY - (-1)^(e(X)e(Y)) YX with physical parities, distributed over parity parts. """
    _same_space(X, Y)
    out = ClwElem.zero(X.space)
    for p, xp in X.physical_parts().items():
        for q, yq in Y.physical_parts().items():
            if xp.is_zero() or yq.is_zero():
                continue
            swapped = clw_mul(yq, xp)
            out = out + clw_mul(xp, yq) - (-swapped if p * q else swapped)
    return out


def clw_ad(X: ClwElem, Y: ClwElem) -> ClwElem:
    return clw_super_bracket(X, Y)


def _opp_sign(k: int) -> int:
    return -1 if (k * (k - 1) // 2) % 2 else 1


def key_inner(space: SuperSpace, left: Key, right: Key) -> Scalar:
    """ (-1)^(e(xi) e(y)) <x, y>_new <xi, eta>. """
    (u, p), (w, q) = left, right
    if len(u) != len(w) or sum(p) != sum(q):
        return ZERO
    value = word_inner(space, u, w) * monomial_inner(space, p, q)
    if not value:
        return ZERO
    s = _opp_sign(len(u)) * tensor_sign(left, right)
    return value if s > 0 else -value


def clw_inner(X: ClwElem, Y: ClwElem) -> Scalar:
    _same_space(X, Y)
    total = ZERO
    for left, c in X.terms.items():
        for right, d in Y.terms.items():
            v = key_inner(X.space, left, right)
            if v:
                total = total + c * d * v
    return total


class OrderFiltration:
    """ The decomposition of an element by total order k = exterior order + symmetric order. """
    def __init__(self, element: ClwElem) -> None:
        self.element = element
        self.components: dict[int, ClwElem] = element.homogeneous_parts()

    def __getitem__(self, k: int) -> ClwElem:
        return self.components.get(k, ClwElem.zero(self.element.space))

    def __iter__(self) -> Iterator[int]:
        return iter(self.components)

    def orders(self) -> list[int]:
        return list(self.components)

    def total(self) -> ClwElem:
        out = ClwElem.zero(self.element.space)
        for part in self.components.values():
            out = out + part
        return out

    def split(self, k: int) -> dict[tuple[int, int], ClwElem]:
        """ Component k further split by (exterior order r, symmetric order s), r + s = k. """
        parts: dict[tuple[int, int], dict] = {}
        for key, val in self[k].terms.items():
            parts.setdefault((len(key[0]), sum(key[1])), {})[key] = val
        return {rs: ClwElem._new(self.element.space, t) for rs, t in sorted(parts.items())}


def order_parts(X: ClwElem) -> OrderFiltration:
    return OrderFiltration(X)


def order_project(X: ClwElem, k: int) -> ClwElem:
    return X.order_project(k)


def order_two_basis(space: SuperSpace) -> list[ClwElem]:
    """ Monomial basis of CLW^(2): Lambda^2 V0, then Sym^2 V1, then V0 (x) V1. """
    zero = (0,) * space.n1
    keys: list[Key] = [(w, zero) for w in combinations(range(space.n0), 2)]
    keys += [((), p) for p, _ in sub_multisets((2,) * space.n1, 2)]
    keys += [((a,), unit_exps(space, b)) for a in range(space.n0) for b in range(space.n1)]
    return [ClwElem._new(space, {key: ONE}) for key in keys]


def osp_project(X: ClwElem) -> np.ndarray:
    """ The matrix of ad(X) restricted to V; column j is the image of b_j. """
    space = X.space
    if X.orders() - {2}:
        raise exceptions.OrderError('osp projection needs an order 2 element')
    size = space.dimension
    index = {basis_key(space, i): i for i in range(size)}
    T = linalg.zeros(size, size)
    for j in range(size):
        for key, val in clw_super_bracket(X, clw_basis(space, j)).terms.items():
            if key not in index:
                raise exceptions.EmbeddingError('ad does not preserve V')
            T[index[key], j] = val
    return T


def form_matrix(space: SuperSpace) -> np.ndarray:
    size = space.dimension
    B = linalg.zeros(size, size)
    for i in range(size):
        for j in range(size):
            B[i, j] = space.form(i, j)
    return B


def parity_blocks(space: SuperSpace, T: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """ Split T into its parity preserving (even) and parity swapping (odd) blocks. """
    even = linalg.zeros(*T.shape)
    odd = linalg.zeros(*T.shape)
    for i in range(T.shape[0]):
        for j in range(T.shape[1]):
            target = even if space.parity_of(i) == space.parity_of(j) else odd
            target[i, j] = T[i, j]
    return even, odd


def osp_member(space: SuperSpace, T: np.ndarray) -> bool:
    """ <Tx, y> + (-1)^(e(T) e(x)) <x, Ty> = 0 for each parity block of T. """
    size = space.dimension
    if T.shape != (size, size):
        return False
    if not size:
        return True
    B = form_matrix(space)
    for parity, block in enumerate(parity_blocks(space, T)):
        left = block.T @ B
        right = B @ block
        for j in range(size):
            s = -1 if parity and space.parity_of(j) else 1
            for k in range(size):
                if left[j, k] + (right[j, k] if s > 0 else -right[j, k]):
                    return False
    return True


def osp_embed(space: SuperSpace, T) -> ClwElem:
    """ The unique X in CLW^(2) with [X, v]^s = T(v) on V. """
    size = space.dimension
    T = linalg.scalar_matrix([list(row) for row in T], (size, size))
    if not space.nondegenerate:
        raise exceptions.EmbeddingError('osp(V) embedding needs a non-degenerate form')
    if not osp_member(space, T):
        raise exceptions.EmbeddingError('Matrix is not in osp(V)')
    basis = order_two_basis(space)
    if not basis:
        return ClwElem.zero(space)
    system = linalg.zeros(size * size, len(basis))
    for col, X in enumerate(basis):
        system[:, col] = osp_project(X).reshape(-1)
    coeffs = linalg.solve(system, list(T.reshape(-1)))
    logger.debug('osp embedding solved over %d basis elements', len(basis))
    out: dict = {}
    for c, X in zip(coeffs, basis):
        for key, val in X.terms.items():
            accumulate(out, key, c * val)
    return ClwElem._new(space, out)
