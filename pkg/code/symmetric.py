from __future__ import annotations

from functools import lru_cache
from typing import TYPE_CHECKING, Sequence

import exceptions
from algebra_types import Variant
from elements import Element
from linalg import permanent
from scalars import Scalar, ZERO, ONE
from utils import accumulate, expand_exponents, sub_multisets

if TYPE_CHECKING:
    from forms import SuperSpace

Exps = tuple[int, ...]


class SymElem(Element):
    """ A symmetric multivector over V1, keyed by exponent vectors of length n1. """

    @staticmethod
    def order_of_key(key: Exps) -> int:
        return sum(key)

    def scalar_key(self) -> Exps:
        return (0,) * self.space.n1


def unit_exps(space: SuperSpace, index: int) -> Exps:
    return tuple(1 if k == index else 0 for k in range(space.n1))


def add_exps(p: Exps, q: Exps) -> Exps:
    return tuple(a + b for a, b in zip(p, q))


def sub_exps(p: Exps, q: Exps) -> Exps:
    return tuple(a - b for a, b in zip(p, q))


def sym_scalar(space: SuperSpace, value=1) -> SymElem:
    return SymElem(space, {(0,) * space.n1: value})


def sym_basis(space: SuperSpace, index: int) -> SymElem:
    if not 0 <= index < space.n1:
        raise IndexError(f'V1 index {index} out of range for {space}')
    return SymElem._new(space, {unit_exps(space, index): ONE})


def sym_monomial(space: SuperSpace, exps: Sequence[int], coeff=1) -> SymElem:
    if len(exps) != space.n1 or any(e < 0 for e in exps):
        raise ValueError(f'Bad exponent vector {tuple(exps)} for {space}')
    return SymElem(space, {tuple(exps): coeff})


def sym_vector(space: SuperSpace, coeffs: Sequence) -> SymElem:
    return SymElem(space, {unit_exps(space, k): c for k, c in enumerate(coeffs)})


def _same_space(x: Element, y: Element) -> None:
    if x.space is not y.space:
        raise exceptions.SpaceMismatch(f'{x.space} and {y.space} are different spaces')


def vee(x: SymElem, y: SymElem) -> SymElem:
    _same_space(x, y)
    out: dict = {}
    for p, c in x.terms.items():
        for q, d in y.terms.items():
            accumulate(out, add_exps(p, q), c * d)
    return SymElem._new(x.space, out)


def sym_parity(x: SymElem) -> SymElem:
    return x.map_terms(lambda p, c: (p, -c if sum(p) % 2 else c))


def _omega_block(space: SuperSpace, rows: Sequence[int], cols: Sequence[int]) -> list[list[Scalar]]:
    return [[space.w(a, b) for b in cols] for a in rows]


@lru_cache(maxsize=4096)
def monomial_inner(space: SuperSpace, p: Exps, q: Exps) -> Scalar:
    """ Sum over sigma of prod w(xi_i, eta_sigma(i)) on the expanded letters. """
    if sum(p) != sum(q):
        return ZERO
    return permanent(_omega_block(space, expand_exponents(p), expand_exponents(q)))


def sym_inner(x: SymElem, y: SymElem) -> Scalar:
    _same_space(x, y)
    total = ZERO
    for p, c in x.terms.items():
        for q, d in y.terms.items():
            if sum(p) == sum(q):
                total = total + c * d * monomial_inner(x.space, p, q)
    return total


def insert_letter(space: SuperSpace, a: int, terms: dict) -> dict:
    """ i_{xi_a}: each occurrence of xi_b contributes w(xi_a, xi_b), so xi_b**k gives a factor k. """
    out: dict = {}
    for q, d in terms.items():
        for b, e in enumerate(q):
            if not e:
                continue
            w = space.w(a, b)
            if w:
                lowered = q[:b] + (e - 1,) + q[b + 1:]
                accumulate(out, lowered, d * w * e)
    return out


def insert_monomial(space: SuperSpace, p: Exps, terms: dict) -> dict:
    for a in expand_exponents(p):
        if not terms:
            break
        terms = insert_letter(space, a, terms)
    return terms


def _scaled_into(out: dict, terms: dict, factor: Scalar) -> None:
    for key, val in terms.items():
        accumulate(out, key, val * factor)


def sym_insert_vec(eta: SymElem, x: SymElem) -> SymElem:
    _same_space(eta, x)
    if eta.orders() - {1}:
        raise exceptions.OrderError('Insertion vector must have order 1')
    out: dict = {}
    for p, c in eta.terms.items():
        _scaled_into(out, insert_letter(eta.space, p.index(1), x.terms), c)
    return SymElem._new(eta.space, out)


def sym_insert_multi(eta: SymElem, x: SymElem) -> SymElem:
    _same_space(eta, x)
    out: dict = {}
    for p, c in eta.terms.items():
        _scaled_into(out, insert_monomial(eta.space, p, x.terms), c)
    return SymElem._new(eta.space, out)


def graded_monomial(space: SuperSpace, p: Exps, l: int, terms: dict) -> dict:
    """Pair l letters of the monomial p with l letters of each monomial in `terms`.

    Every choice of letter positions on both sides and every bijection between them
    contributes the product of w over the pairs times the remaining letters.
    """
    out: dict = {}
    for q, d in terms.items():
        if sum(q) < l:
            continue
        for s, count_s in sub_multisets(p, l):
            rest_p = sub_exps(p, s)
            rows = expand_exponents(s)
            for t, count_t in sub_multisets(q, l):
                pairing = permanent(_omega_block(space, rows, expand_exponents(t)))
                if pairing:
                    accumulate(out, add_exps(rest_p, sub_exps(q, t)), d * pairing * (count_s * count_t))
    return out


def graded_monomial_shuffle(space: SuperSpace, p: Exps, l: int, terms: dict) -> dict:
    """ The same operator as sum over shuffles of i_{chosen}(y) v (rest). """
    out: dict = {}
    for s, count in sub_multisets(p, l):
        rest = sub_exps(p, s)
        for q, d in insert_monomial(space, s, terms).items():
            accumulate(out, add_exps(q, rest), d * count)
    return out


def _graded(eta: SymElem, l: int, x: SymElem, kernel) -> SymElem:
    _same_space(eta, x)
    k = eta.order()
    if not 0 <= l <= k:
        raise exceptions.OrderError(f'Slot count {l} outside 0..{k}')
    out: dict = {}
    for p, c in eta.terms.items():
        _scaled_into(out, kernel(eta.space, p, l, x.terms), c)
    return SymElem._new(eta.space, out)


def sym_insert_graded(eta: SymElem, l: int, x: SymElem) -> SymElem:
    return _graded(eta, l, x, graded_monomial)


def sym_insert_graded_shuffle(eta: SymElem, l: int, x: SymElem) -> SymElem:
    return _graded(eta, l, x, graded_monomial_shuffle)


def full_monomial(space: SuperSpace, p: Exps, terms: dict, variant: Variant) -> dict:
    out: dict = {}
    for l in range(sum(p) + 1):
        factor = ONE if variant is Variant.PLAIN or l % 2 == 0 else -ONE
        _scaled_into(out, graded_monomial(space, p, l, terms), factor)
    return out


def sym_insert_full(eta: SymElem, x: SymElem, variant: Variant = Variant.PLAIN) -> SymElem:
    _same_space(eta, x)
    out: dict = {}
    for p, c in eta.terms.items():
        _scaled_into(out, full_monomial(eta.space, p, x.terms, variant), c)
    return SymElem._new(eta.space, out)
