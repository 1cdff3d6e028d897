from __future__ import annotations

import logging
from functools import lru_cache
from itertools import permutations
from typing import TYPE_CHECKING, Sequence

import exceptions
import linalg
from algebra_types import Involution, Variant
from elements import Element
from scalars import Scalar, ZERO, ONE, sign
from utils import accumulate, permutation_sign, shuffles

if TYPE_CHECKING:
    from forms import SuperSpace

logger = logging.getLogger(__name__)

Word = tuple[int, ...]


class ExtElem(Element):
    """ A multivector of the exterior algebra over V0, keyed by strictly increasing index words. """

    @staticmethod
    def order_of_key(key: Word) -> int:
        return len(key)

    def scalar_key(self) -> Word:
        return ()


def ext_scalar(space: SuperSpace, value=1) -> ExtElem:
    return ExtElem(space, {(): value})


def ext_basis(space: SuperSpace, *indices: int) -> ExtElem:
    """ b_{i1} ^ b_{i2} ^ ... for V0 indices in any order. """
    for index in indices:
        if not 0 <= index < space.n0:
            raise IndexError(f'V0 index {index} out of range for {space}')
    merged = merge_words((), tuple(indices))
    if merged is None:
        return ExtElem.zero(space)
    s, word = merged
    return ExtElem._new(space, {word: ONE if s > 0 else -ONE})


def ext_vector(space: SuperSpace, coeffs: Sequence) -> ExtElem:
    return ExtElem(space, {(k,): c for k, c in enumerate(coeffs)})


def merge_words(u: Word, w: Word) -> tuple[int, Word] | None:
    """ Sign and sorted word of u ^ w, or None when an index repeats. """
    joined = u + w
    if len(set(joined)) != len(joined):
        return None
    return permutation_sign(joined), tuple(sorted(joined))


def _same_space(x: Element, y: Element) -> None:
    if x.space is not y.space:
        raise exceptions.SpaceMismatch(f'{x.space} and {y.space} are different spaces')


def wedge(x: ExtElem, y: ExtElem) -> ExtElem:
    _same_space(x, y)
    out: dict = {}
    for u, c in x.terms.items():
        for w, d in y.terms.items():
            merged = merge_words(u, w)
            if merged is None:
                continue
            s, word = merged
            accumulate(out, word, c * d if s > 0 else -(c * d))
    return ExtElem._new(x.space, out)


def ext_involution(x: ExtElem, which: Involution) -> ExtElem:
    return x.map_terms(lambda w, c: (w, c * sign(which.sign_exponent(len(w)))))


def prime(x: ExtElem) -> ExtElem:
    return ext_involution(x, Involution.PRIME)


def opp(x: ExtElem) -> ExtElem:
    return ext_involution(x, Involution.OPP)


def bar(x: ExtElem) -> ExtElem:
    return ext_involution(x, Involution.BAR)


@lru_cache(maxsize=4096)
def word_inner(space: SuperSpace, u: Word, w: Word) -> Scalar:
    """ det(<b_ui, b_wj>) for words of equal length, 0 otherwise. """
    if len(u) != len(w):
        return ZERO
    if not u:
        return ONE
    if len(u) <= 3:
        total = ZERO
        for perm in permutations(range(len(w))):
            term = ONE
            for i, j in enumerate(perm):
                term = term * space.g(u[i], w[j])
                if not term:
                    break
            if term:
                total = total + (term if permutation_sign(perm) > 0 else -term)
        return total
    block = linalg.scalar_matrix([[space.g(a, b) for b in w] for a in u])
    return linalg.determinant(block)


def ext_inner(x: ExtElem, y: ExtElem) -> Scalar:
    _same_space(x, y)
    total = ZERO
    for u, c in x.terms.items():
        for w, d in y.terms.items():
            if len(u) == len(w):
                total = total + c * d * word_inner(x.space, u, w)
    return total


def insert_basis(space: SuperSpace, a: int, terms: dict) -> dict:
    """ i_{b_a} applied to a coefficient table. """
    out: dict = {}
    for w, d in terms.items():
        for j, index in enumerate(w):
            g = space.g(a, index)
            if g:
                accumulate(out, w[:j] + w[j + 1:], d * g if j % 2 == 0 else -(d * g))
    return out


def insert_word(space: SuperSpace, u: Word, terms: dict) -> dict:
    """ i_{b_u1 ^ ... ^ b_uk} = i_{b_uk} o ... o i_{b_u1}. """
    for a in u:
        if not terms:
            break
        terms = insert_basis(space, a, terms)
    return terms


def _scaled_into(out: dict, terms: dict, factor: Scalar) -> None:
    for key, val in terms.items():
        accumulate(out, key, val * factor)


def ext_insert_vec(v: ExtElem, y: ExtElem) -> ExtElem:
    _same_space(v, y)
    if v.orders() - {1}:
        raise exceptions.OrderError('Insertion vector must have order 1')
    out: dict = {}
    for (a,), c in v.terms.items():
        _scaled_into(out, insert_basis(v.space, a, y.terms), c)
    return ExtElem._new(v.space, out)


def ext_insert_multi(x: ExtElem, y: ExtElem) -> ExtElem:
    _same_space(x, y)
    out: dict = {}
    for u, c in x.terms.items():
        _scaled_into(out, insert_word(x.space, u, y.terms), c)
    return ExtElem._new(x.space, out)


def graded_word(space: SuperSpace, u: Word, l: int, terms: dict) -> dict:
    """The l-slot insertion of the simple multivector b_u into a coefficient table.

    Sum over (l, k-l) shuffles of sign * (rest) ^ i_{(chosen)^opp}(y).
    """
    out: dict = {}
    for chosen, rest, s in shuffles(len(u), l):
        inner = insert_word(space, tuple(u[p] for p in reversed(chosen)), terms)
        rest_word = tuple(u[p] for p in rest)
        for w, d in inner.items():
            merged = merge_words(rest_word, w)
            if merged is None:
                continue
            t, word = merged
            accumulate(out, word, d if s * t > 0 else -d)
    return out


def ext_insert_graded(x: ExtElem, l: int, y: ExtElem) -> ExtElem:
    _same_space(x, y)
    k = x.order()
    if not 0 <= l <= k:
        raise exceptions.OrderError(f'Slot count {l} outside 0..{k}')
    out: dict = {}
    for u, c in x.terms.items():
        _scaled_into(out, graded_word(x.space, u, l, y.terms), c)
    return ExtElem._new(x.space, out)


def full_word(space: SuperSpace, u: Word, terms: dict, variant: Variant) -> dict:
    out: dict = {}
    for l in range(len(u) + 1):
        factor = ONE if variant is Variant.PLAIN or l % 2 == 0 else -ONE
        _scaled_into(out, graded_word(space, u, l, terms), factor)
    return out


def ext_insert_full(x: ExtElem, y: ExtElem, variant: Variant = Variant.PLAIN) -> ExtElem:
    """ Bold i_x (PLAIN) or i'_x (ALT), extended linearly over the terms of x. """
    _same_space(x, y)
    out: dict = {}
    for u, c in x.terms.items():
        _scaled_into(out, full_word(x.space, u, y.terms, variant), c)
    return ExtElem._new(x.space, out)
