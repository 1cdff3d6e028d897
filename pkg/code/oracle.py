"""
A second, deliberately naive product on CL(V0) (x) WL(V1).

Elements are expanded into free words over the global basis, concatenated and normal ordered
using only the defining relations

    g h = -h g + 2 G(g, h)    (g, h in V0)
    g h =  h g + 2 W(g, h)    (g, h in V1)
    g h = -h g                (one letter in each part)

It shares nothing with the insertion formulas beyond scalars and forms, so it serves as the
reference for differential tests.
"""
from __future__ import annotations

import logging
import random
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import TYPE_CHECKING, Optional

import exceptions
from cliffordweyl import ClwElem, Key, from_ext, from_sym
from elements import Element
from exterior import ExtElem
from scalars import Scalar, ONE
from symmetric import SymElem
from utils import accumulate, expand_exponents, permutation_sign

if TYPE_CHECKING:
    from forms import SuperSpace

logger = logging.getLogger(__name__)

FreeWord = tuple[int, ...]


class WordElem(Element):
    """ A linear combination of free words; letters are global basis indices in any order. """

    @staticmethod
    def order_of_key(key: FreeWord) -> int:
        return len(key)

    def scalar_key(self) -> FreeWord:
        return ()

    def __mul__(self, factor):
        if isinstance(factor, WordElem):
            self.check_space(factor)
            out: dict = {}
            for u, c in self.terms.items():
                for w, d in factor.terms.items():
                    accumulate(out, u + w, c * d)
            return WordElem._new(self.space, out)
        return super().__mul__(factor)

    def __str__(self) -> str:
        if not self.terms:
            return '0'
        parts = []
        for word, c in self.terms.items():
            letters = ' '.join(self.space.label(a) for a in word) or '1'
            parts.append(f'({c}) {letters}')
        return ' + '.join(parts)


def word(space: SuperSpace, *letters: int) -> WordElem:
    return WordElem._new(space, {tuple(letters): ONE})


class RewriteOracle:
    """Normal ordering over one space.

    A word is normal when its V0 letters come first in strictly increasing order, followed by
    its V1 letters in non-decreasing order. Normal forms of single words are cached.
    """
    def __init__(self, space: SuperSpace) -> None:
        self.space = space
        self._normal: dict[FreeWord, dict[FreeWord, Scalar]] = {}
        self._residual: dict[Key, dict[FreeWord, Scalar]] = {}
        self.steps = 0

    def _violations(self, w: FreeWord) -> list[int]:
        n0 = self.space.n0
        return [i for i in range(len(w) - 1) if w[i] > w[i + 1] or (w[i] == w[i + 1] and w[i] < n0)]

    def _rewrite_at(self, w: FreeWord, i: int) -> list[tuple[FreeWord, Scalar]]:
        """ One application of a defining relation at positions i, i + 1. """
        space = self.space
        g, h = w[i], w[i + 1]
        swapped = w[:i] + (h, g) + w[i + 2:]
        removed = w[:i] + w[i + 2:]
        g_odd, h_odd = space.parity_of(g), space.parity_of(h)
        if g == h:
            return [(removed, space.form(g, g))]
        if not g_odd and not h_odd:
            return [(swapped, -ONE), (removed, space.form(g, h) * 2)]
        if g_odd and h_odd:
            return [(swapped, ONE), (removed, space.form(g, h) * 2)]
        return [(swapped, -ONE)]

    def normalize_word(self, w: FreeWord, rng: Optional[random.Random] = None) -> dict[FreeWord, Scalar]:
        if rng is None and w in self._normal:
            return self._normal[w]
        spots = self._violations(w)
        if not spots:
            result = {w: ONE}
        else:
            self.steps += 1
            i = rng.choice(spots) if rng is not None else spots[0]
            result = {}
            for target, factor in self._rewrite_at(w, i):
                if not factor:
                    continue
                for normal, c in self.normalize_word(target, rng).items():
                    accumulate(result, normal, c * factor)
        if rng is None:
            self._normal[w] = result
        return result

    def normalize(self, w: WordElem, rng: Optional[random.Random] = None) -> WordElem:
        out: dict = {}
        for letters, c in w.terms.items():
            for normal, d in self.normalize_word(letters, rng).items():
                accumulate(out, normal, c * d)
        return WordElem._new(self.space, out)

    def symmetrize_key(self, key: Key) -> dict[FreeWord, Scalar]:
        """ x (x) xi as the average of signed exterior orderings times the average of symmetric orderings. """
        n0 = self.space.n0
        ext_letters, sym_letters = key[0], [n0 + a for a in expand_exponents(key[1])]
        weight = Scalar(1) / (factorial(len(ext_letters)) * factorial(len(sym_letters)))
        out: dict = {}
        for u in permutations(ext_letters):
            s = permutation_sign(u)
            for p in permutations(sym_letters):
                accumulate(out, u + p, weight if s > 0 else -weight)
        return out

    def symmetrize(self, X: ClwElem) -> WordElem:
        out: dict = {}
        for key, c in X.terms.items():
            for w, d in self.symmetrize_key(key).items():
                accumulate(out, w, c * d)
        return WordElem._new(self.space, out)

    def _split(self, w: FreeWord) -> Key:
        n0 = self.space.n0
        exps = [0] * self.space.n1
        for a in w:
            if a >= n0:
                exps[a - n0] += 1
        return tuple(a for a in w if a < n0), tuple(exps)

    def residual(self, key: Key) -> dict[FreeWord, Scalar]:
        """ normal(symmetrize(key)) minus the normal word of key: only shorter words remain. """
        if key not in self._residual:
            table = dict(self.normalize(WordElem._new(self.space, self.symmetrize_key(key))).terms)
            lead = key[0] + tuple(self.space.n0 + a for a in expand_exponents(key[1]))
            accumulate(table, lead, -ONE)
            self._residual[key] = table
        return self._residual[key]

    def words_to_clw(self, w: WordElem) -> ClwElem:
        """ Rewrite normal words in the canonical basis, longest words first. """
        pending = dict(w.terms)
        out: dict = {}
        while pending:
            letters = max(pending, key=len)
            c = pending.pop(letters)
            if self._violations(letters):
                raise exceptions.AlgebraError(f'Word {letters} is not in normal order')
            key = self._split(letters)
            accumulate(out, key, c)
            for shorter, d in self.residual(key).items():
                accumulate(pending, shorter, -c * d)
        return ClwElem._new(self.space, out)

    def rewrite_normalize(self, w: WordElem, rng: Optional[random.Random] = None) -> ClwElem:
        before = self.steps
        result = self.words_to_clw(self.normalize(w, rng))
        logger.debug('normalized %d words in %d rewrite steps', len(w), self.steps - before)
        return result

    def mul(self, X: ClwElem, Y: ClwElem) -> ClwElem:
        if X.space is not self.space or Y.space is not self.space:
            raise exceptions.SpaceMismatch(f'Oracle for {self.space} got {X.space} and {Y.space}')
        return self.rewrite_normalize(self.symmetrize(X) * self.symmetrize(Y))


@lru_cache(maxsize=8)
def oracle_for(space: SuperSpace) -> RewriteOracle:
    """ The rewrite tables of the most recently used spaces stay warm; older ones are dropped. """
    return RewriteOracle(space)


def rewrite_normalize(w: WordElem, rng: Optional[random.Random] = None) -> ClwElem:
    return oracle_for(w.space).rewrite_normalize(w, rng)


def symmetrize(X: ClwElem) -> WordElem:
    return oracle_for(X.space).symmetrize(X)


def words_to_clw(w: WordElem) -> ClwElem:
    oracle = oracle_for(w.space)
    return oracle.words_to_clw(oracle.normalize(w))


def oracle_mul(X: ClwElem, Y: ClwElem) -> ClwElem:
    if X.space is not Y.space:
        raise exceptions.SpaceMismatch(f'{X.space} and {Y.space} are different spaces')
    return oracle_for(X.space).mul(X, Y)


def oracle_cl_mul(x: ExtElem, y: ExtElem) -> ExtElem:
    return oracle_mul(from_ext(x), from_ext(y)).ext_part()


def oracle_wl_mul(xi: SymElem, eta: SymElem) -> SymElem:
    return oracle_mul(from_sym(xi), from_sym(eta)).sym_part()
