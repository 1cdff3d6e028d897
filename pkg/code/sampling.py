"""
Random spaces and elements for the check suites.

Everything is drawn from a caller supplied random.Random so a seed reproduces a run.
"""
from __future__ import annotations

import logging
import random
from fractions import Fraction
from itertools import combinations
from typing import Optional

import exceptions
import linalg
from cliffordweyl import ClwElem
from exterior import ExtElem
from forms import SuperSpace
from scalars import Scalar
from symmetric import SymElem

logger = logging.getLogger(__name__)

SMALL = (-2, -1, 0, 1, 2)


def random_scalar(rng: random.Random, nonzero: bool = False) -> Scalar:
    """ A small Gaussian rational (a + b*i) / d. """
    while True:
        d = rng.choice((1, 1, 2, 3))
        value = Scalar(Fraction(rng.choice(SMALL), d), Fraction(rng.choice(SMALL), d))
        if value or not nonzero:
            return value


def random_space(rng: random.Random, max_n0: int, max_n1: int, tries: int = 50) -> SuperSpace:
    """ A non-degenerate space with small integer Gram and symplectic matrices; n1 is even. """
    n0 = rng.randint(0, max_n0)
    n1 = 2 * rng.randint(0, max_n1 // 2)
    for _ in range(tries):
        G = linalg.zeros(n0, n0)
        for i in range(n0):
            G[i, i] = Scalar(rng.choice((-1, 1, 1, 2)))
            for j in range(i + 1, n0):
                G[i, j] = G[j, i] = Scalar(rng.choice(SMALL))
        W = linalg.zeros(n1, n1)
        for i, j in combinations(range(n1), 2):
            W[i, j] = Scalar(rng.choice(SMALL))
            W[j, i] = -W[i, j]
        try:
            return SuperSpace(n0, n1, G, W)
        except exceptions.FormError:
            continue
    raise exceptions.FormError(f'No non-degenerate ({n0}|{n1}) form after {tries} tries')


def random_ext(rng: random.Random, space: SuperSpace, max_order: int, terms: int = 3) -> ExtElem:
    out: dict = {}
    for _ in range(terms):
        k = rng.randint(0, min(max_order, space.n0))
        out[tuple(sorted(rng.sample(range(space.n0), k)))] = random_scalar(rng)
    return ExtElem(space, out)


def random_exps(rng: random.Random, n1: int, order: int) -> tuple[int, ...]:
    exps = [0] * n1
    for _ in range(order):
        exps[rng.randrange(n1)] += 1
    return tuple(exps)


def random_sym(rng: random.Random, space: SuperSpace, max_order: int, terms: int = 3) -> SymElem:
    out: dict = {}
    for _ in range(terms):
        k = rng.randint(0, max_order) if space.n1 else 0
        out[random_exps(rng, space.n1, k)] = random_scalar(rng)
    return SymElem(space, out)


def random_clw(rng: random.Random, space: SuperSpace, max_order: int, terms: int = 3,
               parity: Optional[int] = None) -> ClwElem:
    """A random element of total order at most `max_order`.

    With `parity` set, every term has that physical parity (symmetric order mod 2).
    """
    out: dict = {}
    for _ in range(terms):
        total = rng.randint(0, max_order)
        r = rng.randint(0, min(total, space.n0))
        s = total - r if space.n1 else 0
        if parity is not None and s % 2 != parity:
            if not space.n1:
                continue
            s += 1
        word = tuple(sorted(rng.sample(range(space.n0), r)))
        out[(word, random_exps(rng, space.n1, s))] = random_scalar(rng)
    return ClwElem(space, out)
