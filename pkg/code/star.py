from __future__ import annotations

from typing import TYPE_CHECKING

import exceptions
from clifford import cl_inner_new
from cliffordweyl import ClwElem, clw_inner
from exterior import ExtElem
from scalars import Scalar, ONE, I
from symmetric import SymElem, sym_inner
from utils import accumulate, expand_exponents, permutation_sign

if TYPE_CHECKING:
    from forms import SuperSpace


class StarContext:
    """A space with a star structure.

    The pairing was checked against the form when the space was built, so
    <x*, y*> = conj(<x, y>) holds on basis vectors.
    """
    def __init__(self, space: SuperSpace) -> None:
        if space.star is None:
            raise exceptions.StarError(f'{space} has no star pairing')
        self.space = space
        self.pairing = space.star

    def ext_word(self, word: tuple[int, ...]) -> tuple[Scalar, tuple[int, ...]]:
        """ (b_u1 ^ ... ^ b_uk)* = b_uk* ^ ... ^ b_u1*, returned as (coefficient, sorted word). """
        factor = ONE
        images = []
        for a in reversed(word):
            target, f = self.pairing.image(a)
            factor = factor * f
            images.append(target)
        if permutation_sign(images) < 0:
            factor = -factor
        return factor, tuple(sorted(images))

    def sym_monomial(self, exps: tuple[int, ...]) -> tuple[Scalar, tuple[int, ...]]:
        """ (xi_1 v ... v xi_k)* = (-1)^(k(k-1)/2) xi_1* v ... v xi_k*. """
        n0 = self.space.n0
        factor = ONE
        out = [0] * self.space.n1
        for a in expand_exponents(exps):
            target, f = self.pairing.image(n0 + a)
            factor = factor * f
            out[target - n0] += 1
        k = sum(exps)
        if (k * (k - 1) // 2) % 2:
            factor = -factor
        return factor, tuple(out)


def _context(space: SuperSpace, context: StarContext | None) -> StarContext:
    return context if context is not None else StarContext(space)


def star_ext(x: ExtElem, context: StarContext | None = None) -> ExtElem:
    ctx = _context(x.space, context)
    out: dict = {}
    for word, c in x.terms.items():
        f, image = ctx.ext_word(word)
        accumulate(out, image, c.conj() * f)
    return ExtElem._new(x.space, out)


def star_sym(xi: SymElem, context: StarContext | None = None) -> SymElem:
    ctx = _context(xi.space, context)
    out: dict = {}
    for exps, c in xi.terms.items():
        f, image = ctx.sym_monomial(exps)
        accumulate(out, image, c.conj() * f)
    return SymElem._new(xi.space, out)


def star_clw(X: ClwElem, context: StarContext | None = None) -> ClwElem:
    """ (x (x) xi)* = (-1)^(ord(x) ord(xi)) x* (x) xi*. """
    ctx = _context(X.space, context)
    out: dict = {}
    for (word, exps), c in X.terms.items():
        f, w = ctx.ext_word(word)
        g, p = ctx.sym_monomial(exps)
        val = c.conj() * f * g
        if len(word) % 2 and sum(exps) % 2:
            val = -val
        accumulate(out, (w, p), val)
    return ClwElem._new(X.space, out)


def hermitian(X: ClwElem, Y: ClwElem, context: StarContext | None = None) -> Scalar:
    """(X|Y) = <X, Y*>, times i when both are physically odd.

    Linear in X and conjugate-linear in Y.
    """
    ctx = _context(X.space, context)
    xs = X.physical_parts()
    ys = Y.physical_parts()
    even = clw_inner(xs[0], star_clw(ys[0], ctx))
    odd = clw_inner(xs[1], star_clw(ys[1], ctx))
    return even + I * odd


def cl_hermitian(x: ExtElem, y: ExtElem, context: StarContext | None = None) -> Scalar:
    return cl_inner_new(x, star_ext(y, context))


def wl_hermitian(xi: SymElem, eta: SymElem, context: StarContext | None = None) -> Scalar:
    xs = xi.parity_parts()
    ys = eta.parity_parts()
    return sym_inner(xs[0], star_sym(ys[0], context)) + I * sym_inner(xs[1], star_sym(ys[1], context))
