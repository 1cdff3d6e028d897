from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING, Callable, Hashable, Iterator

import exceptions
from scalars import Scalar, ZERO
from utils import accumulate, add_terms

if TYPE_CHECKING:
    from forms import SuperSpace


class Element:
    """A sparse coefficient table over a SuperSpace.

    Keys are canonical basis keys of the concrete algebra; zero coefficients are never stored.
    Elements are treated as immutable values: every operation returns a new element.
    """
    def __init__(self, space: SuperSpace, terms: dict | None = None) -> None:
        self.space = space
        self.terms: dict = {}
        for key, val in (terms or {}).items():
            accumulate(self.terms, key, Scalar.coerce(val))

    @classmethod
    def _new(cls, space: SuperSpace, terms: dict):
        """ Wrap an already canonical table without re-validating it. """
        elem = cls.__new__(cls)
        elem.space = space
        elem.terms = terms
        return elem

    @staticmethod
    def order_of_key(key: Hashable) -> int:
        raise NotImplementedError()

    @classmethod
    def zero(cls, space: SuperSpace):
        return cls._new(space, {})

    def check_space(self, other: Element) -> None:
        if type(other) is not type(self):
            raise TypeError(f'Cannot combine {type(self).__name__} with {type(other).__name__}')
        if other.space is not self.space:
            raise exceptions.SpaceMismatch(f'{self.space} and {other.space} are different spaces')

    def is_zero(self) -> bool:
        return not self.terms

    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, key: Hashable) -> Scalar:
        return self.terms.get(key, ZERO)

    def map_terms(self, fn: Callable[[Hashable, Scalar], tuple[Hashable, Scalar]]):
        out: dict = {}
        for key, val in self.terms.items():
            new_key, new_val = fn(key, val)
            accumulate(out, new_key, new_val)
        return type(self)._new(self.space, out)

    def filtered(self, keep: Callable[[Hashable], bool]):
        return type(self)._new(self.space, {k: v for k, v in self.terms.items() if keep(k)})

    def orders(self) -> set[int]:
        return {self.order_of_key(k) for k in self.terms}

    def order_project(self, k: int):
        return self.filtered(lambda key: self.order_of_key(key) == k)

    def homogeneous_parts(self) -> dict[int, Element]:
        parts: dict[int, dict] = {}
        for key, val in self.terms.items():
            parts.setdefault(self.order_of_key(key), {})[key] = val
        return {k: type(self)._new(self.space, t) for k, t in sorted(parts.items())}

    def is_homogeneous(self) -> bool:
        return len(self.orders()) <= 1

    def order(self) -> int:
        """ The order of a homogeneous element. Zero counts as order 0. """
        orders = self.orders()
        if len(orders) > 1:
            raise exceptions.OrderError(f'Element has mixed orders {sorted(orders)}')
        return orders.pop() if orders else 0

    def parity_parts(self, parity_of: Callable[[Hashable], int] | None = None) -> dict[int, Element]:
        if parity_of is None:
            parity_of = lambda key: self.order_of_key(key) % 2
        even = self.filtered(lambda key: parity_of(key) == 0)
        odd = self.filtered(lambda key: parity_of(key) == 1)
        return {0: even, 1: odd}

    def __add__(self, other: Element):
        self.check_space(other)
        return type(self)._new(self.space, add_terms(self.terms, other.terms))

    def __sub__(self, other: Element):
        self.check_space(other)
        return type(self)._new(self.space, add_terms(self.terms, {k: -v for k, v in other.terms.items()}))

    def __neg__(self):
        return type(self)._new(self.space, {k: -v for k, v in self.terms.items()})

    def __mul__(self, factor):
        if not isinstance(factor, (Scalar, int, Fraction)):
            return NotImplemented
        factor = Scalar.coerce(factor)
        if not factor:
            return type(self).zero(self.space)
        return type(self)._new(self.space, {k: v * factor for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, factor):
        if not isinstance(factor, (Scalar, int, Fraction)):
            return NotImplemented
        return self * Scalar.coerce(factor).inverse()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, Scalar)):
            other = Scalar.coerce(other)
            return self.terms == ({self.scalar_key(): other} if other else {})
        if type(other) is not type(self):
            return NotImplemented
        return self.space is other.space and self.terms == other.terms

    __hash__ = None

    def scalar_key(self) -> Hashable:
        """ The key of the unit element. """
        raise NotImplementedError()

    def scalar_part(self) -> Scalar:
        return self.terms.get(self.scalar_key(), ZERO)

    def __str__(self) -> str:
        from expr_parser import format_element
        return format_element(self)

    def __repr__(self) -> str:
        return f'{type(self).__name__}({self})'
