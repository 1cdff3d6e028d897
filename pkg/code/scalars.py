from __future__ import annotations

from fractions import Fraction
from typing import Union

Number = Union[int, Fraction, 'Scalar']


class Scalar:
    """An exact element a + b*i + c*r2 + d*i*r2 of Q(i, sqrt 2).

    Components are Fractions, so they are always in lowest terms with a positive denominator.
    Instances are immutable and hashable.
    """
    __slots__ = ('_parts',)

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0, c: int | Fraction = 0, d: int | Fraction = 0) -> None:
        object.__setattr__(self, '_parts', (Fraction(a), Fraction(b), Fraction(c), Fraction(d)))

    def __setattr__(self, name, value):
        raise AttributeError('Scalar is immutable')

    @classmethod
    def coerce(cls, value: Number) -> Scalar:
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls(value)
        raise TypeError(f'Expected Scalar, int or Fraction, not {type(value)}')

    @classmethod
    def parse(cls, text: str) -> Scalar:
        """ Read a scalar in the expression text form, e.g. `1/2 - 3*i*r2`. """
        from expr_parser import parse_scalar
        return parse_scalar(text)

    @property
    def a(self) -> Fraction:
        return self._parts[0]

    @property
    def b(self) -> Fraction:
        return self._parts[1]

    @property
    def c(self) -> Fraction:
        return self._parts[2]

    @property
    def d(self) -> Fraction:
        return self._parts[3]

    @property
    def parts(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self._parts

    def is_zero(self) -> bool:
        return not any(self._parts)

    def is_rational(self) -> bool:
        return self.b == 0 and self.c == 0 and self.d == 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f'{self} is not rational')
        return self.a

    def to_int(self) -> int:
        value = self.to_fraction()
        if value.denominator != 1:
            raise ValueError(f'{self} is not an integer')
        return value.numerator

    def conj(self) -> Scalar:
        """ Complex conjugation: i -> -i, r2 fixed. """
        a, b, c, d = self._parts
        return Scalar(a, -b, c, -d)

    def _conj_r2(self) -> Scalar:
        a, b, c, d = self._parts
        return Scalar(a, b, -c, -d)

    def inverse(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError('Scalar division by zero')
        # x * (x with r2 -> -r2) lies in Q(i).
        other = self._conj_r2()
        norm = self * other
        n0, n1 = norm.a, norm.b
        den = n0 * n0 + n1 * n1
        return other * Scalar(n0 / den, -n1 / den)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self._parts == other._parts
        if isinstance(other, (int, Fraction)):
            return self._parts == (Fraction(other), 0, 0, 0)
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.a)
        return hash(self._parts)

    def __neg__(self) -> Scalar:
        return Scalar(*(-p for p in self._parts))

    def __pos__(self) -> Scalar:
        return self

    def __add__(self, other: Number) -> Scalar:
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(*(p + q for p, q in zip(self._parts, other._parts)))

    __radd__ = __add__

    def __sub__(self, other: Number) -> Scalar:
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return Scalar(*(p - q for p, q in zip(self._parts, other._parts)))

    def __rsub__(self, other: Number) -> Scalar:
        return Scalar.coerce(other) - self

    def __mul__(self, other: Number) -> Scalar:
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self._parts
        e, f, g, h = other._parts
        return Scalar(
            a*e - b*f + 2*c*g - 2*d*h,
            a*f + b*e + 2*c*h + 2*d*g,
            a*g + c*e - b*h - d*f,
            a*h + d*e + b*g + c*f,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> Scalar:
        try:
            other = Scalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Number) -> Scalar:
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> Scalar:
        if exponent < 0:
            return self.inverse() ** -exponent
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self) -> str:
        pieces = []
        for value, unit in zip(self._parts, ('', 'i', 'r2', 'i*r2')):
            if value == 0:
                continue
            sign = '-' if value < 0 else '+'
            mag = abs(value)
            if unit == '':
                body = str(mag)
            elif mag == 1:
                body = unit
            else:
                body = f'{mag}*{unit}'
            pieces.append((sign, body))
        if not pieces:
            return '0'
        first_sign, first = pieces[0]
        text = ('-' if first_sign == '-' else '') + first
        for sign, body in pieces[1:]:
            text += f' {sign} {body}'
        return text

    def __repr__(self) -> str:
        return f'Scalar({self})'

    def is_compound(self) -> bool:
        """ True when the printed form has more than one term and needs parentheses as a coefficient. """
        return sum(1 for p in self._parts if p != 0) > 1


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
R2 = Scalar(0, 0, 1)
HALF = Scalar(Fraction(1, 2))


def conj(value: Number) -> Scalar:
    return Scalar.coerce(value).conj()


def sign(exponent: int) -> Scalar:
    """ (-1)**exponent as a Scalar. """
    return ONE if exponent % 2 == 0 else -ONE
