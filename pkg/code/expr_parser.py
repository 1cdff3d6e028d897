"""
Text form of scalars and elements.

Precedence, loosest first:

    a + b, a - b
    a & b               tensor: exterior part & symmetric part
    a * b, a / b        algebra product, scalar division
    -a
    a ^ b, a . b        wedge on V0 letters, vee on V1 letters
    a', a:k             star, k-fold power (x1:2 is x1.x1)
    atoms               numbers, i, r2, basis labels, (a), [a, b], [a, b]s, <a, b>,
                        proj(a, k) for the order k component, herm(a, b) for the Hermitian product

Labels may end in `*` or `^` (Witt duals such as e1* and x1^). When a suffix could also be an
operator it is read as part of the label only if no operand follows it.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import reduce
from typing import TYPE_CHECKING, Iterable, Iterator, NamedTuple, Optional, Union

import exceptions
from cliffordweyl import ClwElem, clw_basis, clw_bracket, clw_inner, clw_mul, clw_scalar, \
    clw_super_bracket, from_ext, from_sym
from elements import Element
from exterior import ExtElem, wedge
from scalars import Scalar, I, R2
from star import hermitian, star_clw
from symmetric import SymElem, vee

if TYPE_CHECKING:
    from forms import SuperSpace

Value = Union[Scalar, ClwElem]

IDENT_RE = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')
NUMBER_RE = re.compile(r'[0-9]+')
OPERATORS = "+-*/^.&'():,[]<>"
SCALAR_NAMES = {'i': I, 'r2': R2}
FUNCTIONS = ('proj', 'herm')


class Token(NamedTuple):
    kind: str  # 'num', 'ident', 'op' or 'end'
    text: str
    column: int


def _operand_follows(text: str, pos: int) -> bool:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos < len(text) and (text[pos].isalnum() or text[pos] in '_([<')


def tokenize(text: str, labels: Optional[Iterable[str]] = None) -> Iterator[Token]:
    labels = set(labels) if labels is not None else None
    pos = 0
    while pos < len(text):
        char = text[pos]
        if char.isspace():
            pos += 1
            continue
        if m := NUMBER_RE.match(text, pos):
            yield Token('num', m.group(), pos + 1)
            pos = m.end()
            continue
        if m := IDENT_RE.match(text, pos):
            name, end = m.group(), m.end()
            if end < len(text) and text[end] in '*^':
                candidate = name + text[end]
                if labels is None:
                    absorb = not _operand_follows(text, end + 1)
                else:
                    absorb = candidate in labels and (name not in labels or not _operand_follows(text, end + 1))
                if absorb:
                    name, end = candidate, end + 1
            yield Token('ident', name, pos + 1)
            pos = end
            continue
        if char in OPERATORS:
            yield Token('op', char, pos + 1)
            pos += 1
            continue
        raise exceptions.ParseError(f'syntax error: unexpected {char!r}', pos + 1)
    yield Token('end', '', len(text) + 1)


@dataclass(frozen=True)
class Num:
    value: Scalar


@dataclass(frozen=True)
class Sym:
    name: str
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: Expr


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Star:
    operand: Expr


@dataclass(frozen=True)
class Power:
    operand: Expr
    exponent: int


@dataclass(frozen=True)
class Project:
    operand: Expr
    order: int


@dataclass(frozen=True)
class Herm:
    left: Expr
    right: Expr


@dataclass(frozen=True)
class BracketNode:
    left: Expr
    right: Expr
    super: bool = False


@dataclass(frozen=True)
class Inner:
    left: Expr
    right: Expr


Expr = Union[Num, Sym, Neg, BinOp, Star, Power, Project, Herm, BracketNode, Inner]


class Parser:
    def __init__(self, text: str, labels: Optional[Iterable[str]] = None) -> None:
        self.tokens = list(tokenize(text, labels))
        self.pos = 0

    @property
    def token(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.token
        self.pos += 1
        return token

    def at(self, *ops: str) -> bool:
        return self.token.kind == 'op' and self.token.text in ops

    def expect(self, op: str) -> Token:
        if not self.at(op):
            self.fail()
        return self.advance()

    def fail(self):
        raise exceptions.ParseError('syntax error', self.token.column)

    def parse(self) -> Expr:
        expr = self.parse_sum()
        if self.token.kind != 'end':
            self.fail()
        return expr

    def parse_sum(self) -> Expr:
        expr = self.parse_tensor()
        while self.at('+', '-'):
            op = self.advance().text
            expr = BinOp(op, expr, self.parse_tensor())
        return expr

    def parse_tensor(self) -> Expr:
        expr = self.parse_product()
        while self.at('&'):
            self.advance()
            expr = BinOp('&', expr, self.parse_product())
        return expr

    def parse_product(self) -> Expr:
        expr = self.parse_unary()
        while self.at('*', '/'):
            op = self.advance().text
            expr = BinOp(op, expr, self.parse_unary())
        return expr

    def parse_unary(self) -> Expr:
        if self.at('-'):
            self.advance()
            return Neg(self.parse_unary())
        return self.parse_outer()

    def parse_outer(self) -> Expr:
        expr = self.parse_postfix()
        while self.at('^', '.'):
            op = self.advance().text
            expr = BinOp(op, expr, self.parse_postfix())
        return expr

    def parse_postfix(self) -> Expr:
        expr = self.parse_atom()
        while self.at("'", ':'):
            if self.advance().text == "'":
                expr = Star(expr)
            else:
                expr = Power(expr, self.count())
        return expr

    def count(self) -> int:
        if self.token.kind != 'num':
            self.fail()
        return int(self.advance().text)

    def parse_call(self, name: str) -> Expr:
        self.expect('(')
        left = self.parse_sum()
        self.expect(',')
        if name == 'proj':
            node = Project(left, self.count())
        else:
            node = Herm(left, self.parse_sum())
        self.expect(')')
        return node

    def parse_atom(self) -> Expr:
        token = self.token
        if token.kind == 'num':
            self.advance()
            return Num(Scalar(int(token.text)))
        if token.kind == 'ident':
            self.advance()
            if token.text in FUNCTIONS and self.at('('):
                return self.parse_call(token.text)
            return Sym(token.text, token.column)
        if self.at('('):
            self.advance()
            expr = self.parse_sum()
            self.expect(')')
            return expr
        if self.at('['):
            self.advance()
            left = self.parse_sum()
            self.expect(',')
            right = self.parse_sum()
            close = self.expect(']')
            nxt = self.token
            if nxt.kind == 'ident' and nxt.text == 's' and nxt.column == close.column + 1:
                self.advance()
                return BracketNode(left, right, True)
            return BracketNode(left, right)
        if self.at('<'):
            self.advance()
            left = self.parse_sum()
            self.expect(',')
            right = self.parse_sum()
            self.expect('>')
            return Inner(left, right)
        self.fail()


def parse(text: str, labels: Optional[Iterable[str]] = None) -> Expr:
    return Parser(text, labels).parse()


class Evaluator:
    """ Walks an Expr; values are Scalars until a basis symbol makes them ClwElems. """
    def __init__(self, space: Optional[SuperSpace]) -> None:
        self.space = space

    def promote(self, value: Value) -> ClwElem:
        if isinstance(value, ClwElem):
            return value
        if self.space is None:
            raise exceptions.EvaluationError('Scalar expression expected')
        return clw_scalar(self.space, value)

    def ext(self, value: Value) -> ExtElem:
        elem = self.promote(value)
        if not elem.is_pure_ext():
            raise exceptions.EvaluationError("'^' needs V0 operands")
        return elem.ext_part()

    def sym(self, value: Value) -> SymElem:
        elem = self.promote(value)
        if not elem.is_pure_sym():
            raise exceptions.EvaluationError("'.' needs V1 operands")
        return elem.sym_part()

    def power(self, value: ClwElem, exponent: int) -> ClwElem:
        """ x:k is the k-fold vee of a V1 element or the k-fold wedge of a V0 element. """
        if exponent == 0:
            return clw_scalar(value.space)
        if value.is_pure_sym():
            return from_sym(reduce(vee, [value.sym_part()] * exponent))
        if value.is_pure_ext():
            return from_ext(reduce(wedge, [value.ext_part()] * exponent))
        raise exceptions.EvaluationError("':' needs a V0 or a V1 operand")

    def __call__(self, expr: Expr) -> Value:
        match expr:
            case Num(value):
                return value
            case Sym(name, column):
                if name in SCALAR_NAMES:
                    return SCALAR_NAMES[name]
                if self.space is None or not self.space.has_label(name):
                    raise exceptions.ParseError(f'unknown symbol {name!r}', column or None)
                return clw_basis(self.space, self.space.index_of(name))
            case Neg(operand):
                return -self(operand)
            case Star(operand):
                value = self(operand)
                if isinstance(value, Scalar):
                    return value.conj()
                return star_clw(value)
            case Power(operand, exponent):
                value = self(operand)
                if isinstance(value, Scalar):
                    return value ** exponent
                return self.power(value, exponent)
            case Project(operand, order):
                value = self(operand)
                if isinstance(value, Scalar):
                    return value if order == 0 else Scalar(0)
                return value.order_project(order)
            case Herm(left, right):
                return hermitian(self.promote(self(left)), self.promote(self(right)))
            case BracketNode(left, right, is_super):
                X, Y = self.promote(self(left)), self.promote(self(right))
                return clw_super_bracket(X, Y) if is_super else clw_bracket(X, Y)
            case Inner(left, right):
                return clw_inner(self.promote(self(left)), self.promote(self(right)))
            case BinOp(op, left, right):
                return self.binop(op, self(left), self(right))
        raise exceptions.EvaluationError(f'Cannot evaluate {expr!r}')

    def binop(self, op: str, a: Value, b: Value) -> Value:
        scalars = isinstance(a, Scalar) and isinstance(b, Scalar)
        match op:
            case '+':
                return a + b if scalars else self.promote(a) + self.promote(b)
            case '-':
                return a - b if scalars else self.promote(a) - self.promote(b)
            case '*':
                if isinstance(a, Scalar) or isinstance(b, Scalar):
                    return a * b
                return clw_mul(a, b)
            case '/':
                if not isinstance(b, Scalar):
                    raise exceptions.EvaluationError('Division by an element')
                if not b:
                    raise exceptions.EvaluationError('Division by zero')
                return a / b
            case '^':
                if scalars:
                    raise exceptions.EvaluationError("'^' needs an element operand")
                return from_ext(wedge(self.ext(a), self.ext(b)))
            case '.':
                if scalars:
                    raise exceptions.EvaluationError("'.' needs an element operand")
                return from_sym(vee(self.sym(a), self.sym(b)))
            case '&':
                if scalars:
                    return a * b
                return clw_mul(from_ext(self.ext(a)), from_sym(self.sym(b)))
        raise exceptions.EvaluationError(f'Unknown operator {op!r}')


def evaluate(expr: Expr, space: Optional[SuperSpace]) -> Value:
    return Evaluator(space)(expr)


def evaluate_text(text: str, space: SuperSpace) -> Value:
    return evaluate(parse(text, space.labels), space)


def parse_scalar(text: str) -> Scalar:
    value = evaluate(parse(text.strip(), ()), None)
    if not isinstance(value, Scalar):
        raise exceptions.ParseError(f'{text!r} is not a scalar')
    return value


def _key_parts(elem: Element, key) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """ (V0 word, V1 exponents) of a key of any element kind. """
    if isinstance(elem, ExtElem):
        return key, ()
    if isinstance(elem, SymElem):
        return (), key
    return key


def _term_body(space: SuperSpace, word: tuple[int, ...], exps: tuple[int, ...]) -> str:
    ext = '^'.join(space.label(a) for a in word)
    sym = '.'.join(space.label(space.n0 + a) for a, e in enumerate(exps) for _ in range(e))
    if ext and sym:
        return f'{ext} & {sym}'
    return ext or sym


def _sort_key(elem: Element, key):
    word, exps = _key_parts(elem, key)
    return elem.order_of_key(key), word, tuple(-e for e in exps)


def format_element(elem: Element) -> str:
    """ Terms in order of increasing order, then by word; parse() reads the result back. """
    if elem.is_zero():
        return '0'
    keys = sorted(elem.terms, key=lambda k: _sort_key(elem, k))
    pieces: list[tuple[str, str]] = []
    for key in keys:
        c = elem.terms[key]
        body = _term_body(elem.space, *_key_parts(elem, key))
        if c.is_compound():
            coef = f'({c})'
            sign = '+'
        else:
            sign = '-' if str(c).startswith('-') else '+'
            coef = str(-c if sign == '-' else c)
        if not body:
            text = coef if len(keys) > 1 or not c.is_compound() else str(c)
        elif coef == '1':
            text = body
        else:
            text = f'{coef}*{body}'
        pieces.append((sign, text))
    first_sign, out = pieces[0]
    if first_sign == '-':
        out = '-' + out
    for sign, text in pieces[1:]:
        out += f' {sign} {text}'
    return out


def format_value(value: Value) -> str:
    if isinstance(value, Scalar):
        return str(value)
    return format_element(value)
