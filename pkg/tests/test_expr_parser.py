from fractions import Fraction

import pytest
from hypothesis import given

import exceptions
from cliffordweyl import ClwElem
from expr_parser import (BinOp, BracketNode, Herm, Inner, Neg, Num, Power, Project, Star, Sym, evaluate_text,
                         format_element, format_value, parse, parse_scalar, tokenize)
from forms import make_space, orthonormal_space, witt_basis_space
from scalars import I, Scalar
from strategies import space_with


def test_operator_precedence():
    expected = BinOp('&', BinOp('^', Sym('e1'), Sym('e2')), BinOp('.', Sym('x1'), Sym('x1')))
    assert parse('e1^e2 & x1.x1') == expected
    assert parse('2*e1^e2') == BinOp('*', Num(Scalar(2)), BinOp('^', Sym('e1'), Sym('e2')))
    assert parse("-e1'") == Neg(Star(Sym('e1')))
    assert parse('e1 + e2 & x1') == BinOp('+', Sym('e1'), BinOp('&', Sym('e2'), Sym('x1')))


def test_delimited_forms():
    assert parse('[e1, e2]s') == BracketNode(Sym('e1'), Sym('e2'), True)
    assert parse('[e1, e2]') == BracketNode(Sym('e1'), Sym('e2'))
    assert parse('<x1, x1^>') == Inner(Sym('x1'), Sym('x1^'))
    assert parse('proj(e1 + e2, 1)') == Project(BinOp('+', Sym('e1'), Sym('e2')), 1)
    assert parse('herm(e1, e2)') == Herm(Sym('e1'), Sym('e2'))
    assert parse('x1:2 . x2') == BinOp('.', Power(Sym('x1'), 2), Sym('x2'))


def test_dual_labels():
    labels = witt_basis_space(1, False, 1).labels
    assert [t.text for t in tokenize('e1*^e1', labels)][:3] == ['e1*', '^', 'e1']
    assert [t.text for t in tokenize('e1*e1*', labels)][:3] == ['e1', '*', 'e1*']
    assert [t.text for t in tokenize('x1^.x1', labels)][:3] == ['x1^', '.', 'x1']


def test_syntax_errors_carry_a_column():
    labels = orthonormal_space(2).labels
    with pytest.raises(exceptions.ParseError) as info:
        parse('e1^^e2', labels)
    assert info.value.column == 4
    assert 'column 4' in str(info.value)
    for text in ('e1 +', '[e1 e2]', '<e1, e2', 'e1 $ e2', 'e1:x', 'proj(e1)', 'proj(e1, e2)'):
        with pytest.raises(exceptions.ParseError):
            parse(text, labels)


def test_unknown_symbols(plane):
    with pytest.raises(exceptions.ParseError) as info:
        evaluate_text('e1 + e3', plane)
    assert info.value.column == 6
    with pytest.raises(exceptions.ParseError):
        parse_scalar('e1')


def test_evaluation(plane, symplectic2):
    assert evaluate_text('e1 * e1', plane) == 1
    assert evaluate_text('e2 * e1', plane) == ClwElem(plane, {((0, 1), ()): -1})
    assert evaluate_text('<x1, x1^>', symplectic2) == 1
    assert evaluate_text('[1&x1, 1&x1^]', symplectic2) == 2
    assert format_value(evaluate_text('[1&x1, 1&x1^]s', symplectic2)) == '2*x1.x1^'
    assert format_value(evaluate_text('x1 * x1^', symplectic2)) == '1 + x1.x1^'


def test_scalar_expressions(plane):
    assert parse_scalar('1/2 + i') == Scalar(Fraction(1, 2), 1)
    assert parse_scalar('r2 * r2') == 2
    assert parse_scalar("(1 + i)'") == Scalar(1, -1)
    assert evaluate_text('(2 + 3*i) / 2', plane) == Scalar(1, Fraction(3, 2))
    assert evaluate_text('<e1 + e2, e1:1>', plane) == 1


def test_star_and_projection():
    space = witt_basis_space(1, False, 1)
    assert format_value(evaluate_text("e1'", space)) == 'e1*'
    assert format_value(evaluate_text("x1'", space)) == 'i*x1^'
    assert format_value(evaluate_text('proj(2 + e1 + e1^e1*, 2)', space)) == 'e1^e1*'
    assert evaluate_text('proj(3, 0)', space) == 3


def test_evaluation_errors(plane, symplectic2):
    with pytest.raises(exceptions.EvaluationError):
        evaluate_text('e1 / e2', plane)
    with pytest.raises(exceptions.EvaluationError):
        evaluate_text('e1 / 0', plane)
    with pytest.raises(exceptions.EvaluationError):
        evaluate_text('x1 ^ x1^', symplectic2)
    with pytest.raises(exceptions.EvaluationError):
        evaluate_text('e1 . e2', plane)
    with pytest.raises(exceptions.StarError):
        evaluate_text("e1'", make_space(1, 0, [[1]], []))


def test_formatting(plane):
    assert format_element(ClwElem.zero(plane)) == '0'
    assert format_value(evaluate_text('2 - e1 + e1^e2 / 2', plane)) == '2 - e1 + 1/2*e1^e2'
    assert format_value(evaluate_text('(1 + i) * e2', plane)) == '(1 + i)*e2'
    assert format_value(evaluate_text('i', plane)) == str(I)


@given(space_with('clw', count=1))
def test_printed_elements_read_back(case):
    space, X = case
    assert evaluate_text(format_element(X), space) == X


def test_exponent_shorthand():
    space = witt_basis_space(0, False, 1)
    assert format_value(evaluate_text('x1:2', space)) == 'x1.x1'
    assert format_value(evaluate_text('x1:3', space)) == 'x1.x1.x1'
    assert evaluate_text('x1:0', space) == 1
    assert evaluate_text('x1:2', space) == evaluate_text('x1.x1', space)
    assert format_value(evaluate_text('(x1 + x1^):2', space)) == 'x1.x1 + 2*x1.x1^ + x1^.x1^'
    assert evaluate_text('(1 + i):2', space) == Scalar(0, 2)
    assert evaluate_text('e1:2', witt_basis_space(1, False, 0)) == 0
    with pytest.raises(exceptions.EvaluationError):
        evaluate_text('(e1 + x1):2', witt_basis_space(1, False, 1))


def test_hermitian_product():
    space = witt_basis_space(1, False, 1)
    assert evaluate_text('herm(e1, e1)', space) == 1
    assert evaluate_text('herm(i*e1, e1)', space) == I
    assert evaluate_text('herm(e1, i*e1)', space) == -I
