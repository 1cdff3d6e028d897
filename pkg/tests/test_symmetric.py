import pytest
from hypothesis import given

import exceptions
from algebra_types import Variant
from forms import witt_basis_space
from strategies import space_with
from symmetric import (SymElem, sym_basis, sym_inner, sym_insert_full, sym_insert_graded,
                       sym_insert_graded_shuffle, sym_insert_multi, sym_insert_vec, sym_monomial, sym_parity,
                       sym_scalar, sym_vector, vee)


@pytest.fixture
def letters(symplectic2):
    return sym_basis(symplectic2, 0), sym_basis(symplectic2, 1)


def test_vee_is_commutative_with_unit(symplectic2, letters):
    x, y = letters
    assert vee(x, x) == sym_monomial(symplectic2, (2, 0))
    assert vee(x, y) == vee(y, x)
    assert vee(sym_scalar(symplectic2), y) == y


def test_parity(symplectic2, letters):
    x, y = letters
    assert sym_parity(x) == -x
    assert sym_parity(vee(x, y)) == vee(x, y)
    assert sym_parity(sym_scalar(symplectic2)) == 1


def test_inner_uses_the_symplectic_form(symplectic2, letters):
    x, y = letters
    assert sym_inner(x, y) == 1
    assert sym_inner(y, x) == -1
    assert sym_inner(vee(x, x), vee(y, y)) == 2
    assert sym_inner(x, vee(x, y)) == 0


def test_insert_vector(symplectic2, letters):
    x, y = letters
    assert sym_insert_vec(x, y) == 1
    assert sym_insert_vec(x, x).is_zero()
    assert sym_insert_vec(x, vee(y, y)) == 2 * y
    with pytest.raises(exceptions.OrderError):
        sym_insert_vec(vee(x, x), y)
    v = sym_vector(symplectic2, [1, 3])
    assert v == x + y * 3
    assert sym_insert_vec(v, vee(y, y)) == 2 * y


def test_insert_monomial(symplectic2, letters):
    x, y = letters
    assert sym_insert_multi(vee(x, x), vee(y, y)) == 2
    assert sym_insert_multi(sym_scalar(symplectic2), vee(x, y)) == vee(x, y)
    space = witt_basis_space(0, False, 2)
    x1, x2, y1 = sym_basis(space, 0), sym_basis(space, 1), sym_basis(space, 2)
    assert sym_insert_multi(vee(x1, x2), y1).is_zero()


def test_graded_insertion(symplectic2, letters):
    x, y = letters
    assert sym_insert_graded(vee(x, x), 1, y) == 2 * x
    assert sym_insert_graded(x, 0, y) == vee(x, y)
    assert sym_insert_graded(x, 1, y) == 1
    with pytest.raises(exceptions.OrderError):
        sym_insert_graded(x, 2, y)


def test_full_insertion(symplectic2, letters):
    x, y = letters
    assert sym_insert_full(x, y) == vee(x, y) + sym_scalar(symplectic2)
    assert sym_insert_full(x, y, Variant.ALT) == vee(x, y) - sym_scalar(symplectic2)
    assert sym_insert_full(sym_scalar(symplectic2), vee(x, y)) == vee(x, y)


def test_text_form(symplectic2):
    assert str(SymElem(symplectic2, {(2, 0): 1, (0, 1): -3})) == '-3*x1^ + x1.x1'


@given(space_with('sym', count=3))
def test_vector_insertion_is_skew_adjoint(case):
    space, eta, xi, phi = case
    for p, c in eta.order_project(1):
        v = sym_monomial(space, p)
        assert sym_inner(sym_insert_vec(v, xi), phi) == -sym_inner(xi, vee(v, phi))


@given(space_with('sym', count=3))
def test_insertion_adjoint_sign_follows_the_order(case):
    space, eta, xi, phi = case
    for k, part in eta.homogeneous_parts().items():
        left = sym_inner(sym_insert_multi(part, xi), phi)
        right = sym_inner(xi, vee(part, phi))
        assert left == (-right if k % 2 else right)


@given(space_with('sym', count=2))
def test_full_insertion_of_equal_orders_is_the_inner_product(case):
    space, eta, xi = case
    for k, part in eta.homogeneous_parts().items():
        same = xi.order_project(k)
        assert sym_insert_multi(part, same) == sym_inner(part, same)


@given(space_with('sym', count=2))
def test_two_graded_expansions_agree(case):
    space, eta, xi = case
    for k, part in eta.homogeneous_parts().items():
        for l in range(k + 1):
            assert sym_insert_graded(part, l, xi) == sym_insert_graded_shuffle(part, l, xi)
        assert sym_insert_graded(part, 0, xi) == vee(part, xi)
        assert sym_insert_graded(part, k, xi) == sym_insert_multi(part, xi)


@given(space_with('sym', count=2))
def test_graded_insertion_symmetry(case):
    space, eta, xi = case
    for k, part in eta.homogeneous_parts().items():
        for j, other in xi.homogeneous_parts().items():
            for l in range(min(k, j) + 1):
                swapped = sym_insert_graded(other, l, part)
                assert sym_insert_graded(part, l, other) == (-swapped if l % 2 else swapped)


@given(space_with('sym', count=3))
def test_graded_insertion_adjoint(case):
    space, eta, xi, phi = case
    for k, part in eta.homogeneous_parts().items():
        for l in range(k + 1):
            left = sym_inner(sym_insert_graded(part, l, xi), phi)
            right = sym_inner(xi, sym_insert_graded(part, k - l, phi))
            assert left == (-right if l % 2 else right)


def graded(eta: SymElem, l: int, phi: SymElem) -> SymElem:
    """ i^(l)_eta phi, read as zero when l falls outside 0..order(eta). """
    if not 0 <= l <= eta.order():
        return SymElem.zero(phi.space)
    return sym_insert_graded(eta, l, phi)


@given(space_with('sym', count=2))
def test_graded_insertion_against_a_letter(case):
    space, eta, phi = case
    for a in range(space.n1):
        xi = sym_basis(space, a)
        ix_phi = sym_insert_vec(xi, phi)
        for k, part in eta.homogeneous_parts().items():
            ix_eta = sym_insert_vec(xi, part)
            for l in range(k + 2):
                expected = vee(xi, graded(part, l, phi)) + graded(part, l - 1, ix_phi)
                assert graded(vee(xi, part), l, phi) == expected
            for l in range(k + 1):
                left = sym_insert_vec(xi, graded(part, l, phi))
                assert left == graded(ix_eta, l, phi) + graded(part, l, ix_phi)
                left = graded(part, l, vee(xi, phi))
                assert left == vee(xi, graded(part, l, phi)) - graded(ix_eta, l - 1, phi)


@given(space_with('sym', count=2))
def test_full_insertion_against_a_letter(case):
    space, eta, phi = case
    for a in range(space.n1):
        xi = sym_basis(space, a)
        ix_phi = sym_insert_vec(xi, phi)
        ix_eta = sym_insert_vec(xi, eta)
        assert sym_insert_full(vee(xi, eta), phi) == vee(xi, sym_insert_full(eta, phi)) + sym_insert_full(eta, ix_phi)
        left = sym_insert_vec(xi, sym_insert_full(eta, phi))
        assert left == sym_insert_full(ix_eta, phi) + sym_insert_full(eta, ix_phi)
        left = sym_insert_full(eta, vee(xi, phi))
        assert left == vee(xi, sym_insert_full(eta, phi)) - sym_insert_full(ix_eta, phi)
