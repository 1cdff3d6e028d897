import pytest
from hypothesis import given

import exceptions
import linalg
from algebra_types import Bracket
from clifford import cl_ad, cl_bracket, cl_inner_new, cl_mul, o_embed, o_project
from exterior import (ExtElem, bar, ext_basis, ext_inner, ext_insert_graded, ext_insert_vec, ext_scalar, opp,
                      prime, wedge)
from forms import orthonormal_space, witt_basis_space
from strategies import space_with


def test_vectors_square_to_their_length(plane):
    e1, e2 = ext_basis(plane, 0), ext_basis(plane, 1)
    assert cl_mul(e1, e1) == 1
    assert cl_mul(e1, e2) == ext_basis(plane, 0, 1)
    assert cl_mul(e2, e1) == -ext_basis(plane, 0, 1)


def test_bivector_squares_to_minus_one(plane):
    e12 = ext_basis(plane, 0, 1)
    assert cl_mul(e12, e12) == -1


def test_witt_vectors(witt11):
    e, f = ext_basis(witt11, 0), ext_basis(witt11, 1)
    assert cl_mul(e, e).is_zero()
    assert cl_mul(e, f) == wedge(e, f) + ext_scalar(witt11)
    assert cl_mul(f, e) == -wedge(e, f) + ext_scalar(witt11)


def test_brackets(plane):
    e1, e2 = ext_basis(plane, 0), ext_basis(plane, 1)
    e12 = ext_basis(plane, 0, 1)
    assert cl_bracket(e1, e12, Bracket.SUPER) == 2 * e2
    assert cl_bracket(e1, e2) == 2 * e12
    assert cl_bracket(e12, e12).is_zero()
    assert cl_bracket(e1, e1, Bracket.SUPER) == 2


def test_shifted_inner_product(plane):
    e1 = ext_basis(plane, 0)
    e12 = ext_basis(plane, 0, 1)
    assert cl_inner_new(e1, e1) == 1
    assert cl_inner_new(e12, e12) == -1
    assert cl_inner_new(ext_scalar(plane), ext_scalar(plane)) == 1


def test_ad_of_a_cartan_generator():
    space = witt_basis_space(1, False, 0)
    e, f = ext_basis(space, 0), ext_basis(space, 1)
    H = wedge(e, f) / 2
    assert cl_ad(H, e) == e
    assert cl_ad(H, f) == -f
    assert cl_ad(H, ext_scalar(space)).is_zero()
    with pytest.raises(exceptions.OrderError):
        cl_ad(e, f)


def test_o_embedding_of_a_cartan_generator():
    space = witt_basis_space(1, False, 0)
    H = ext_basis(space, 0, 1) / 2
    T = o_project(H)
    assert linalg.matrices_equal(T, linalg.scalar_matrix([[1, 0], [0, -1]]))
    assert o_embed(space, T) == H
    assert o_embed(space, [[0, 0], [0, 0]]).is_zero()


def test_o_embedding_solves_for_the_bracket():
    space = orthonormal_space(4)
    T = [[0, 1, 2, 0], [-1, 0, 0, 3], [-2, 0, 0, 1], [0, -3, -1, 0]]
    y = o_embed(space, T)
    assert y.orders() == {2}
    for j in range(4):
        image = cl_bracket(y, ext_basis(space, j))
        assert image == ExtElem(space, {(i,): T[i][j] for i in range(4)})


def test_o_embedding_rejects_non_members(plane):
    with pytest.raises(exceptions.EmbeddingError):
        o_embed(plane, [[1, 0], [0, 1]])


@given(space_with('ext', count=3))
def test_product_is_associative_and_unital(case):
    space, x, y, z = case
    assert cl_mul(cl_mul(x, y), z) == cl_mul(x, cl_mul(y, z))
    assert cl_mul(ext_scalar(space), x) == x
    assert cl_mul(x, ext_scalar(space)) == x


@given(space_with('ext', count=1))
def test_anticommutator_of_vectors(case):
    space, _ = case
    for a in range(space.n0):
        for b in range(space.n0):
            u, v = ext_basis(space, a), ext_basis(space, b)
            assert cl_mul(u, v) + cl_mul(v, u) == ext_scalar(space, space.g(a, b) * 2)
            assert cl_mul(u, v) == wedge(u, v) + ext_scalar(space, space.g(a, b))


@given(space_with('ext', count=2))
def test_involutions_respect_the_product(case):
    space, x, y = case
    assert prime(cl_mul(x, y)) == cl_mul(prime(x), prime(y))
    assert opp(cl_mul(x, y)) == cl_mul(opp(y), opp(x))
    assert bar(cl_mul(x, y)) == cl_mul(bar(y), bar(x))


@given(space_with('ext', count=2))
def test_vector_times_multivector(case):
    space, x, y = case
    for a in range(space.n0):
        v = ext_basis(space, a)
        assert cl_mul(v, y) == wedge(v, y) + ext_insert_vec(v, y)
        assert cl_mul(v, y) + cl_mul(prime(y), v) == 2 * wedge(v, y)
        assert cl_mul(v, y) - cl_mul(prime(y), v) == 2 * ext_insert_vec(v, y)


@given(space_with('ext', count=2))
def test_super_bracket_is_a_sum_of_odd_insertions(case):
    space, x, y = case
    for k, part in x.homogeneous_parts().items():
        total = ExtElem.zero(space)
        for l in range(1, k + 1, 2):
            total = total + ext_insert_graded(part, l, y)
        expected = total * 2 if k % 2 else total * -2
        assert cl_bracket(part, y, Bracket.SUPER) == expected


@given(space_with('ext', count=3))
def test_inner_products_are_invariant(case):
    space, x, y, z = case
    left = ext_inner(cl_mul(x, y), z)
    assert left == ext_inner(y, cl_mul(opp(x), z))
    assert left == ext_inner(x, cl_mul(z, opp(y)))
    assert cl_inner_new(cl_mul(x, y), z) == cl_inner_new(x, cl_mul(y, z))
    assert cl_inner_new(cl_mul(x, y), z) == cl_inner_new(cl_mul(z, x), y)
    assert cl_inner_new(x, y) == cl_mul(x, y).scalar_part()


@given(space_with('ext', count=3))
def test_ad_of_order_two_is_antisymmetric_and_graded(case):
    space, x, y, z = case
    a = x.order_project(2)
    assert cl_inner_new(cl_bracket(a, y), z) == -cl_inner_new(y, cl_bracket(a, z))
    assert ext_inner(cl_ad(a, y), z) == -ext_inner(y, cl_ad(a, z))
    assert cl_ad(a, y) == cl_bracket(a, y)
    for k, part in y.homogeneous_parts().items():
        assert cl_ad(a, part).orders() <= {k}
    assert cl_bracket(a, z.order_project(2)).orders() <= {2}


@given(space_with('ext', count=1, max_n0=4))
def test_o_round_trip(case):
    space, x = case
    y = x.order_project(2)
    assert o_embed(space, o_project(y)) == y


@given(space_with('ext', count=1))
def test_bracket_with_a_bivector_is_a_single_insertion(case):
    space, y = case
    for a in range(space.n0):
        for b in range(a + 1, space.n0):
            u, v = ext_basis(space, a), ext_basis(space, b)
            uv = wedge(u, v)
            assert cl_bracket(uv, y) == ext_insert_graded(uv, 1, y) * -2
            assert cl_bracket(uv, y) == 2 * (wedge(u, ext_insert_vec(v, y)) - wedge(v, ext_insert_vec(u, y)))


@given(space_with('ext', count=3))
def test_bracket_with_a_bivector_is_a_wedge_derivation(case):
    space, x, y, z = case
    a = x.order_project(2)
    assert cl_bracket(a, wedge(y, z)) == wedge(cl_bracket(a, y), z) + wedge(y, cl_bracket(a, z))


@given(space_with('ext', count=3))
def test_commutator_moves_across_the_inner_product(case):
    space, x, y, z = case
    assert ext_inner(cl_bracket(x, y), z) == ext_inner(x, cl_bracket(z, opp(y)))
