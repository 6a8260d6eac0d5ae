from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qhh import BudgetExceeded, Cochain, cohomology, hh_dim_table, one_loop, two_loops
from qhh.cochains import coboundary, cochain_space, d_map, full_differential, pair
from qhh.linalg import Subspace, image_subspace, kernel_basis, rank

Q1, Q2 = one_loop(), two_loops()


def test_cochain_arithmetic():
    x = Cochain.basis(pair(Q2, "a", "b"), 2)
    y = Cochain.basis(pair(Q2, "a", "b"), -2)
    assert not (x + y)
    assert x * Fraction(1, 2) == Cochain.basis(pair(Q2, "a", "b"))
    assert -x == y
    with pytest.raises(ValueError):
        x + Cochain.zero(2)


def test_d1_one_loop():
    # D_1(a,e) = (a a, a) + (a a, a)
    d = coboundary(Q1, Cochain.basis(pair(Q1, "a", "@e")))
    assert d == Cochain.basis(pair(Q1, "aa", "a"), 2)


def test_d2_one_loop_vanishes():
    assert not coboundary(Q1, Cochain.basis(pair(Q1, "aa", "@e")))


def test_d0_two_loops_vanishes():
    assert d_map(Q2, 0).is_zero()


def test_full_differential_two_loops_rank():
    assert rank(full_differential(Q2, 1)) == 2


def test_shortcut_block_is_killed():
    for n in range(4):
        m = full_differential(Q2, n)
        space = cochain_space(Q2, n)
        for j in range(space.vertex_dim, space.dim):
            assert all(m[i, j] == 0 for i in range(m.rows))


@pytest.mark.parametrize("n", range(5))
def test_coboundary_matches_matrix(n):
    space, target = cochain_space(Q2, n), cochain_space(Q2, n + 1)
    m = full_differential(Q2, n)
    for j, p in enumerate(space.basis):
        assert target.to_vector(coboundary(Q2, Cochain.basis(p))) == tuple(m[i, j] for i in range(m.rows))


def test_hh_examples(a2):
    assert cohomology(Q2, 3).dim == 12
    assert cohomology(Q2, 0).dim == 3
    g = cohomology(Q1, 4)
    assert g.dim == 1
    assert g.representatives == (Cochain.basis(pair(Q1, "aaaa", "@e")),)
    assert hh_dim_table(Q2, 4, n_min=1) == [4, 6, 12, 24]
    assert hh_dim_table(Q1, 3) == [2, 1, 1, 1]
    assert hh_dim_table(a2, 5, n_min=2) == [0, 0, 0, 0]


def _generic_dims(quiver, n):
    """Cohomology from the full matrices, without using their block shape."""
    ker = kernel_basis(full_differential(quiver, n))
    im = image_subspace(full_differential(quiver, n - 1)) if n else Subspace.zero(ker.ambient_dim)
    for v in im.basis:
        assert ker.contains(v)
    return ker.dim - im.dim, ker, im


@pytest.mark.parametrize("name", ["one", "two", "a2", "shortcut", "cycle"])
@pytest.mark.parametrize("n", range(0, 5))
def test_block_cohomology_matches_generic(request, name, n):
    quiver = {
        "one": Q1,
        "two": Q2,
        "a2": request.getfixturevalue("a2"),
        "shortcut": request.getfixturevalue("kronecker_shortcut"),
        "cycle": request.getfixturevalue("two_cycle"),
    }[name]
    dim, ker, im = _generic_dims(quiver, n)
    g = cohomology(quiver, n)
    assert g.dim == dim
    assert g.kernel == ker
    assert g.image == im
    # representatives are cocycles, independent modulo the image, and canonical
    assert len(g.representatives) == dim
    space = g.space
    vecs = [space.to_vector(r) for r in g.representatives]
    assert Subspace.span(space.dim, vecs + im.basis).dim == dim + im.dim
    for r in g.representatives:
        assert g.is_cocycle(r)
        assert g.reduce(r) == r


def test_a2_is_hereditary_and_connected(a2):
    # kA2 is hereditary with trivial center: only HH^0 = k survives
    assert hh_dim_table(a2, 3) == [1, 0, 0, 0]


def test_coordinates_and_reduce():
    g = cohomology(Q2, 2)
    c = g.representatives[0] * 3 + g.representatives[-1]
    coords = g.coordinates(c)
    assert coords[0] == 3 and coords[-1] == 1
    with pytest.raises(ValueError):
        g.coordinates(Cochain.basis(pair(Q2, "aa", "@e")) * 0 + Cochain.basis(pair(Q2, "ab", "@e")))


def test_budget():
    with pytest.raises(BudgetExceeded):
        cohomology(Q2, 9, budget=100)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 5), st.lists(st.integers(-3, 3), min_size=1, max_size=64))
def test_d_squared_zero(n, coefs):
    space = cochain_space(Q2, n)
    c = space.from_vector(coefs[: space.dim])
    assert not coboundary(Q2, coboundary(Q2, c))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.data())
def test_reduce_is_projection(n, data):
    g = cohomology(Q2, n)
    space = g.space
    v = data.draw(st.lists(st.integers(-3, 3), min_size=space.dim, max_size=space.dim))
    c = space.from_vector(v)
    r = g.reduce(c)
    assert g.reduce(r) == r
    assert g.image.contains(space.to_vector(c - r))
