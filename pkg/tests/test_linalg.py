"""Exact linear algebra kernel: frozen examples plus algebraic properties."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rbpair.errors import DimensionMismatchError, ExactnessError
from rbpair.linalg import (
    Matrix,
    Subspace,
    frac,
    image_and_kernel,
    kernel_vectors,
    solve_linear,
    vector,
)

F = Fraction


def M(rows, cols=None):
    return Matrix.from_rows(rows, cols)


# ----------------------------------------------------------------- rationals


def test_frac_accepts_ints_strings_fractions():
    assert frac(3) == F(3)
    assert frac("2/3") == F(2, 3)
    assert frac("-7") == F(-7)
    assert frac(F(1, 2)) == F(1, 2)


def test_frac_rejects_floats_and_junk():
    with pytest.raises(ExactnessError):
        frac(0.5)
    with pytest.raises(ExactnessError):
        frac("1.5e3x")
    with pytest.raises(ExactnessError):
        frac(True)
    with pytest.raises(ExactnessError):
        frac("1/0")


def test_rational_string_round_trip():
    for text in ["0", "5", "-5", "1/2", "-3/7", "22/7"]:
        assert str(frac(text)) == text


# -------------------------------------------------------------------- echelon


def test_rref_identity_fixed():
    m = Matrix.identity(3)
    reduced, pivots = m.rref()
    assert reduced == m
    assert pivots == (0, 1, 2)


def test_rref_zero_fixed():
    m = Matrix.zero(2, 3)
    reduced, pivots = m.rref()
    assert reduced == m
    assert pivots == ()


def test_rref_dependent_rows_fixed():
    m = M([[1, 2], [2, 4]])
    reduced, pivots = m.rref()
    assert reduced == M([[1, 2], [0, 0]])
    assert pivots == (0,)


def test_rref_general_fixed():
    m = M([[0, 2, 4], [1, 1, 1]])
    reduced, pivots = m.rref()
    assert reduced == M([[1, 0, -1], [0, 1, 2]])
    assert pivots == (0, 1)


@st.composite
def small_matrices(draw):
    rows = draw(st.integers(1, 4))
    cols = draw(st.integers(1, 4))
    nums = st.integers(-6, 6)
    dens = st.integers(1, 4)
    entries = [
        [F(draw(nums), draw(dens)) for _ in range(cols)] for _ in range(rows)
    ]
    return M(entries)


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_rref_idempotent(m):
    reduced, pivots = m.rref()
    again, pivots2 = reduced.rref()
    assert again == reduced
    assert pivots2 == pivots


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_rank_nullity(m):
    image, kernel = image_and_kernel(m)
    assert image.dim + kernel.dim == m.cols
    assert image.dim == m.rank()


@settings(max_examples=40, deadline=None)
@given(small_matrices())
def test_kernel_vectors_annihilate(m):
    for v in kernel_vectors(m):
        assert all(x == 0 for x in m.matvec(v))


# --------------------------------------------------------------------- solve


def test_solve_scalar_fixed():
    assert solve_linear(M([[2]]), vector([1])) == (F(1, 2),)


def test_solve_inconsistent_fixed():
    assert solve_linear(M([[1, 1], [1, 1]]), vector([1, 2])) is None


def test_solve_underdetermined_deterministic():
    # free variable pinned to zero
    assert solve_linear(M([[1, 1]]), vector([3])) == (F(3), F(0))


def test_solve_shape_guard():
    with pytest.raises(DimensionMismatchError):
        solve_linear(M([[1, 0]]), vector([1, 2]))


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_solve_returns_actual_solutions(m):
    xs = [F(i - 1) for i in range(m.cols)]
    b = m.matvec(tuple(xs))
    x = solve_linear(m, b)
    assert x is not None
    assert m.matvec(x) == b


# ----------------------------------------------------------------- subspaces


def test_image_kernel_projector_fixed():
    b = Matrix.diagonal([0, 1, 1])
    image, kernel = image_and_kernel(b)
    assert image == Subspace.from_spanning([[0, 1, 0], [0, 0, 1]], 3)
    assert kernel == Subspace.from_spanning([[1, 0, 0]], 3)


def test_subspace_canonical_equality():
    a = Subspace.from_spanning([[1, 1], [0, 2]], 2)
    b = Subspace.from_spanning([[3, 5], [1, 0]], 2)
    assert a == b == Subspace.full(2)


def test_membership_and_coordinates():
    s = Subspace.from_spanning([[1, 0, 2], [0, 1, 3]], 3)
    v = vector([2, -1, 1])
    assert s.contains(v)
    coords = s.coordinates_of(v)
    assert coords == (F(2), F(-1))
    assert s.linear_combination(coords) == v
    assert not s.contains(vector([0, 0, 1]))
    assert s.coordinates_of(vector([0, 0, 1])) is None


def test_sum_and_intersection_fixed():
    a = Subspace.from_spanning([[1, 0, 0], [0, 1, 0]], 3)
    b = Subspace.from_spanning([[0, 1, 0], [0, 0, 1]], 3)
    assert a.add(b) == Subspace.full(3)
    assert a.intersect(b) == Subspace.from_spanning([[0, 1, 0]], 3)


def test_intersection_trivial_and_full():
    a = Subspace.from_spanning([[1, 0]], 2)
    b = Subspace.from_spanning([[0, 1]], 2)
    assert a.intersect(b) == Subspace.zero(2)
    assert a.intersect(a) == a


def test_zero_dimensional_edge_cases():
    z = Subspace.zero(0)
    assert z.dim == 0
    assert z.contains(())
    full = Subspace.full(0)
    assert full == z


@st.composite
def subspace_pairs(draw):
    n = draw(st.integers(1, 4))
    nums = st.integers(-4, 4)

    def space():
        k = draw(st.integers(0, n))
        return Subspace.from_spanning(
            [[F(draw(nums)) for _ in range(n)] for _ in range(k)], n)

    return space(), space()


@settings(max_examples=60, deadline=None)
@given(subspace_pairs())
def test_modular_dimension_law(pair):
    a, b = pair
    assert a.add(b).dim + a.intersect(b).dim == a.dim + b.dim


@settings(max_examples=60, deadline=None)
@given(subspace_pairs())
def test_intersection_contained_in_both(pair):
    a, b = pair
    inter = a.intersect(b)
    assert inter.is_subspace_of(a)
    assert inter.is_subspace_of(b)
    assert a.is_subspace_of(a.add(b))


def test_reduce_residue_outside_pivots():
    s = Subspace.from_spanning([[1, 0, 5]], 3)
    assert s.reduce(vector([2, 3, 10])) == (F(0), F(3), F(0))


def test_matmul_and_matvec():
    a = M([[1, 2], [3, 4]])
    b = M([[0, 1], [1, 0]])
    assert a @ b == M([[2, 1], [4, 3]])
    assert a.matvec(vector([1, 1])) == (F(3), F(7))
    with pytest.raises(DimensionMismatchError):
        a @ M([[1, 2, 3]])
