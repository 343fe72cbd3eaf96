from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from shlie.exactlin import (
    ContainmentViolation, Matrix, NoSolution, Subspace, complement_basis, fstr, image_basis,
    inverse, kernel_basis, parse_rational, random_complement, rank, solve_preimage, unit,
)

small = st.integers(-4, 4).map(Fraction)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(0, max_rows))
    c = draw(st.integers(0, max_cols))
    rows = [[draw(small) for _ in range(c)] for _ in range(r)]
    return Matrix(r, c, rows)


def to_sympy(m):
    return sympy.Matrix(m.rows, m.cols, lambda i, j: sympy.Rational(m.entries[i][j].numerator,
                                                                     m.entries[i][j].denominator))


def test_parse_and_format_rationals():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("-4") == -4
    assert fstr(Fraction(4, 2)) == "2"
    assert fstr(Fraction(-2, 6)) == "-1/3"
    for bad in ("1/0", "", "1/", "a", "1.5", "1//2"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_kernel_examples():
    assert kernel_basis(Matrix.zero(2, 2)) == Subspace.full(2)
    assert kernel_basis(Matrix.identity(3)).dim == 0
    k = kernel_basis(Matrix.from_rows([[1, 1]]))
    assert k.dim == 1 and k.contains((1, -1))


def test_image_examples():
    assert image_basis(Matrix.identity(4)) == Subspace.full(4)
    assert image_basis(Matrix.zero(3, 2)).dim == 0
    assert image_basis(Matrix.from_rows([[0], [1]])).basis == ((0, 1),)


def test_preimage_examples():
    v = (Fraction(2), Fraction(-1), Fraction(1, 3))
    assert solve_preimage(Matrix.identity(3), v) == v
    with pytest.raises(NoSolution):
        solve_preimage(Matrix.zero(2, 2), (1, 0))
    assert solve_preimage(Matrix.from_rows([[1, 1]]), (2,)) == (2, 0)


def test_complement_examples():
    full3 = Subspace.full(3)
    s = Subspace(3, [(1, 1, 0)])
    assert complement_basis(s, s).dim == 0
    assert complement_basis(Subspace.zero(2), Subspace.full(2)) == Subspace.full(2)
    c = complement_basis(Subspace(3, [(1, 0, 0)]), full3)
    assert c == Subspace(3, [(0, 1, 0), (0, 0, 1)])
    with pytest.raises(ContainmentViolation):
        complement_basis(Subspace(3, [(1, 0, 0)]), Subspace(3, [(0, 1, 0)]))


def test_complement_inside_proper_outer():
    outer = Subspace(3, [(1, 1, 0), (0, 0, 1)])
    inner = Subspace(3, [(1, 1, 1)])
    c = complement_basis(inner, outer)
    assert c.dim == 1
    assert c.issubspace(outer)
    assert Subspace(3, inner.basis + c.basis) == outer


@given(matrices())
def test_rank_nullity_against_sympy(m):
    k = kernel_basis(m)
    assert k.dim + rank(m) == m.cols
    assert rank(m) == to_sympy(m).rank()
    for b in k.basis:
        assert all(x == 0 for x in m.apply(b))


@given(matrices())
def test_image_matches_sympy_columnspace(m):
    img = image_basis(m)
    assert img.dim == to_sympy(m).rank()
    for j in range(m.cols):
        assert img.contains(m.column(j))


@given(matrices(), st.lists(small, min_size=5, max_size=5))
def test_preimage_of_image_vectors(m, coeffs):
    x = tuple(coeffs[:m.cols])
    v = m.apply(x)
    y = solve_preimage(m, v)
    assert m.apply(y) == v


@given(matrices())
def test_subspace_canonical_form(m):
    # the same span given by different generators stores the same basis
    cols = [m.column(j) for j in range(m.cols)]
    a = Subspace(m.rows, cols)
    b = Subspace(m.rows, list(reversed(cols)) + [tuple(2 * x for x in c) for c in cols])
    assert a == b and a.basis == b.basis


@given(matrices(max_rows=4, max_cols=4), st.lists(small, min_size=4, max_size=4))
def test_membership_is_rank_test(m, v):
    s = Subspace(m.rows, [m.column(j) for j in range(m.cols)])
    v = tuple(v[:m.rows])
    grown = Matrix.from_columns(m.rows, list(s.basis) + [v])
    assert s.contains(v) == (rank(grown) == s.dim)


@settings(max_examples=50)
@given(matrices(max_rows=4, max_cols=4), st.integers(0, 10 ** 6))
def test_complements_are_direct_summands(m, seed):
    import random

    outer = Subspace.full(m.cols)
    inner = kernel_basis(m)
    for c in (complement_basis(inner, outer), random_complement(inner, outer, random.Random(seed))):
        assert inner.dim + c.dim == outer.dim
        assert Subspace(m.cols, inner.basis + c.basis) == outer


def test_inverse_roundtrip():
    m = Matrix.from_rows([[2, 1], [1, 1]])
    assert inverse(m) @ m == Matrix.identity(2)
    assert unit(3, 1) == (0, 1, 0)


def test_matrix_json_roundtrip():
    m = Matrix.from_rows([[Fraction(1, 2), -3], [0, Fraction(7, 9)]])
    assert m.to_json() == [["1/2", "-3"], ["0", "7/9"]]
    assert Matrix.from_json(m.to_json(), 2, 2) == m
