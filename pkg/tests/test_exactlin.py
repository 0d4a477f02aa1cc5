"""Exact linear algebra: inverses, powers, Kronecker products, contractions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homhopf.catalog import catalog_ax1, catalog_cyclic
from homhopf.errors import DimensionMismatch, SingularMatrixError
from homhopf.exactlin import (
    alpha_power,
    apply_map,
    basis_vector,
    bilinear_apply,
    format_scalar,
    identity,
    kron,
    mat_compose,
    mat_inverse,
    matrix_from_rows,
    parse_scalar,
)

F = Fraction

rationals = st.fractions(
    min_value=-4, max_value=4, max_denominator=3
)


def square(n):
    return st.lists(
        st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(matrix_from_rows)


class TestScalars:
    def test_parse_roundtrip(self):
        for text in ["0", "-7", "3/4", "-22/7"]:
            assert format_scalar(parse_scalar(text)) == text

    def test_parse_reduces(self):
        assert parse_scalar("2/4") == F(1, 2)

    def test_zero_denominator(self):
        with pytest.raises(ValueError):
            parse_scalar("1/0")


class TestCompose:
    def test_identity(self):
        assert mat_compose(identity(2), identity(2)) == identity(2)

    def test_inverse_pair(self):
        m = matrix_from_rows([[1, 1], [0, 1]])
        assert mat_compose(m, mat_inverse(m)) == identity(2)
        assert mat_compose(mat_inverse(m), m) == identity(2)

    def test_ax1_beta_squares_to_identity(self):
        beta = catalog_ax1().hopf.alpha
        assert mat_compose(beta, beta) == identity(2)

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatch):
            mat_compose(identity(2), identity(3))


class TestInverse:
    def test_identity(self):
        assert mat_inverse(identity(3)) == identity(3)

    def test_unipotent(self):
        m = matrix_from_rows([[1, 1], [0, 1]])
        assert mat_inverse(m) == matrix_from_rows([[1, -1], [0, 1]])

    def test_singular_reports_rank(self):
        with pytest.raises(SingularMatrixError) as err:
            mat_inverse(matrix_from_rows([[0, 0], [0, 0]]))
        assert err.value.rank == 0

    @given(square(3))
    @settings(max_examples=40)
    def test_two_sided_inverse(self, m):
        try:
            inv = mat_inverse(m)
        except SingularMatrixError:
            return
        assert mat_compose(m, inv) == identity(3)
        assert mat_compose(inv, m) == identity(3)


class TestAlphaPower:
    def test_ax1_beta_squared(self):
        beta = catalog_ax1().hopf.alpha
        assert alpha_power(beta, 2) == identity(2)

    def test_zeroth_power(self):
        m = matrix_from_rows([[2, 1], [1, 1]])
        assert alpha_power(m, 0) == identity(2)

    def test_cyclic_inversion_is_involutive(self):
        phi = catalog_cyclic(3).hopf.alpha
        assert alpha_power(phi, -1) == phi
        assert mat_compose(phi, phi) == identity(3)

    def test_negative_power_of_singular(self):
        with pytest.raises(SingularMatrixError):
            alpha_power(matrix_from_rows([[1, 0], [0, 0]]), -1)

    @given(square(2), st.integers(-7, 7), st.integers(-7, 7))
    @settings(max_examples=40)
    def test_additivity(self, m, j, k):
        try:
            mat_inverse(m)
        except SingularMatrixError:
            return
        assert alpha_power(m, j + k) == mat_compose(alpha_power(m, j), alpha_power(m, k))


class TestKron:
    def test_identities(self):
        assert kron(identity(2), identity(2)) == identity(4)

    def test_diagonal(self):
        d = matrix_from_rows([[1, 0], [0, -1]])
        assert kron(d, identity(2)) == matrix_from_rows(
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]
        )

    @given(square(2), square(2), square(2), square(2))
    @settings(max_examples=30)
    def test_mixed_product(self, a, b, c, d):
        assert mat_compose(kron(a, b), kron(c, d)) == kron(
            mat_compose(a, c), mat_compose(b, d)
        )

    @given(square(2), square(2), square(2))
    @settings(max_examples=30)
    def test_associative_under_flattening(self, a, b, c):
        assert kron(kron(a, b), c) == kron(a, kron(b, c))


class TestBilinear:
    def test_square_zero_element(self):
        ax1 = catalog_ax1().hopf
        x = basis_vector(2, 1)
        assert bilinear_apply(ax1.mul, x, x) == (F(0), F(0))

    def test_unit_acts_by_alpha(self):
        ax1 = catalog_ax1().hopf
        for i in range(2):
            v = basis_vector(2, i)
            assert bilinear_apply(ax1.mul, ax1.unit, v) == apply_map(ax1.alpha, v)
            assert bilinear_apply(ax1.mul, v, ax1.unit) == apply_map(ax1.alpha, v)

    def test_cyclic_product_closed_form(self):
        c3 = catalog_cyclic(3).hopf
        g1 = basis_vector(3, 1)
        assert bilinear_apply(c3.mul, g1, g1) == g1

    def test_shape_mismatch(self):
        ax1 = catalog_ax1().hopf
        with pytest.raises(DimensionMismatch):
            bilinear_apply(ax1.mul, basis_vector(3, 0), basis_vector(2, 0))
