import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from oproot.matrixcore import (
    Window,
    as_matrix,
    binomial_involution_matrix,
    binomial_matrix_int,
    mat_product,
    matrix_from_csv,
    matrix_to_csv,
    op_norm_est,
    read_matrix_csv,
    window_residual,
    write_matrix_csv,
)
from oproot.operators import cesaro_matrix, shift_pow_matrix

finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


def complex_mats(n):
    return arrays(np.float64, (2, n, n), elements=finite).map(lambda a: a[0] + 1j * a[1])


def test_as_matrix_read_only_and_finite():
    m = as_matrix([[1, 2], [3, 4]])
    assert m.dtype == np.complex128
    with pytest.raises(ValueError):
        m[0, 0] = 5
    with pytest.raises(ValueError):
        as_matrix([[np.nan]])
    with pytest.raises(ValueError):
        as_matrix([1, 2, 3])


def test_product_examples():
    np.testing.assert_array_equal(mat_product(np.eye(3), np.eye(3)), np.eye(3))
    s = shift_pow_matrix(4, 1)
    np.testing.assert_array_equal(mat_product(s, s), shift_pow_matrix(4, 2))
    with pytest.raises(ValueError):
        mat_product(np.eye(2), np.eye(3))


@given(complex_mats(6), complex_mats(6))
def test_lower_triangular_product_diagonal(a, b):
    a, b = np.tril(a), np.tril(b)
    p = mat_product(a, b)
    assert np.allclose(np.triu(p, 1), 0)
    np.testing.assert_allclose(np.diag(p), np.diag(a) * np.diag(b), rtol=1e-13, atol=1e-13)
    # truncation commutes with the product for lower-triangular factors
    for k in range(1, 7):
        np.testing.assert_allclose(p[:k, :k], a[:k, :k] @ b[:k, :k], atol=1e-12)


@given(complex_mats(5), complex_mats(5), complex_mats(5))
def test_product_associative(a, b, c):
    lhs = mat_product(mat_product(a, b), c)
    rhs = mat_product(a, mat_product(b, c))
    scale = max(np.linalg.norm(a, 2) * np.linalg.norm(b, 2) * np.linalg.norm(c, 2), 1e-300)
    assert np.linalg.norm(lhs - rhs, 2) <= 1e-10 * scale


def test_op_norm_examples():
    assert op_norm_est(np.zeros((4, 4))) == 0.0
    assert op_norm_est(np.eye(7)) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ValueError):
        op_norm_est(np.eye(2), iters=0)


def test_op_norm_cesaro_complement():
    # power iteration approaches the largest singular value from below;
    # the section of I - C has norm 0.998 at N = 256, below 1 - 1e-3
    m = np.eye(256) - cesaro_matrix(256)
    exact = np.linalg.norm(m, 2)
    est = op_norm_est(m)
    assert 0.99 < est <= 1.0
    assert est <= exact + 1e-12
    assert exact - est <= 1e-3


@given(complex_mats(6))
def test_op_norm_bounds_columns(a):
    est = op_norm_est(a)
    assert est >= np.max(np.linalg.norm(a, axis=0)) - 1e-12
    assert est <= np.linalg.norm(a, 2) * (1 + 1e-12) + 1e-12


def test_window_residual_examples():
    a = np.arange(9.0).reshape(3, 3)
    assert window_residual(a, a, Window(3)) == 0.0
    assert window_residual(np.eye(3), 2 * np.eye(3), 2) == pytest.approx(1.0)
    assert window_residual(np.eye(3), 0, 2) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        window_residual(np.eye(3), np.eye(3), 4)
    with pytest.raises(ValueError):
        Window(0)


def test_binomial_involution_examples():
    b = binomial_involution_matrix(3).real
    np.testing.assert_array_equal(b, [[1, 0, 0], [1, -1, 0], [1, -2, 1]])
    assert np.all(binomial_involution_matrix(10)[:, 0] == 1)
    b6 = binomial_involution_matrix(6)
    np.testing.assert_array_equal(b6 @ b6, np.eye(6))


@pytest.mark.parametrize("n", [1, 8, 20, 32])
def test_binomial_involution_squares_to_identity(n):
    b = binomial_involution_matrix(n)
    np.testing.assert_allclose(b @ b, np.eye(n), atol=1e-9)
    # the exact-integer square is the identity with no rounding at all
    bi = binomial_matrix_int(n)
    sq = [[sum(bi[i][k] * bi[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert sq == [[int(i == j) for j in range(n)] for i in range(n)]


def test_binomial_entries_exact_beyond_53_bits():
    b = binomial_involution_matrix(64)
    assert b[63, 31].real == float(-math.comb(63, 31))


@given(complex_mats(4))
def test_csv_round_trip(a):
    back = matrix_from_csv(matrix_to_csv(a))
    np.testing.assert_array_equal(back, a)


def test_csv_format_and_file(tmp_path):
    text = matrix_to_csv(np.array([[1 + 2j, -0.5]]))
    assert text == "1+2i,-0.5+0i\n"
    path = tmp_path / "m.csv"
    write_matrix_csv(np.eye(2), path)
    np.testing.assert_array_equal(read_matrix_csv(path), np.eye(2))
