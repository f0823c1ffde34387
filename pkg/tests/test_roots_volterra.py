import math

import numpy as np
import pytest

from oproot.matrixcore import op_norm_est
from oproot.operators import cayley_volterra, volterra_matrix
from oproot.roots.volterra import (
    compressed_shift_root,
    compressed_shift_root_symbol,
    compressed_shift_symbol,
    volterra_abel_root,
)
from oproot.series import series_mul


def nodes(m):
    return (np.arange(m) + 0.5) / m


@pytest.mark.parametrize("m", [16, 64, 256])
def test_abel_of_constant(m):
    y = volterra_abel_root(m).real
    # the kernel is integrated exactly cell by cell, so a constant is reproduced exactly
    err = np.max(np.abs(y @ np.ones(m) - 2 / math.sqrt(math.pi) * np.sqrt(nodes(m))))
    assert err <= 2 * math.sqrt(1 / m)
    assert err <= 1e-12


def test_abel_twice_is_integration():
    m = 512
    y = volterra_abel_root(m).real
    assert np.max(np.abs(y @ (y @ np.ones(m)) - nodes(m))) <= 1e-2


def test_abel_square_approaches_volterra():
    res = []
    for m in (64, 128, 256, 512):
        y = volterra_abel_root(m)
        res.append(np.linalg.norm(y @ y - volterra_matrix(m), 2))
    assert all(b < a for a, b in zip(res, res[1:]))
    # first order in h: halving per doubling
    for a, b in zip(res, res[1:]):
        assert 0.45 <= b / a <= 0.55


def test_abel_lower_triangular_toeplitz():
    y = volterra_abel_root(32).real
    assert np.allclose(np.triu(y, 1), 0)
    for k in range(5):
        d = np.diag(y, -k)
        assert np.allclose(d, d[0])
    with pytest.raises(ValueError):
        volterra_abel_root(1)


def test_compressed_symbol():
    psi = compressed_shift_root_symbol(64)
    assert psi.coeffs[0] == pytest.approx(math.exp(-0.5))
    assert psi.coeffs[0] == pytest.approx(0.60653, abs=1e-5)
    f = compressed_shift_symbol(64)
    assert f.coeffs[0] == pytest.approx(math.exp(-1))
    assert (series_mul(psi, psi, 64) - f).max_abs(64) <= 1e-12
    # f(0) = Theta(0); the z coefficient is 1 + Theta'(0) - Theta(0)/5
    assert f.coeffs[1] == pytest.approx(1 - 2 * math.exp(-1) - math.exp(-1) / 5)


def test_compressed_root_of_zero_matrix():
    r = compressed_shift_root(np.zeros((5, 5)), 10, cesaro_avg=False)
    np.testing.assert_allclose(r, math.exp(-0.5) * np.eye(5), atol=1e-15)


def test_compressed_root_precondition():
    with pytest.raises(ValueError):
        compressed_shift_root(2 * np.eye(3), 10)
    with pytest.raises(ValueError):
        compressed_shift_root(np.eye(3), 0)


def test_compressed_root_residual_decreases():
    m = cayley_volterra(volterra_matrix(128))
    assert op_norm_est(m) <= 1.05
    res = []
    for k in (32, 128, 512):
        r = compressed_shift_root(m, k)
        res.append(np.linalg.norm(r @ r - m, 2))
    assert res[0] > res[1] > res[2]
    # the root is a polynomial in M, so it commutes with M to rounding
    assert np.linalg.norm(r @ m - m @ r, 2) <= 1e-12


def test_fejer_weights_are_partial_sum_means():
    m = cayley_volterra(volterra_matrix(16))
    k = 12
    means = np.zeros((16, 16), dtype=complex)
    for j in range(1, k + 1):
        means += compressed_shift_root(m, j, cesaro_avg=False)
    np.testing.assert_allclose(compressed_shift_root(m, k), means / k, atol=1e-13)
