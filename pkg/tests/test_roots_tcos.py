import numpy as np
import pytest

from oproot.matrixcore import window_residual
from oproot.operators import tcos_matrix
from oproot.roots.tcos import chebyshev_u, tcos_root


def test_chebyshev_u_values():
    x = np.array([-0.7, 0.0, 0.4])
    th = np.arccos(x)
    u = chebyshev_u(6, x)
    for n in range(6):
        np.testing.assert_allclose(u[n], np.sin((n + 1) * th) / np.sin(th), atol=1e-13)


def test_symmetric_exactly():
    for branch in ("principal", "flipped"):
        b = tcos_root(16, branch, 1024)
        assert np.array_equal(b, b.T)


def test_identity_hook_reproduces_tcos():
    b = tcos_root(32, "identity", 4096)
    assert np.max(np.abs(b - tcos_matrix(32))) <= 1e-8


def test_squares_to_tcos_in_window():
    n = 32
    for branch in ("principal", "flipped"):
        b = tcos_root(n, branch, 4096)
        assert window_residual(b @ b, tcos_matrix(n), n // 4) <= 1e-2


def test_two_branches_are_different_roots():
    a = tcos_root(16, "principal", 2048)
    b = tcos_root(16, "flipped", 2048)
    assert np.max(np.abs(a - b)) > 0.1
    # only the negative half-line changes, so the real parts agree
    np.testing.assert_allclose(a.real, b.real, atol=1e-14)


def test_custom_phi_overrides_branch():
    b = tcos_root(8, phi=lambda x: np.ones_like(x) + 0j, quad_nodes=512)
    np.testing.assert_allclose(b, np.eye(8), atol=1e-12)


def test_node_budget():
    with pytest.raises(ValueError):
        tcos_root(32, "principal", 100)
    # a jump away from the split point defeats the doubling check
    with pytest.raises(ValueError, match="doubling"):
        tcos_root(8, phi=lambda x: np.where(x > 0.3, 1.0, 0.0) + 0j, quad_nodes=256)
