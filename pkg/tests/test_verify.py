import json
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oproot.operators import cesaro_matrix, shift_pow_matrix
from oproot.roots.cesaro import cesaro_root_closed
from oproot.series import PowerSeries
from oproot.verify import (
    BoundaryProfile,
    Check,
    VerifyReport,
    boundary_min_re,
    boundary_re,
    boundary_report,
    boundary_value,
    cesaro_eigencheck,
    convergence_sweep,
    direct_value,
    disc_image_points,
    figure_report,
    figure_series_degree,
    figure_symbol,
    no_root_double_zero_check,
    polar_grid,
    square_residual_report,
    unbounded_growth_demo,
    winding_number,
)


def test_check_and_report_plumbing():
    c = Check("x", 1.0, "<=", 2.0)
    assert c.passed and "ok" in c.describe()
    assert not Check("x", float("nan"), "<=", 2.0).passed
    with pytest.raises(ValueError):
        Check("x", 1.0, "~", 2.0)
    rep = VerifyReport("demo", {"a": 1})
    rep.check("m", 3.0, ">", 1.0)
    d = json.loads(rep.to_json())
    assert d["schema"] == 1 and d["pass"] is True and d["tolerance"] == 1.0


def test_square_residual_examples():
    rep = square_residual_report(cesaro_root_closed(32), cesaro_matrix(32), 32)
    assert rep.passed and rep.metrics["residual"] <= 1e-8
    rep = square_residual_report(np.eye(5), np.eye(5), 3)
    assert rep.metrics["residual"] == 0.0
    rep = square_residual_report(shift_pow_matrix(64, 1), shift_pow_matrix(64, 2), 60)
    assert rep.metrics["residual"] == 0.0 and rep.passed
    with pytest.raises(ValueError):
        square_residual_report(np.eye(3), np.eye(4), 2)


def test_square_residual_flags_non_root():
    rep = square_residual_report(np.eye(4), 2 * np.eye(4), 4)
    assert not rep.passed


def test_convergence_sweeps():
    assert convergence_sweep("volterra-abel", [64, 128, 256, 512]).passed
    assert convergence_sweep("cesaro-series", [1000, 10_000, 100_000]).passed
    rep = convergence_sweep("compressed-shift", [64, 256, 1024])
    assert rep.passed
    with pytest.raises(KeyError):
        convergence_sweep("nope", [1, 2])
    with pytest.raises(ValueError):
        convergence_sweep("volterra-abel", [64])


def test_boundary_spot_values():
    assert boundary_re("one_plus_z_theta", math.pi) == pytest.approx(1.0, abs=1e-12)
    assert boundary_re("z_theta_fifth_root", math.pi) == pytest.approx(2**0.2 - 1, abs=1e-12)


def test_boundary_profile_excludes_zero():
    with pytest.raises(ValueError):
        BoundaryProfile("one_plus_z_theta", np.array([0.0, 1.0]))
    with pytest.raises(ValueError):
        BoundaryProfile("bogus")
    assert BoundaryProfile("one_plus_z_theta").theta_grid.size == 100_000


def test_one_plus_theta_profile_positive():
    assert boundary_min_re(BoundaryProfile("one_plus_z_theta")) > 0
    assert boundary_report("one_plus_z_theta").passed


def test_one_plus_theta_profile_symmetric():
    th = np.linspace(0.01, math.pi - 0.01, 100)
    np.testing.assert_allclose(
        boundary_re("one_plus_z_theta", th), boundary_re("one_plus_z_theta", 2 * math.pi - th), atol=1e-12
    )


@pytest.mark.parametrize("kind", ["one_plus_z_theta", "z_theta_fifth_root"])
def test_boundary_formula_reflection(kind):
    # real Taylor coefficients: f(e^(-it)) = conj f(e^(it))
    th = np.linspace(0.01, math.pi - 0.01, 100)
    np.testing.assert_allclose(boundary_value(kind, 2 * math.pi - th), np.conj(boundary_value(kind, th)), atol=1e-12)


@pytest.mark.parametrize("f_id, kind", [("fig1", "z_theta_fifth_root"), ("fig2", "one_plus_z_theta")])
def test_boundary_formula_is_radial_limit(f_id, kind):
    th = np.array([0.3, 0.718, 1.0, 2.5, math.pi, 4.0, 5.9])
    inner = direct_value(f_id, (1 - 1e-7) * np.exp(1j * th))
    np.testing.assert_allclose(inner.real, boundary_re(kind, th), atol=1e-5)


def test_fifth_root_profile_real_part_changes_sign():
    # the closed form and a direct evaluation just inside the circle agree that
    # Re f < 0 near theta = 0.718, although f has no zeros in the disc
    prof = BoundaryProfile("z_theta_fifth_root")
    assert boundary_min_re(prof) == pytest.approx(-0.1532, abs=1e-3)
    assert direct_value("fig1", 0.9999 * np.exp(0.718j)).real < -0.15
    for r in (0.9, 0.99, 0.999):
        assert winding_number("fig1", r) == 0
        assert winding_number("fig2", r) == 0


def test_disc_points_at_origin():
    assert disc_image_points("fig2", 16, 16)[0, 0] == pytest.approx(1 + math.exp(-1))
    assert disc_image_points("fig1", 16, 16)[0, 0] == pytest.approx(math.exp(-1))
    with pytest.raises(ValueError):
        polar_grid(8, 16)


@pytest.mark.parametrize("f_id", ["fig1", "fig2"])
def test_series_matches_direct_evaluation(f_id):
    z = polar_grid(32, 48)
    np.testing.assert_allclose(disc_image_points(f_id, 32, 48), direct_value(f_id, z), atol=1e-9)


@pytest.mark.parametrize("f_id", ["fig1", "fig2"])
def test_disc_points_radially_continuous(f_id):
    radial = 64
    pts = disc_image_points(f_id, radial, 24)
    coeffs = figure_symbol(f_id, figure_series_degree()).coeffs
    n = np.arange(coeffs.size)
    dr = 0.995 / (radial - 1)
    deriv = np.sum(n * np.abs(coeffs) * 0.995 ** np.maximum(n - 1, 0))
    assert np.max(np.abs(np.diff(pts, axis=0))) <= 10 * dr * deriv


def test_disc_minimum_moduli():
    assert figure_report("fig2").passed
    rep = figure_report("fig1")
    # not below the boundary infimum of |f| (0.021): f is zero-free
    assert rep.metrics["min_modulus"] > 0.02


def test_reports_reproducible():
    a = figure_report("fig2", 32, 32).to_json()
    b = figure_report("fig2", 32, 32).to_json()
    assert a == b
    assert cesaro_eigencheck(0.3, 64).to_json() == cesaro_eigencheck(0.3, 64).to_json()


def test_eigencheck_examples():
    assert cesaro_eigencheck(0.5, 64).metrics["relative_residual"] <= 1e-12
    assert cesaro_eigencheck(0.9, 64, 1e-10).passed
    assert cesaro_eigencheck(0.3, 512, 1e-3).passed
    with pytest.raises(ValueError):
        cesaro_eigencheck(1, 8)
    with pytest.raises(ValueError):
        cesaro_eigencheck(1.5, 8)


def test_eigenvector_by_hand():
    v = np.zeros(6)
    v[:2] = [1, -1]
    c = cesaro_matrix(6).real
    np.testing.assert_allclose(v - c.T @ v, 0.5 * v, atol=1e-15)


@given(st.floats(-0.9, 0.6), st.floats(-0.3, 0.3))
def test_eigencheck_converges_with_n(re, im):
    w = complex(re, im)
    a = cesaro_eigencheck(w, 64).metrics["relative_residual"]
    b = cesaro_eigencheck(w, 256).metrics["relative_residual"]
    assert b <= a + 1e-12


def test_unbounded_growth():
    rep = unbounded_growth_demo([64, 128, 256])
    assert rep.passed
    assert rep.metrics["mixed_norm[64]"] >= 8
    assert rep.metrics["mixed_norm[64]"] == pytest.approx(2 * math.sqrt(64), rel=0.05)
    with pytest.raises(ValueError):
        unbounded_growth_demo([128, 64])


def test_no_root_examples():
    z2, z3 = PowerSeries.monomial(2), PowerSeries.monomial(3)
    assert no_root_double_zero_check(z2, [PowerSeries.constant(1)]).passed
    assert no_root_double_zero_check(z3, [PowerSeries.poly([1, 1])]).passed
    assert no_root_double_zero_check(z2, [PowerSeries.constant(0)]).passed
    with pytest.raises(ValueError):
        no_root_double_zero_check(PowerSeries.monomial(1), [PowerSeries.constant(1)])


@given(st.lists(st.floats(-3, 3), min_size=1, max_size=6), st.integers(2, 5))
def test_no_root_any_h(h, order):
    assert no_root_double_zero_check(PowerSeries.monomial(order), [PowerSeries(h)]).passed
