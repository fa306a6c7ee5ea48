"""Smoke tests for the python bindings."""

import math

import pytest

weyl_lab = pytest.importorskip("weyl_lab")


def test_domain_and_grid():
    dom = weyl_lab.make_rectangle(1.0, 1.0)
    assert dom.area == pytest.approx(1.0)
    assert dom.perimeter == pytest.approx(4.0)
    grid = weyl_lab.build_grid(dom, 0.25)
    assert grid.nx == 3 and grid.ny == 3 and grid.size == 9
    assert weyl_lab.distance((0, 0), (3, 4)) == pytest.approx(5.0)


def test_exact_counting():
    freqs = weyl_lab.exact_rectangle_spectrum(1.0, 1.0, weyl_lab.parse_bc("dirichlet"), 25.0)
    assert weyl_lab.counting_function(freqs, 20.0) == 26


def test_disk_oracle():
    freqs = weyl_lab.exact_disk_spectrum(1.0, weyl_lab.parse_bc("dirichlet"), 4.0)
    assert freqs[0] == pytest.approx(2.40482556, abs=1e-7)
    assert len(freqs) == 3  # j_{1,1} enters with multiplicity 2


def test_weyl_coefficients():
    coeffs = weyl_lab.weyl_coefficients(weyl_lab.make_rectangle(1, 1), weyl_lab.parse_bc("dirichlet"))
    assert coeffs.c0 == pytest.approx(1.0 / (4 * math.pi))
    assert coeffs.c1 == pytest.approx(-1.0 / math.pi)


def test_eigendecompose_and_heat():
    dom = weyl_lab.make_rectangle(1.0, 1.0)
    grid = weyl_lab.build_grid(dom, 1.0 / 8)
    bc = weyl_lab.parse_bc("dirichlet")
    op = weyl_lab.assemble_laplacian(grid, bc)
    data = weyl_lab.eigendecompose(op)
    assert data.frequencies[0] == pytest.approx(math.pi * math.sqrt(2.0), rel=0.02)
    assert data.eigenvectors.shape == (49, 49)
    # kernel symmetry
    assert weyl_lab.heat_kernel(data, 0.1, 3, 11) == pytest.approx(
        weyl_lab.heat_kernel(data, 0.1, 11, 3)
    )


def test_potential_and_kato():
    V = weyl_lab.parse_potential("inverse_power(x0=0.0,y0=0.0,alpha=1.0,strength=1.0)")
    assert weyl_lab.evaluate_potential(V, (3.0, 4.0)) == pytest.approx(0.2)
    assert weyl_lab.kato_kernel(1.0, 2) == pytest.approx(math.log(3.0))


def test_mollifier_routes_agree():
    a = weyl_lab.smoothed_indicator_osc(0.1, 50.0, 10.0)
    b = weyl_lab.smoothed_indicator_conv(0.1, 50.0, 10.0)
    assert a == pytest.approx(1.0, abs=1e-6)
    assert abs(a - b) <= 1e-6


def test_duhamel_identity_small_grid():
    dom = weyl_lab.make_rectangle(1.0, 1.0)
    grid = weyl_lab.build_grid(dom, 1.0 / 8)
    bc = weyl_lab.parse_bc("dirichlet")
    V = weyl_lab.parse_potential("inverse_power(x0=0.5,y0=0.5,alpha=1.0,strength=1.0)")
    pair = weyl_lab.make_operator_pair(grid, bc, V)
    assert weyl_lab.duhamel_identity_residual(pair, 0.7) <= 1e-8 * 20.0
    res = weyl_lab.trace_perturbation_sum(pair, lambda f: f * f, lambda f: 2.0 * f)
    assert res["residual"] <= 1e-7 * max(1.0, abs(res["double_sum"]))


def test_dyadic_partition():
    vals = weyl_lab.dyadic_partition(1.0, 10)
    assert sum(vals) == pytest.approx(1.0, abs=1e-12)
