import math

import numpy as np
import pytest

from jacobi_logan.errors import DomainError, ParameterError
from jacobi_logan.hyperboloid import (logan_bound, params_for_dim, radial_fourier_transform,
                                      sphere_kernel_average, spherical_extremizer)
from jacobi_logan.jacobi import phi
from jacobi_logan.logan import build_extremizer
from jacobi_logan.transform import jacobi_transform


def test_parameter_map():
    assert (params_for_dim(2).jacobi.alpha, params_for_dim(2).jacobi.beta) == (0.0, -0.5)
    assert (params_for_dim(3).jacobi.alpha, params_for_dim(3).jacobi.beta) == (0.5, -0.5)
    assert params_for_dim(5).rho == 2.0
    for bad in (1, 0, 2.5, True):
        with pytest.raises(ParameterError):
            params_for_dim(bad)


@pytest.mark.parametrize("m", [1, 2, 5])
@pytest.mark.parametrize("tau", [0.5, 2.0])
def test_logan_bound_d3(m, tau):
    assert logan_bound(3, m, tau) == pytest.approx(m * math.pi / tau, rel=1e-12)


def test_logan_bound_increases():
    assert logan_bound(4, 2, 1.0) < logan_bound(4, 3, 1.0)


def test_spherical_extremizer_d3_closed_form():
    tau, m = 1.2, 2
    lam = np.array([0.4, 2.0, 7.0])
    base = (np.sin(lam * tau) / (lam * math.sinh(tau))) ** 2
    den = np.prod([1 - lam ** 2 * tau ** 2 / (k * math.pi) ** 2 for k in (1, 2)], axis=0)
    assert np.allclose(spherical_extremizer(3, m, tau, lam), base / den, rtol=1e-12)
    assert spherical_extremizer(3, m, tau, 0.0) == pytest.approx((tau / math.sinh(tau)) ** 2)
    assert abs(spherical_extremizer(3, m, tau, math.pi / tau)) < 1e-12


def test_direction_is_irrelevant_and_validated():
    a = spherical_extremizer(3, 1, 1.0, 2.0, xi=[1.0, 0.0, 0.0])
    b = spherical_extremizer(3, 1, 1.0, 2.0, xi=[0.0, 0.6, 0.8])
    assert a == b
    with pytest.raises(DomainError):
        spherical_extremizer(3, 1, 1.0, 2.0, xi=[1.0, 1.0, 0.0])
    with pytest.raises(DomainError):
        spherical_extremizer(3, 1, 1.0, 2.0, xi=[1.0, 0.0])


@pytest.mark.parametrize("d", [2, 3, 4, 7])
def test_sphere_average_reproduces_phi(d):
    # an evaluation route independent of the hypergeometric one
    p = params_for_dim(d).jacobi
    lam = np.array([0.0, 0.5, 3.0, 11.0])[:, None]
    t = np.array([0.0, 0.2, 1.0, 3.5])[None, :]
    assert np.allclose(sphere_kernel_average(d, lam, t), phi(p, lam, t), atol=1e-12)


def test_radial_transform_is_jacobi_transform():
    d = 3
    p = params_for_dim(d).jacobi
    g0 = lambda t: np.cos(t) * (1.5 - t)
    lam = np.array([0.3, 2.0, 6.0])
    got = radial_fourier_transform(d, g0, lam, 1.5)
    want = jacobi_transform(g0, p, lam, T=1.5)
    assert np.allclose(got, want, rtol=1e-10)


def test_hyperbolic_extremizer_orthogonality_and_support():
    from jacobi_logan.logan import verify_orthogonality
    p = params_for_dim(4).jacobi
    assert verify_orthogonality(p, 2, 1.0).passed
    from jacobi_logan.transform import paley_wiener_test
    # f_2 has mean zero, so J^-1 f_2 vanishes at 0 while its support is [0, 2]
    ext = build_extremizer(p, 2, 1.0)
    assert paley_wiener_test(ext.product, p, 2.0).passed
