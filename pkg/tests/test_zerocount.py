import math

import numpy as np
import pytest

from conftest import PAIRS
from jacobi_logan.errors import ParameterError
from jacobi_logan.jacobi import COSINE, JacobiParams
from jacobi_logan.logan import derivatives_at_tau, p_polynomial
from jacobi_logan.zerocount import build_G, r_polynomial, star_sum, theta


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("gamma", [1.0, 2.0, math.pi])
def test_cosine_theta(n, gamma):
    assert theta(COSINE, n, gamma) == pytest.approx(n * math.pi / (2 * gamma), abs=1e-9)


def test_theta_round_trip():
    from jacobi_logan.zeros import lambda_zeros
    p = JacobiParams(1.0, 0.0)
    th = theta(p, 5, 3.0)
    assert lambda_zeros(p, th, 3).kth(3) == pytest.approx(3.0, rel=1e-10)


def test_r1_cosine():
    tau = 1.4
    r = r_polynomial(COSINE, 1, tau)
    t = np.linspace(0, tau, 9)
    assert np.allclose(r(t), 1 + np.cos(math.pi * t / tau), atol=1e-12)


@pytest.mark.parametrize("ab", PAIRS)
def test_star_sum(ab):
    for m in range(1, 7):
        assert star_sum(JacobiParams(*ab), m, 1.0) == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("ab", PAIRS)
@pytest.mark.parametrize("m", [1, 2, 3])
def test_r_multiplicity_and_shape(ab, m):
    p = JacobiParams(*ab)
    r = r_polynomial(p, m, 1.0)
    vals, scale = derivatives_at_tau(p, r, 2 * m, with_scale=True)
    rel = np.abs(vals) / scale
    assert np.all(rel[:2 * m] <= 1e-6)
    assert rel[2 * m] >= 1e-2
    t = np.linspace(0, 0.95, 200)
    assert r(0.0) > 0
    assert np.all(np.diff(r(t)) < 0)


def test_G2_cosine():
    gamma = 1.7
    c = build_G(COSINE, 2, gamma)
    assert c.theta == pytest.approx(math.pi / gamma, rel=1e-12)
    t = np.linspace(0, c.theta, 11)
    assert np.allclose(c(t), 1 + np.cos(gamma * t), atol=1e-12)
    assert c.passed


@pytest.mark.parametrize("ab", PAIRS)
def test_odd_G_is_p(ab):
    p = JacobiParams(*ab)
    c = build_G(p, 3, 2.0)
    g = p_polynomial(p, 2, c.theta)
    t = np.linspace(0, c.theta, 7)
    ratio = c(t[:-1]) / g(t[:-1])
    assert np.allclose(ratio, ratio[0], rtol=1e-12)
    assert ratio[0] > 0


@pytest.mark.parametrize("ab", PAIRS)
def test_certificates(ab):
    p = JacobiParams(*ab)
    for n in (1, 4):
        c = build_G(p, n, 2.0)
        assert c.passed, c.checks
        assert max(c.expansion.frequencies) <= 2.0 + 1e-9
        d = c.as_dict()
        assert d["expansion"]["frequencies"][0] >= 0


def test_n_validation():
    with pytest.raises(ParameterError):
        build_G(COSINE, 17, 1.0)
    with pytest.raises(ParameterError):
        theta(COSINE, 0, 1.0)
