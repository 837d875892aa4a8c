"""Functions with an n-fold zero at the earliest time a spectrum in [0, gamma] allows.

For n = 2m-1 the certificate is p_m at tau = t_m(gamma), where lambda_m(tau) = gamma.
For n = 2m it is phi_0 r_m at tau = t_m*(gamma), where

    r_m(t) = 1 + sum_i B_i* psi_{lambda_i*}(t),   B_i* = A_i*/Psi_i''(tau),
    Psi_i''(tau) = -lambda_i*^2 psi_{lambda_i*}(tau),

with A_i* the partial-fraction coefficients at the zeros lambda_i*(tau) of d/dt psi.
Both are non-negative combinations of phi_lambda with lambda <= gamma.
"""
from dataclasses import dataclass, field
import math
import warnings

import numpy as np

from .errors import DomainError, ParameterError, SignViolationError
from .jacobi import phi, psi
from .logan import (BasisKind, EigenExpansion, _check_order, _check_tau, derivatives_at_tau,
                    p_polynomial, partial_fraction_coefficients)
from .zeros import lambda_star_zeros, t_of_gamma

MAX_N = 16
VANISH_TOL = 1e-6
NONVANISH_TOL = 1e-2


def theta(p, n, gamma):
    """theta_{n,gamma}: t_m(gamma) for n = 2m-1 and t_m*(gamma) for n = 2m."""
    if int(n) != n or n < 1:
        raise ParameterError("n must be a positive integer")
    if not gamma > 0:
        raise DomainError("gamma must be positive")
    m = (int(n) + 1) // 2
    return t_of_gamma(p, gamma, m, starred=(n % 2 == 0))


def r_polynomial(p, m, tau):
    """r_m = 1 + sum B_i* psi_{lambda_i*(tau)}; every B_i* must be positive."""
    m, tau = _check_order(m), _check_tau(tau)
    lam = lambda_star_zeros(p, tau, m).zeros
    a = partial_fraction_coefficients(lam)
    second = -lam ** 2 * psi(p, lam, tau)
    b = a / second
    if np.any(b <= 0):
        i = int(np.nonzero(b <= 0)[0][0])
        raise SignViolationError(f"coefficient B*_{i + 1} = {b[i]:.3e} is not positive")
    return EigenExpansion(b, lam, BasisKind.PSI_PLUS_CONST, tau, p)


def star_sum(p, m, tau):
    """sum_i A_i*/lambda_i*^2, which is 1 (the partial fractions at lambda = 0)."""
    lam = lambda_star_zeros(p, _check_tau(tau), _check_order(m)).zeros
    return float(np.sum(partial_fraction_coefficients(lam) / lam ** 2))


@dataclass
class ZeroIntervalCert:
    """G_n with an n-fold zero at theta and a spectrum inside [0, gamma]."""

    n: int
    gamma: float
    theta: float
    expansion: EigenExpansion = field(repr=False)
    multiplicity_report: dict = field(repr=False)
    checks: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(self.checks.values())

    def __call__(self, t):
        return self.expansion(t)

    def as_dict(self):
        return {"n": self.n, "gamma": self.gamma, "theta": self.theta,
                "expansion": self.expansion.as_dict(),
                "multiplicity": self.multiplicity_report,
                "checks": dict(self.checks), "pass": self.passed}


def _expansions(p, n, tau):
    """G_n as a phi expansion, and G_n/phi_0 as a psi expansion (same zeros, no common decay)."""
    m = (n + 1) // 2
    if n % 2:
        g = p_polynomial(p, m, tau)
        return g, EigenExpansion(g.coefficients, g.frequencies, BasisKind.PSI, tau, p)
    r = r_polynomial(p, m, tau)
    # phi_0 r_m = phi_0 + sum B_i* phi_{lambda_i*}
    g = EigenExpansion(np.concatenate(([1.0], r.coefficients)),
                       np.concatenate(([0.0], r.frequencies)), BasisKind.PHI, tau, p)
    return g, r


def _near_values(p, h, t, n, extra=12):
    """Taylor polynomial of h about its n-fold zero, from order n on.

    Orders below n are certified to vanish separately; what is left of them is
    rounding, which would otherwise scatter the n-fold zero into a cluster of
    radius about eps^(1/n) around tau.
    """
    order = n + extra
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        d = derivatives_at_tau(p, h, order)
    d[:n] = 0.0
    x = np.asarray(t, dtype=float) - h.tau
    fact = np.array([math.factorial(k) for k in range(order + 1)], dtype=float)
    return np.polyval((d / fact)[::-1], x)


def shape_checks(p, g, h, n, samples=400):
    """Is g positive and strictly decreasing on [0, tau), given its n-fold zero at tau?

    g is the phi expansion and h = g/phi_0 its psi form. Far from tau both are
    judged by direct evaluation; within a short distance, where g drops below
    the rounding level of the sum, by the Taylor polynomial of h from order n on.
    """
    th = g.tau
    ts = th * np.arange(1, samples + 1) / (samples + 1)
    nu = max(float(np.max(h.frequencies)), 1.0 / th)
    near = min(0.05 * th, 0.1 / nu)
    far = np.concatenate(([0.0], ts[ts < th - near]))
    close = np.linspace(th - near, th * (1 - 1e-6), 50)
    taylor = _near_values(p, h, close, n)
    return {
        "positive_before_theta": bool(np.all(g(far) > 0) and np.all(taylor > 0)),
        "decreasing": bool(np.all(g.derivative(ts[ts < th - near]) < 0)
                           and np.all(np.diff(taylor * phi(p, 0.0, close)) < 0)),
    }


def build_G(p, n, gamma, samples=400):
    """Build and certify G_n: positivity, monotonicity, spectrum and the n-fold zero at theta.

    The multiplicity is read off G_n/phi_0, whose derivatives at theta are not
    dominated by the common decay of all terms. Within a short distance of
    theta, where G_n falls below the rounding level of the direct sum, the sign
    is taken from the analytic Taylor polynomial of G_n/phi_0 at theta.
    """
    if int(n) != n or not 1 <= n <= MAX_N:
        raise ParameterError(f"n must be an integer in 1..{MAX_N}")
    n = int(n)
    th = theta(p, n, gamma)
    g, h = _expansions(p, n, th)
    vals, scale = derivatives_at_tau(p, h, n, with_scale=True)
    rel = np.abs(vals) / scale
    report = {"orders": list(range(n + 1)), "values": [float(v) for v in vals],
              "scales": [float(s) for s in scale], "relative": [float(r) for r in rel]}
    checks = {
        "g0_positive": bool(g(0.0) > 0),
        "coefficients_positive": bool(np.all(g.coefficients > 0)),
        "spectrum_inside": bool(np.max(g.frequencies) <= gamma + 1e-9),
    }
    checks.update(shape_checks(p, g, h, n, samples))
    checks["orders_vanish"] = bool(np.all(rel[:n] <= VANISH_TOL))
    checks["next_order_nonzero"] = bool(rel[n] >= NONVANISH_TOL)
    return ZeroIntervalCert(n, float(gamma), th, g, report, checks)
