"""Radial harmonic analysis on the hyperboloid H^d.

Radial functions on H^d transform by the Jacobi transform with
(alpha, beta) = (d/2 - 1, -1/2), so the Logan problem there is the Jacobi one
in disguise. The Fourier kernel [x, xi']^(-(d-1)/2 - i lambda) is also
available averaged over the sphere, which gives an evaluation route for
phi_lambda independent of the hypergeometric one.
"""
from dataclasses import dataclass
import math

import numpy as np
from scipy.special import roots_jacobi

from .errors import DomainError, ParameterError
from .jacobi import JacobiParams
from .logan import ExtremizerKind, build_extremizer
from .zeros import lambda_zeros


@dataclass(frozen=True)
class HyperboloidParams:
    d: int

    def __post_init__(self):
        if isinstance(self.d, bool) or int(self.d) != self.d or self.d < 2:
            raise ParameterError(f"dimension must be an integer >= 2, got {self.d!r}")
        object.__setattr__(self, "d", int(self.d))

    @property
    def jacobi(self):
        return JacobiParams(self.d / 2 - 1, -0.5)

    @property
    def rho(self):
        return (self.d - 1) / 2


def params_for_dim(d):
    return HyperboloidParams(d)


def logan_bound(d, m, tau):
    """L_m(tau) on the hyperboloid: the m-th zero of lambda -> phi_lambda^(d/2-1,-1/2)(tau)."""
    return lambda_zeros(params_for_dim(d).jacobi, tau, m).kth(m)


def spherical_extremizer(d, m, tau, lam, xi=None):
    """f_m(y) at y = (lambda, xi); the value does not depend on the direction xi."""
    if xi is not None:
        xi = np.asarray(xi, dtype=float)
        if xi.shape[-1:] != (d,) or not np.allclose(np.linalg.norm(xi, axis=-1), 1.0):
            raise DomainError(f"xi must be a unit vector in R^{d}")
    ext = build_extremizer(params_for_dim(d).jacobi, m, tau, ExtremizerKind.SMALL_F_M)
    return ext(lam)


def sphere_kernel_average(d, lam, t, nodes=None):
    """Average over xi in S^(d-1) of [x, xi']^(-(d-1)/2 - i lambda) at distance t from o.

    With u the cosine between the directions of x and xi, [x, xi'] = cosh t - u sinh t
    and u has density c_d (1-u^2)^((d-3)/2), c_d = 1/B(1/2, (d-1)/2). Putting
    [x, xi'] = e^s, s in [-t, t], the powers of e^s cancel and the average becomes

        c_d 2^a sinh(t)^(2-d) int_{-t}^{t} e^(-i lambda s) (cosh t - cosh s)^a ds,

    a = (d-3)/2. After s = t x the weight (1-x^2)^a is taken by Gauss-Jacobi
    nodes and the rest is smooth; the node count follows the oscillation lambda t.
    """
    hp = params_for_dim(d)
    a = (hp.d - 3) / 2
    lam_b, t_b = np.broadcast_arrays(np.asarray(lam, dtype=float), np.asarray(t, dtype=float))
    if nodes is None:
        nodes = int(0.6 * float(np.max(lam_b * t_b, initial=0.0))) + 60
    x, w = roots_jacobi(nodes, a, a)
    if np.any(t_b < 0):
        raise DomainError("t must be non-negative")
    tt = np.where(t_b > 0, t_b, 1.0)[..., None]
    # cosh t - cosh(t x) = 2 sinh(t(1+x)/2) sinh(t(1-x)/2), divided by t^2 (1-x^2)
    smooth = (2 * np.sinh(tt * (1 + x) / 2) * np.sinh(tt * (1 - x) / 2)) / (tt ** 2 * (1 - x * x))
    integral = np.sum(w * np.cos(lam_b[..., None] * tt * x) * smooth ** a, axis=-1)
    c_d = math.gamma(hp.d / 2) / (math.gamma(0.5) * math.gamma((hp.d - 1) / 2))
    tt = tt[..., 0]
    val = c_d * 2 ** a * np.sinh(tt) ** (2 - hp.d) * tt ** (2 * a + 1) * integral
    out = np.where(t_b > 0, val, 1.0)
    return float(out) if out.ndim == 0 else out


def radial_fourier_transform(d, g0, lam, T, panels=64, nodes=None):
    """Fourier transform on H^d of the radial function g(x) = g0(d(o, x)), supported in B_T.

    Integrates g0 against the sphere-averaged kernel in geodesic polar
    coordinates, d eta = 2^(d-1) sinh^(d-1) t dt d omega.
    """
    hp = params_for_dim(d)
    x, w = np.polynomial.legendre.leggauss(15)
    edges = np.linspace(0.0, float(T), panels + 1)
    mid, half = 0.5 * (edges[1:] + edges[:-1]), 0.5 * np.diff(edges)
    ts = (mid[:, None] + half[:, None] * x).ravel()
    wt = (half[:, None] * w).ravel() * 2.0 ** (hp.d - 1) * np.sinh(ts) ** (hp.d - 1)
    gv = np.asarray(g0(ts), dtype=float)
    lam = np.atleast_1d(np.asarray(lam, dtype=float))
    ker = sphere_kernel_average(hp.d, lam[:, None], ts[None, :], nodes)
    out = ker @ (gv * wt)
    return float(out[0]) if out.size == 1 else out

