"""Logan extremizers f_m, F_m and the eigenfunction polynomial p_m behind them.

F_m(lambda) = phi_lambda(tau) / prod_{k<=m} (1 - lambda^2/lambda_k(tau)^2) is the
Jacobi transform of p_m restricted to [0, tau], where

    p_m(t) = sum_i B_i phi_{lambda_i}(t),   B_i = -A_i / (Delta(tau) phi'_{lambda_i}(tau)),

and the A_i are the partial-fraction coefficients of 1/prod(1 - lambda^2/lambda_i^2).
f_m = phi_lambda(tau) F_m is the extremizer itself.

Also here: derivatives of eigenfunction expansions at tau through the
Sturm-Liouville Taylor recurrence, the sign-change functional Lambda_m, the
orthogonality report and a zero counter for Chebyshev-system checks.
"""
from dataclasses import dataclass, field
from functools import cached_property
import enum
import math
import warnings

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .errors import DomainError, ParameterError, SignViolationError
from .jacobi import T_MAX, JacobiParams, phi, phi_dt, psi, psi_dt, weight_delta
from .transform import DEFAULT_QUAD, SpectralProduct, integrate_dsigma, spectral_weight_safe
from .zeros import lambda_star_zeros, lambda_zeros, mu_zeros

MAX_ORDER = 20


class ExtremizerKind(enum.Enum):
    F_M = "F_m"
    SMALL_F_M = "f_m"


class BasisKind(enum.Enum):
    PHI = "phi"
    PSI = "psi"
    PSI_SHIFTED = "psi_shifted"
    PSI_PLUS_CONST = "psi_plus_const"


def _check_order(m):
    if int(m) != m or not 1 <= m <= MAX_ORDER:
        raise ParameterError(f"order m must be an integer in 1..{MAX_ORDER}")
    return int(m)


def _check_tau(tau):
    tau = float(tau)
    if not 0 < tau <= T_MAX:
        raise DomainError(f"tau must lie in (0, {T_MAX}]")
    return tau


def partial_fraction_coefficients(nodes):
    """A_i with 1/prod(1 - x/x_i) = sum A_i/(x_i - x) for x_i = nodes_i^2.

    A_i = prod_j x_j / prod_{j != i}(x_j - x_i); sign A_i = (-1)^(i-1) for increasing nodes.
    """
    x = np.asarray(nodes, dtype=float) ** 2
    out = np.empty(len(x))
    for i in range(len(x)):
        others = np.delete(x, i)
        # pair each factor x_j with (x_j - x_i) to keep the products near 1
        out[i] = x[i] * np.prod(others / (others - x[i]))
    return out


def _rational(nodes):
    sq = np.asarray(nodes, dtype=float) ** 2

    def r(lam):
        lam = np.asarray(lam)
        # values exactly at a node are replaced by the evaluator's interpolation
        with np.errstate(divide="ignore", invalid="ignore"):
            return 1.0 / np.prod(1.0 - lam[..., None] ** 2 / sq, axis=-1)

    return r


@dataclass(frozen=True)
class Extremizer:
    """F_m(lambda) = phi_lambda(tau)/prod(1 - lambda^2/lambda_k^2), or f_m = phi_lambda(tau) F_m."""

    m: int
    tau: float
    params: JacobiParams
    zeros: np.ndarray = field(repr=False)
    kind: ExtremizerKind = ExtremizerKind.SMALL_F_M

    @cached_property
    def product(self):
        """The same function as a SpectralProduct, for quadrature and transforms."""
        times = (self.tau,) if self.kind is ExtremizerKind.F_M else (self.tau, self.tau)
        return SpectralProduct(self.params, times=times, rational=_rational(self.zeros),
                               poles=tuple(self.zeros), rdecay=-2.0 * self.m)

    @property
    def decay(self):
        return self.product.decay

    def __call__(self, lam):
        # f is even in lambda
        return self.product(np.abs(np.asarray(lam, dtype=float)))

    def as_dict(self):
        return {"m": self.m, "tau": self.tau, "kind": self.kind.value,
                "params": self.params.as_dict(), "zeros": [float(z) for z in self.zeros]}


def build_extremizer(p, m, tau, kind=ExtremizerKind.SMALL_F_M):
    m, tau = _check_order(m), _check_tau(tau)
    zeros = lambda_zeros(p, tau, m).zeros
    return Extremizer(m=m, tau=tau, params=p, zeros=zeros, kind=ExtremizerKind(kind))


@dataclass(frozen=True)
class EigenExpansion:
    """sum_i B_i u_i(t) over eigenfunctions u_i of frequency lambda_i.

    PHI:            u_i = phi_{lambda_i}
    PSI:            u_i = psi_{lambda_i}
    PSI_SHIFTED:    u_i = psi_{lambda_i} - psi_{lambda_i}(tau)
    PSI_PLUS_CONST: 1 + sum B_i psi_{lambda_i}
    """

    coefficients: np.ndarray
    frequencies: np.ndarray
    basis_kind: BasisKind
    tau: float
    params: JacobiParams

    def _terms(self, t, deriv=False):
        lam = np.asarray(self.frequencies, dtype=float)[:, None]
        tt = np.atleast_1d(np.asarray(t, dtype=float))[None, :]
        p = self.params
        if self.basis_kind is BasisKind.PHI:
            return (phi_dt if deriv else phi)(p, lam, tt)
        vals = (psi_dt if deriv else psi)(p, lam, tt)
        if self.basis_kind is BasisKind.PSI_SHIFTED and not deriv:
            vals = vals - psi(p, lam, self.tau)
        return vals

    def __call__(self, t):
        vals = np.asarray(self.coefficients) @ self._terms(t)
        if self.basis_kind is BasisKind.PSI_PLUS_CONST:
            vals = vals + 1.0
        return float(vals[0]) if np.ndim(t) == 0 else vals

    def derivative(self, t):
        vals = np.asarray(self.coefficients) @ self._terms(t, deriv=True)
        return float(vals[0]) if np.ndim(t) == 0 else vals

    def as_dict(self):
        return {"basis": self.basis_kind.value, "tau": self.tau,
                "params": self.params.as_dict(),
                "frequencies": [float(v) for v in self.frequencies],
                "coefficients": [float(v) for v in self.coefficients]}


def p_polynomial(p, m, tau):
    """p_m = sum B_i phi_{lambda_i(tau)}; all B_i must come out positive."""
    m, tau = _check_order(m), _check_tau(tau)
    lam = lambda_zeros(p, tau, m).zeros
    a = partial_fraction_coefficients(lam)
    b = -a / (weight_delta(p, tau) * phi_dt(p, lam, tau))
    if np.any(b <= 0):
        i = int(np.nonzero(b <= 0)[0][0])
        raise SignViolationError(f"coefficient B_{i + 1} = {b[i]:.3e} is not positive")
    return EigenExpansion(b, lam, BasisKind.PHI, tau, p)


# ---------------------------------------------------------------- derivatives at tau

def _hyperbolic_taylor(y0, n):
    """Taylor coefficients of a solution of y' = 1 - y^2 (tanh or coth) with y(t0) = y0."""
    y = np.zeros(n + 1)
    y[0] = y0
    for k in range(n):
        conv = float(np.dot(y[:k + 1], y[k::-1]))
        y[k + 1] = ((1.0 if k == 0 else 0.0) - conv) / (k + 1)
    return y


def _log_derivative_taylor(p, tau, n):
    """Taylor coefficients at tau of Delta'/Delta = (2a+1) coth t + (2b+1) tanh t."""
    q = np.zeros(n + 1)
    if p.alpha != -0.5:
        q += (2 * p.alpha + 1) * _hyperbolic_taylor(1.0 / math.tanh(tau), n)
    if p.beta != -0.5:
        q += (2 * p.beta + 1) * _hyperbolic_taylor(math.tanh(tau), n)
    return q


def _ode_taylor(q, c, a0, a1, n):
    """Taylor coefficients of u with u'' + Q u' + c u = 0, Q given by its coefficients q."""
    a = np.zeros((n + 1,) + np.shape(a0))
    a[0] = a0
    if n >= 1:
        a[1] = a1
    for k in range(n - 1):
        s = sum(q[j] * (k - j + 1) * a[k - j + 1] for j in range(k + 1))
        a[k + 2] = -(s + c * a[k]) / ((k + 2) * (k + 1))
    return a


def _series_div(num, den):
    out = np.zeros(len(num))
    for k in range(len(num)):
        out[k] = (num[k] - np.dot(out[:k], den[k:0:-1])) / den[0]
    return out


def _psi_weight_taylor(p, tau, n):
    """Taylor coefficients of w'/w with w = phi_0^2 Delta."""
    q = _log_derivative_taylor(p, tau, n + 1)
    f = _ode_taylor(q, p.rho ** 2, phi(p, 0.0, tau), phi_dt(p, 0.0, tau), n + 1)
    df = np.arange(1, n + 2) * f[1:]
    return q[:n + 1] + 2 * _series_div(df, f[:n + 1])


def _term_derivatives(p, expansion, n):
    """Matrix D[i, k] = k-th t-derivative at tau of the i-th basis function."""
    tau = expansion.tau
    lam = np.asarray(expansion.frequencies, dtype=float)
    if expansion.basis_kind is BasisKind.PHI:
        q = _log_derivative_taylor(p, tau, n)
        a = _ode_taylor(q, lam ** 2 + p.rho ** 2, phi(p, lam, tau), phi_dt(p, lam, tau), n)
    else:
        q = _psi_weight_taylor(p, tau, n)
        a = _ode_taylor(q, lam ** 2, psi(p, lam, tau), psi_dt(p, lam, tau), n)
        if expansion.basis_kind is BasisKind.PSI_SHIFTED:
            a[0] = 0.0
    fact = np.array([math.factorial(k) for k in range(n + 1)], dtype=float)
    return (a * fact[:, None]).T


def derivatives_at_tau(p, expansion, max_order, with_scale=False):
    """Derivatives of orders 0..max_order of the expansion at t = tau.

    Each basis function is expanded in a Taylor series at tau through its
    differential equation, with the coefficient function Delta'/Delta (plus
    2 phi_0'/phi_0 for psi) itself expanded exactly.

    With with_scale=True also returns the local derivative scale
    sum_i |B_i| a_i nu_i^k, where nu_i is the oscillation frequency of the i-th
    term (sqrt(lambda^2+rho^2) for phi, lambda for psi) and a_i its amplitude
    near tau read off from the first three derivatives. A vanishing derivative
    is judged against this scale.
    """
    if int(max_order) != max_order or max_order < 0:
        raise ParameterError("max_order must be a non-negative integer")
    if max_order > 12:
        warnings.warn(f"derivatives of order {max_order} at tau are ill-conditioned",
                      RuntimeWarning, stacklevel=2)
    n = int(max_order)
    d = _term_derivatives(p, expansion, max(n, 2))
    b = np.asarray(expansion.coefficients, dtype=float)
    vals = (b @ d)[:n + 1]
    if expansion.basis_kind is BasisKind.PSI_PLUS_CONST:
        vals[0] += 1.0
    if not with_scale:
        return vals
    lam = np.asarray(expansion.frequencies, dtype=float)
    nu = np.sqrt(lam ** 2 + p.rho ** 2) if expansion.basis_kind is BasisKind.PHI else lam
    nu = np.where(nu > 0, nu, 1.0)
    amp = np.max(np.abs(d[:, :3]) / nu[:, None] ** np.arange(3), axis=1)
    scale = (np.abs(b) * amp) @ (nu[:, None] ** np.arange(n + 1))
    if expansion.basis_kind is BasisKind.PSI_PLUS_CONST:
        scale[0] += 1.0
    return vals, scale


def _stencil(offsets, order):
    # weights w with sum w_j f(x + j h) = h^order f^(order)(x) + O(h^len)
    n = len(offsets)
    mat = np.vander(offsets, n, increasing=True).T
    rhs = np.zeros(n)
    rhs[order] = math.factorial(order)
    return np.linalg.solve(mat, rhs)


def derivatives_fd(fun, t0, max_order=4, h=None):
    """Richardson-extrapolated central differences of orders 0..max_order at t0.

    A 13-point stencil at steps h and h/2; used as an independent check on
    derivatives_at_tau, so only low orders are offered.
    """
    if max_order > 6:
        raise ParameterError("finite differences are only offered up to order 6")
    if h is None:
        h = 0.05 * min(t0, 1.0)
    offs = np.arange(-6, 7, dtype=float)
    out = np.empty(max_order + 1)
    out[0] = float(fun(np.asarray(t0)))
    for k in range(1, max_order + 1):
        w = _stencil(offs, k)
        est = [float(w @ np.asarray(fun(t0 + step * offs), dtype=float)) / step ** k
               for step in (h, h / 2)]
        # truncation error of the central stencil is O(h^(14 - 2 ceil(k/2)))
        p_ord = 14 - 2 * ((k + 1) // 2)
        out[k] = est[1] + (est[1] - est[0]) / (2 ** p_ord - 1)
    return out


# ---------------------------------------------------------------- Lambda_m

def lambda_sup(f, m, search_bound=None, grid_step=None):
    """Lambda_m(f): last sign change of (-1)^(m-1) f on [0, B], refined by Brent's method.

    Returns 0 if (-1)^(m-1) f is never positive on the grid. For an Extremizer the
    defaults are B = lambda_{m+8}(tau) and h = pi/(64 tau).
    """
    m = _check_order(m) if m <= MAX_ORDER else int(m)
    if isinstance(f, Extremizer):
        if search_bound is None:
            search_bound = lambda_zeros(f.params, f.tau, f.m + 8).kth(f.m + 8)
        if grid_step is None:
            grid_step = math.pi / (64 * f.tau)
    if search_bound is None or not math.isfinite(search_bound) or search_bound <= 0:
        raise ParameterError("a finite positive search bound is required")
    if grid_step is None:
        grid_step = search_bound / 4096
    sign = (-1.0) ** (m - 1)
    g = lambda lam: sign * np.asarray(f(lam), dtype=float)
    grid = np.arange(0.0, search_bound + grid_step, grid_step)
    grid[-1] = min(grid[-1], search_bound)
    vals = g(grid)
    pos = np.nonzero(vals > 0)[0]
    if not len(pos):
        return 0.0
    i = int(pos[-1])
    if i == len(grid) - 1:
        warnings.warn("f is still positive at the search bound", RuntimeWarning, stacklevel=2)
        return float(grid[-1])
    a, b = grid[i], grid[i + 1]
    if search_bound - b < 2 * grid_step:
        warnings.warn("last sign change lies within 2h of the search bound",
                      RuntimeWarning, stacklevel=2)
    if vals[i + 1] == 0:
        return float(b)
    return float(brentq(lambda x: float(g(x)), a, b, xtol=1e-14, rtol=4 * np.finfo(float).eps))


# ---------------------------------------------------------------- sign pattern

@dataclass
class SignPattern:
    """Signs of an extremizer at midpoints of (lambda_k, lambda_{k+1})."""

    ks: list
    midpoints: list
    values: list
    as_stated: list     # (-1)^k f > 0
    expected: list      # sign forced by the zero structure

    @property
    def as_stated_holds(self):
        return all(self.as_stated)

    @property
    def expected_holds(self):
        return all(self.expected)


def sign_pattern(ext, k_first=None, k_last=None):
    """Evaluate ext between consecutive zeros lambda_k, lambda_{k+1} for k_first..k_last.

    Beyond lambda_m every factor (1 - lambda^2/lambda_j^2) is negative, so f_m has
    the constant sign (-1)^m there while F_m picks up the sign (-1)^k of phi
    as well. Both the alternating rule (-1)^k f > 0 and the forced sign are
    reported.
    """
    m = ext.m
    k_first = m if k_first is None else k_first
    k_last = m + 10 if k_last is None else k_last
    z = lambda_zeros(ext.params, ext.tau, k_last + 1).zeros
    ks = list(range(k_first, k_last + 1))
    mids = np.array([0.5 * (z[k - 1] + z[k]) for k in ks])
    vals = np.asarray(ext(mids), dtype=float)
    stated = [bool((-1) ** k * v > 0) for k, v in zip(ks, vals)]
    if ext.kind is ExtremizerKind.SMALL_F_M:
        forced = [bool((-1) ** m * v > 0) for v in vals]
    else:
        forced = [bool((-1) ** (k + m) * v > 0) for k, v in zip(ks, vals)]
    return SignPattern(ks, [float(x) for x in mids], [float(v) for v in vals], stated, forced)


# ---------------------------------------------------------------- orthogonality

def _abs_moment(ext, k):
    """int lambda^(2k) |f| d sigma: Gauss-Legendre on [0, L] plus a power-law tail.

    The tail takes the mean of the integrand over the last two periods as the
    amplitude of lambda^decay, which is all a normaliser needs.
    """
    p, tau = ext.params, ext.tau
    lam_top = max(100.0, 4 * float(ext.zeros[-1]), 100.0 / tau)
    edges = np.linspace(0.0, lam_top, int(lam_top * 8 * tau / math.pi) + 2)
    x, w = np.polynomial.legendre.leggauss(15)
    mid, half = 0.5 * (edges[1:] + edges[:-1]), 0.5 * np.diff(edges)
    nodes = (mid[:, None] + half[:, None] * x).ravel()
    wts = (half[:, None] * w).ravel()
    vals = np.abs(ext(nodes)) * nodes ** (2 * k) * spectral_weight_safe(p, nodes)
    head = float(np.sum(vals * wts))
    expo = ext.decay + 2 * k
    if expo >= -1:
        return math.inf
    last = nodes > lam_top - 2 * math.pi / tau
    mean = float(np.sum(vals[last] * wts[last]) / np.sum(wts[last]))
    return head + mean * lam_top / -(expo + 1)


@dataclass
class OrthogonalityReport:
    m: int
    tau: float
    rows: list
    tolerance: float

    @property
    def passed(self):
        return all(r["pass"] for r in self.rows)

    def as_dict(self):
        return {"m": self.m, "tau": self.tau, "tolerance": self.tolerance,
                "rows": self.rows, "pass": self.passed}


def verify_orthogonality(p, m, tau, cfg=DEFAULT_QUAD, tol=1e-6):
    """int lambda^(2k) f_m d sigma for k = 0..m-1, each relative to int lambda^(2k)|f_m| d sigma."""
    m = _check_order(m)
    if m > 8:
        raise ParameterError("orthogonality is checked for m <= 8")
    ext = build_extremizer(p, m, tau)
    rows = []
    for k in range(m):
        val = integrate_dsigma(ext.product.with_lambda_power(k), cfg=cfg)
        norm = _abs_moment(ext, k)
        ratio = abs(val) / norm
        rows.append({"k": k, "integral": val, "abs_integral": norm, "ratio": ratio,
                     "pass": bool(ratio <= tol)})
    return OrthogonalityReport(m, float(tau), rows, tol)


# ---------------------------------------------------------------- zero counting

@dataclass
class ZeroCount:
    count: int
    crossings: list
    touches: list
    resolved: bool = True


def chebyshev_zero_count(basis, coefficients, interval, closed=(False, False), n=10_000,
                         tol=1e-8):
    """Zeros of sum c_i u_i on an interval by a dense scan.

    basis is a list of vectorised evaluators, or an (len(basis), n) matrix of
    values already sampled on the scan grid (see scan_grid). Sign changes count
    once. A dip of |p| between samples of equal sign is minimised locally and
    counts twice when it reaches zero. A value below tol times the sup at a
    closed endpoint counts once.
    """
    a, b = map(float, interval)
    c = np.asarray(coefficients, dtype=float)
    if len(c) > 12:
        raise ParameterError("basis size is limited to 12")
    grid = scan_grid(interval, closed, n)
    if callable(basis[0]) if isinstance(basis, (list, tuple)) else False:
        mat = np.array([np.asarray(u(grid), dtype=float) for u in basis])
        evals = basis
    else:
        mat = np.asarray(basis, dtype=float)
        evals = None
    vals = c @ mat[:len(c)]
    scale = float(np.max(np.abs(vals)))
    if scale == 0:
        raise ParameterError("the combination vanishes identically on the grid")
    small = np.abs(vals) <= tol * scale
    crossings, touches = [], []
    count = 0
    for end, idx in ((0, 0), (1, len(grid) - 1)):
        if closed[end] and small[idx]:
            count += 1
            touches.append(float(grid[idx]))
    live = np.nonzero(~small)[0]
    sv = np.sign(vals[live])
    flips = np.nonzero(sv[:-1] != sv[1:])[0]
    for j in flips:
        crossings.append(float(0.5 * (grid[live[j]] + grid[live[j + 1]])))
    count += len(flips)
    # runs of tiny values between equal signs are touching zeros
    for j in np.nonzero((sv[:-1] == sv[1:]) & (np.diff(live) > 1))[0]:
        count += 2
        touches.append(float(grid[live[j] + 1]))
    # shallow dips that stay above tol on the grid: look between the samples
    absv = np.abs(vals)
    dips = np.nonzero((absv[1:-1] < absv[:-2]) & (absv[1:-1] < absv[2:])
                      & ~small[1:-1] & (np.sign(vals[:-2]) == np.sign(vals[2:]))
                      & (absv[1:-1] < 1e-3 * scale))[0] + 1
    for i in dips:
        s = np.sign(vals[i])
        if evals is not None:
            fun = lambda x: s * float(c @ np.array([u(x) for u in evals[:len(c)]]))
        else:
            # quadratic through the three samples
            fun = _parabola(grid[i - 1:i + 2], vals[i - 1:i + 2] * s)
        res = minimize_scalar(fun, bounds=(grid[i - 1], grid[i + 1]), method="bounded",
                              options={"xatol": 1e-14})
        if res.fun <= tol * scale:
            count += 2
            touches.append(float(res.x))
    step = (b - a) / n
    resolved = True
    xs = sorted(crossings + touches)
    if any(y - x < 3 * step for x, y in zip(xs, xs[1:])):
        warnings.warn("two zeros closer than three scan steps", RuntimeWarning, stacklevel=2)
        resolved = False
    return ZeroCount(count, crossings, touches, resolved)


def _parabola(x, y):
    coef = np.polyfit(x - x[1], y, 2)
    return lambda t: float(np.polyval(coef, t - x[1]))


def scan_grid(interval, closed=(False, False), n=10_000):
    """Scan points: endpoints included only when closed, else offset by half a step."""
    a, b = map(float, interval)
    step = (b - a) / n
    lo = a if closed[0] else a + 0.5 * step
    hi = b if closed[1] else b - 0.5 * step
    return np.linspace(lo, hi, n)


@dataclass(frozen=True)
class ChebyshevFamily:
    name: str
    interval: tuple
    closed: tuple
    functions: list = field(repr=False)

    def sample(self, n=10_000):
        grid = scan_grid(self.interval, self.closed, n)
        return grid, np.array([np.asarray(u(grid), dtype=float) for u in self.functions])


FAMILY_NAMES = ("phi_lambda", "phi_mu", "dphi_mu", "dphi_lambda", "phi_mu_shifted",
                "psi_lambda", "psi_star_const", "dpsi_star", "psi_star_shifted", "phi_mu_const")


def chebyshev_family(p, tau, name, size):
    """The first `size` members of one of the families claimed to be Chebyshev systems.

    phi_mu_const is {1} together with the phi_{mu_k}: the constant is the lowest
    Neumann eigenfunction, so phi_{mu_1} already has one zero on (0, tau).
    """
    tau = _check_tau(tau)
    if name not in FAMILY_NAMES:
        raise ParameterError(f"unknown family {name!r}; choose from {FAMILY_NAMES}")
    if name.startswith(("phi", "dphi")):
        p.require_alpha_above_half()
    with_const = name in ("psi_star_const", "phi_mu_const")
    k = size - 1 if with_const else size
    if k == 0:
        freqs = np.zeros(0)
    elif "mu" in name:
        freqs = mu_zeros(p, tau, k).zeros
    elif "star" in name:
        freqs = lambda_star_zeros(p, tau, k).zeros
    else:
        freqs = lambda_zeros(p, tau, k).zeros
    f = [float(v) for v in freqs]
    if name in ("phi_lambda", "phi_mu", "phi_mu_const"):
        fns = [lambda t, l=l: phi(p, l, t) for l in f]
    elif name in ("dphi_mu", "dphi_lambda"):
        fns = [lambda t, l=l: phi_dt(p, l, t) for l in f]
    elif name == "phi_mu_shifted":
        fns = [lambda t, l=l: phi(p, l, t) - phi(p, l, tau) for l in f]
    elif name in ("psi_lambda", "psi_star_const"):
        fns = [lambda t, l=l: psi(p, l, t) for l in f]
    elif name == "dpsi_star":
        fns = [lambda t, l=l: psi_dt(p, l, t) for l in f]
    else:
        fns = [lambda t, l=l: psi(p, l, t) - psi(p, l, tau) for l in f]
    if with_const:
        fns = [lambda t: np.ones(np.shape(t))] + fns
    closed = {"phi_lambda": (True, False), "psi_star_const": (True, True)}.get(name, (False, False))
    return ChebyshevFamily(name, (0.0, tau), closed, fns)
