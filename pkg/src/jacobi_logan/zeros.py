"""Positive zeros in lambda of phi_lambda(tau), d/dt phi_lambda(tau) and d/dt psi_lambda(tau).

Zeros are isolated by a uniform scan of step pi/(4 tau) and then bisected
all at once. The inverse maps t_m(gamma), t_m*(gamma) are found as the m-th
t-zeros of the same targets at fixed lambda = gamma.
"""
from dataclasses import dataclass, field
import enum
import functools
import math

import numpy as np
from scipy.optimize import brentq

from .errors import BracketingError, DomainError, ParameterError
from .jacobi import LAMBDA_MAX, T_MAX, phi, phi_dt

MAX_COUNT = 200
SCAN_START = 1e-3
CERT_TOL = 1e-10


class ZeroKind(enum.Enum):
    LAMBDA = "lambda"
    MU = "mu"
    LAMBDA_STAR = "lambda_star"


@dataclass(frozen=True)
class ZeroTable:
    """Increasing positive zeros of one of the three target functions at fixed tau.

    zeros[k-1] holds the k-th zero; use kth(k) for 1-based access.
    """

    tau: float
    kind: ZeroKind
    zeros: np.ndarray = field(repr=False)
    tol: float
    residuals: np.ndarray = field(repr=False, default=None)

    def __len__(self):
        return len(self.zeros)

    def kth(self, k):
        if not 1 <= k <= len(self.zeros):
            raise IndexError(f"zero index {k} outside 1..{len(self.zeros)}")
        return float(self.zeros[k - 1])

    def as_list(self):
        return [float(z) for z in self.zeros]


def target(p, kind, lam, tau):
    """The function whose lambda-zeros define the table, up to a sign-definite factor.

    MU uses phi^(alpha+1,beta+1)_lambda(tau), which differs from the t-derivative
    by the negative factor -(rho^2+lambda^2) sinh cosh / (2(alpha+1)).
    LAMBDA_STAR uses phi'_lambda phi_0 - phi_lambda phi_0', the numerator of psi'.
    """
    if kind is ZeroKind.LAMBDA:
        return phi(p, lam, tau)
    if kind is ZeroKind.MU:
        return phi(p.shifted(1), lam, tau)
    if kind is ZeroKind.LAMBDA_STAR:
        f0, d0 = phi(p, 0.0, tau), phi_dt(p, 0.0, tau)
        return phi_dt(p, lam, tau) * f0 - phi(p, lam, tau) * d0
    raise ParameterError(f"unknown zero kind {kind!r}")


def _refine_all(fun, lo, hi, flo, fhi, iters=100):
    """Shrink many sign-change brackets at once by the Illinois variant of regula falsi.

    Converges superlinearly and keeps a valid bracket throughout; a plain
    bisection step is taken whenever the secant point lands outside.
    """
    lo, hi, flo, fhi = lo.copy(), hi.copy(), flo.copy(), fhi.copy()
    side = np.zeros(lo.shape, dtype=int)
    for _ in range(iters):
        width = hi - lo
        live = width > 4 * np.finfo(float).eps * np.maximum(np.abs(hi), 1.0)
        if not np.any(live):
            break
        x = (lo * fhi - hi * flo) / (fhi - flo)
        bad = ~np.isfinite(x) | (x <= lo) | (x >= hi)
        x = np.where(bad, 0.5 * (lo + hi), x)
        x = np.where(live, x, lo)
        fx = np.where(live, fun(x), flo)
        left = np.sign(fx) == np.sign(flo)
        exact = fx == 0
        # Illinois: halve the stale end value when the same side moves twice
        new_lo = live & left & ~exact
        new_hi = live & ~left & ~exact
        fhi = np.where(new_lo & (side == 1), 0.5 * fhi, fhi)
        flo = np.where(new_hi & (side == -1), 0.5 * flo, flo)
        lo, flo = np.where(new_lo, x, lo), np.where(new_lo, fx, flo)
        hi, fhi = np.where(new_hi, x, hi), np.where(new_hi, fx, fhi)
        side = np.where(new_lo, 1, np.where(new_hi, -1, side))
        lo = np.where(live & exact, x, lo)
        hi = np.where(live & exact, x, hi)
    return lo, hi


@functools.lru_cache(maxsize=256)
def _zeros(p, tau, count, kind):
    tau = float(tau)
    if not 0 < tau <= T_MAX:
        raise DomainError(f"tau must lie in (0, {T_MAX}]")
    if int(count) != count or not 1 <= count <= MAX_COUNT:
        raise ParameterError(f"count must be an integer in 1..{MAX_COUNT}")
    step = math.pi / (4 * tau)
    # phase of the large-lambda asymptotics puts the k-th zero near this value
    guess = (math.pi / 2 + (count - 1) * math.pi + math.pi * (p.alpha + 0.5) / 2) / tau
    upper = min(guess + 8 * step + 4 * math.pi / tau, LAMBDA_MAX)
    fun = lambda lam: target(p, kind, lam, tau)
    while True:
        grid = np.arange(SCAN_START, upper + step, step)
        grid = grid[grid <= LAMBDA_MAX]
        vals = fun(grid)
        change = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]
        exact = np.nonzero(vals == 0)[0]
        if len(exact):
            raise BracketingError("scan landed on a zero; perturb tau", (grid[0], grid[-1]))
        if len(change) >= count:
            break
        if upper >= LAMBDA_MAX:
            raise BracketingError(
                f"only {len(change)} sign changes of the {kind.value} target found",
                (float(grid[0]), float(grid[-1])))
        upper = min(2 * upper, LAMBDA_MAX)
    idx = change[:count]
    lo, hi = _refine_all(fun, grid[idx], grid[idx + 1], vals[idx], vals[idx + 1])
    flo, fhi = fun(lo), fun(hi)
    roots = np.where(np.abs(flo) <= np.abs(fhi), lo, hi)
    scale = np.maximum(np.abs(vals[idx]), np.abs(vals[idx + 1]))
    resid = np.abs(fun(roots)) / scale
    bad = np.nonzero(resid > CERT_TOL)[0]
    if len(bad):
        k = int(bad[0])
        raise BracketingError(
            f"zero {k + 1} failed certification (residual {resid[k]:.2e})",
            (float(grid[idx[k]]), float(grid[idx[k] + 1])))
    tol = float(np.max(hi - lo))
    # tables are cached and shared, so freeze them
    roots.flags.writeable = False
    resid.flags.writeable = False
    return ZeroTable(tau=tau, kind=kind, zeros=roots, tol=tol, residuals=resid)


def lambda_zeros(p, tau, count):
    """First `count` positive zeros lambda_k(tau) of lambda -> phi_lambda(tau)."""
    return _zeros(p, tau, count, ZeroKind.LAMBDA)


def mu_zeros(p, tau, count):
    """First `count` positive zeros mu_k(tau) of lambda -> d/dt phi_lambda(tau)."""
    return _zeros(p, tau, count, ZeroKind.MU)


def lambda_star_zeros(p, tau, count):
    """First `count` positive zeros lambda*_k(tau) of lambda -> d/dt psi_lambda(tau)."""
    return _zeros(p, tau, count, ZeroKind.LAMBDA_STAR)


def zero_table(p, tau, count, kind):
    return _zeros(p, tau, count, ZeroKind(kind))


def t_of_gamma(p, gamma, m, starred=False):
    """Time t with lambda_m(t) = gamma, or lambda*_m(t) = gamma when starred.

    lambda_m(t) decreases strictly in t, so this t is the m-th positive zero of
    t -> phi_gamma(t) (of t -> d/dt psi_gamma(t) in the starred case). The zero
    is bracketed by a scan in t and polished with Brent's method.
    """
    gamma = float(gamma)
    if not gamma > 0:
        raise DomainError("gamma must be positive")
    if int(m) != m or m < 1:
        raise ParameterError("m must be a positive integer")
    kind = ZeroKind.LAMBDA_STAR if starred else ZeroKind.LAMBDA

    def fun(t):
        t = np.asarray(t, dtype=float)
        if kind is ZeroKind.LAMBDA:
            return phi(p, gamma, t)
        f0, d0 = phi(p, 0.0, t), phi_dt(p, 0.0, t)
        return (phi_dt(p, gamma, t) * f0 - phi(p, gamma, t) * d0) / f0 ** 2

    step = min(math.pi / (8 * gamma), 0.05)
    grid = np.arange(1e-6, T_MAX + step, step)
    grid[-1] = T_MAX
    grid = np.unique(np.clip(grid, 1e-6, T_MAX))
    vals = fun(grid)
    change = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) <= 0)[0]
    # a zero sitting exactly on a grid point shows up twice
    change = change[np.concatenate(([True], np.diff(change) > 1))] if len(change) else change
    if len(change) < m:
        raise DomainError(
            f"t_{m}(gamma) for gamma={gamma} lies beyond the supported t range (0, {T_MAX}]")
    i = int(change[m - 1])
    a, b = grid[i], grid[i + 1]
    if vals[i] == 0:
        return float(a)
    if vals[i + 1] == 0:
        return float(b)
    return float(brentq(lambda s: float(fun(s)), a, b, xtol=1e-15, rtol=1e-15, maxiter=200))
