"""Jacobi functions phi_lambda^(alpha,beta)(t), their companions and weights.

phi is evaluated along three routes:

* the hypergeometric power series in -sinh^2 t for small t and moderate
  lambda*sinh t;
* its Pfaff transform in tanh^2 t while lambda*tanh t stays moderate;
* the Harish-Chandra expansion phi = 2 Re(c(lambda) Phi_lambda(t)) elsewhere.

The series routes lose digits like exp(lambda sinh t), which is why large
lambda*t is handed to the expansion at infinity.
"""
from dataclasses import dataclass
import math

import numpy as np

from .errors import ConvergenceError, DomainError, ParameterError
from .specfun import DEFAULT_SERIES, SeriesConfig, gauss_2f1, hyp_series, log_gamma_ratio

T_MAX = 20.0
LAMBDA_MAX = 1e4

_LN2 = math.log(2.0)

# phi feeds derivatives and quotients downstream, so its series run tighter
# than the generic default.
PHI_SERIES = SeriesConfig(rel_tol=1e-15)


@dataclass(frozen=True)
class JacobiParams:
    """Parameter pair (alpha, beta) with alpha >= beta >= -1/2."""

    alpha: float
    beta: float

    def __post_init__(self):
        a, b = float(self.alpha), float(self.beta)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise ParameterError("alpha and beta must be finite")
        if not (a >= b >= -0.5):
            raise ParameterError(f"need alpha >= beta >= -1/2, got ({a}, {b})")
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)

    @property
    def rho(self):
        return self.alpha + self.beta + 1.0

    def shifted(self, k=1):
        """Parameters (alpha+k, beta+k)."""
        return JacobiParams(self.alpha + k, self.beta + k)

    def require_alpha_above_half(self):
        if self.alpha <= -0.5:
            raise DomainError("this operation needs alpha > -1/2")

    def as_dict(self):
        return {"alpha": self.alpha, "beta": self.beta, "rho": self.rho}


COSINE = JacobiParams(-0.5, -0.5)


def _check_t(t):
    t = np.asarray(t, dtype=float)
    if np.any(t < 0) or np.any(~np.isfinite(t)):
        raise DomainError("t must be finite and non-negative")
    if np.any(t > T_MAX):
        raise DomainError(f"t exceeds the supported range [0, {T_MAX}]")
    return t


def _check_lambda(lam):
    lam = np.abs(np.asarray(lam, dtype=float))
    if np.any(~np.isfinite(lam)) or np.any(lam > LAMBDA_MAX):
        raise DomainError(f"lambda outside the supported range [0, {LAMBDA_MAX:g}]")
    return lam


def _scalar(x):
    return float(x) if np.ndim(x) == 0 else x


def weight_delta(p, t):
    """Delta(t) = 2^(2 rho) sinh^(2 alpha+1) t cosh^(2 beta+1) t."""
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise DomainError("t must be non-negative")
    val = (2.0 ** (2 * p.rho) * np.sinh(t) ** (2 * p.alpha + 1)
           * np.cosh(t) ** (2 * p.beta + 1))
    return _scalar(val)


def delta_log_derivative(p, t):
    """Delta'(t)/Delta(t) = (2 alpha+1) coth t + (2 beta+1) tanh t, for t > 0."""
    t = np.asarray(t, dtype=float)
    return _scalar((2 * p.alpha + 1) / np.tanh(t) + (2 * p.beta + 1) * np.tanh(t))


def log_c_function(p, lam):
    """Logarithm of the Harish-Chandra c-function, complex lambda allowed.

    c(lambda) = 2^(rho - i lambda) Gamma(alpha+1) Gamma(i lambda)
                / (Gamma((rho + i lambda)/2) Gamma((alpha - beta + 1 + i lambda)/2)),

    rewritten with the duplication formula so that both Gamma quotients have
    the same argument and can be taken from the asymptotic ratio series.
    Only exp() of the result is meaningful.
    """
    lam = np.asarray(lam, dtype=complex)
    z = 0.5j * lam
    const = (p.rho - 1) * _LN2 + math.lgamma(p.alpha + 1) - 0.5 * math.log(math.pi)
    r1 = log_gamma_ratio(z, 0.0, 0.5 * p.rho)
    r2 = log_gamma_ratio(z, 0.5, 0.5 * (p.alpha - p.beta + 1))
    return const + r1 + r2


def c_function(p, lam):
    """The c-function itself; equals 1/2 in the cosine case."""
    return np.exp(log_c_function(p, lam))


def spectral_weight(p, lam):
    """Density s(lambda) = 1 / (2 pi |c(lambda)|^2) of the spectral measure."""
    lam = np.asarray(lam, dtype=float)
    if np.any(lam <= 0):
        raise DomainError("the spectral weight is defined for lambda > 0")
    val = np.exp(-2.0 * np.real(log_c_function(p, lam))) / (2 * math.pi)
    return _scalar(val)


def hc_sum(p, lam, t, max_terms=None):
    """S_lambda(t) = sum_k Gamma_k(lambda) exp(-2 k t), the series part of Phi_lambda(t).

    lam may be complex as long as lambda is not in -i N; t > 0. The
    coefficients obey a two-term recursion driven by the expansions of coth
    and tanh, so each new coefficient costs O(1).
    """
    lam, t = np.broadcast_arrays(np.asarray(lam, dtype=complex), np.asarray(t, dtype=float))
    if np.any(t <= 0):
        raise DomainError("the expansion at infinity needs t > 0")
    a, b, rho = p.alpha, p.beta, p.rho
    qa, qb = 2 * (2 * a + 1), 2 * (2 * b + 1)
    shape = lam.shape
    x = np.exp(-2.0 * t).ravel()
    il = 1j * lam.ravel()
    result = np.empty(il.shape, dtype=complex)
    act = np.arange(il.size)
    g = np.ones(il.shape, dtype=complex)
    s_even = np.zeros_like(g)
    s_alt = np.zeros_like(g)
    total = np.ones_like(g)
    xp = np.ones(il.shape)
    quiet = np.zeros(il.shape, dtype=int)
    if max_terms is None:
        max_terms = int(max(DEFAULT_SERIES.max_terms, 60.0 / float(np.min(t)) + 100))
    for k in range(1, max_terms):
        mu = il - rho - 2 * (k - 1)
        s_even = s_even + mu * g
        s_alt = s_alt + (-1) ** (k - 1) * mu * g
        g = -(qa * s_even + qb * (-1) ** k * s_alt) / (4 * k * (k - il))
        xp = xp * x
        term = g * xp
        total = total + term
        small = np.abs(term) <= 1e-17 * np.abs(total)
        quiet = np.where(small, quiet + 1, 0)
        done = quiet >= 3
        n_done = np.count_nonzero(done)
        # shrinking the active set costs a copy, so only do it in bulk
        if n_done == done.size or (n_done and (n_done * 4 >= done.size or k % 64 == 0)):
            result[act[done]] = total[done]
            keep = ~done
            if not np.any(keep):
                return result.reshape(shape)
            act, il, x, g, s_even, s_alt, total, xp, quiet = (
                v[keep] for v in (act, il, x, g, s_even, s_alt, total, xp, quiet))
    raise ConvergenceError("expansion at infinity did not converge")


def hc_series(p, lam, t, max_terms=None):
    """Phi_lambda(t) = exp((i lambda - rho) t) S_lambda(t); phi = c(lambda) Phi_lambda + c(-lambda) Phi_-lambda."""
    lam, t = np.broadcast_arrays(np.asarray(lam, dtype=complex), np.asarray(t, dtype=float))
    return np.exp((1j * lam - p.rho) * t) * hc_sum(p, lam, t, max_terms)


def _phi0_far(p, t):
    out = np.empty(t.shape)
    for idx, tv in np.ndenumerate(t):
        out[idx] = gauss_2f1(0.5 * p.rho, 0.5 * p.rho, p.alpha + 1, -math.sinh(tv) ** 2, PHI_SERIES)
    return out


def _phi_hc(p, lam, t):
    # c depends on lambda only; grids of (lambda, t) pairs repeat lambda a lot
    uniq, inv = np.unique(lam, return_inverse=True)
    c = c_function(p, uniq)[inv]
    return 2.0 * np.real(c * hc_series(p, lam, t))


def phi(p, lam, t, cfg=PHI_SERIES):
    """Jacobi function phi_lambda(t) = F((rho+i lambda)/2, (rho-i lambda)/2; alpha+1; -sinh^2 t).

    lam and t broadcast against each other; the function is even in lambda.
    Raises DomainError for t outside [0, T_MAX] or |lambda| > LAMBDA_MAX.
    """
    lam, t = np.broadcast_arrays(_check_lambda(lam), _check_t(t))
    out = np.ones(lam.shape)
    sh, ch, th = np.sinh(t), np.cosh(t), np.tanh(t)
    live = t > 0
    direct = live & (sh * sh <= 0.5) & (lam * sh <= 8.0)
    pfaff = live & ~direct & (th * th <= 0.95) & (lam * th <= 8.0)
    far = live & ~direct & ~pfaff
    rho, c = p.rho, p.alpha + 1
    if np.any(direct):
        la = lam[direct]
        a = 0.5 * (rho + 1j * la)
        out[direct] = hyp_series(a, np.conj(a), c, -sh[direct] ** 2, cfg).real
    if np.any(pfaff):
        la, tt = lam[pfaff], t[pfaff]
        a = 0.5 * (rho + 1j * la)
        bb = 0.5 * (p.alpha - p.beta + 1 + 1j * la)
        pref = ch[pfaff] ** (-rho) * np.exp(-1j * la * np.log(ch[pfaff]))
        out[pfaff] = (pref * hyp_series(a, bb, c, th[pfaff] ** 2, cfg)).real
    if np.any(far):
        la, tt = lam[far], t[far]
        lam_b = 1e-4 / tt
        tiny = la < lam_b
        res = np.empty(la.shape)
        if np.any(~tiny):
            res[~tiny] = _phi_hc(p, la[~tiny], tt[~tiny])
        if np.any(tiny):
            # c(lambda) has a pole at 0; the two halves of the expansion cancel.
            # phi is even and analytic in lambda, so interpolate in lambda^2.
            tb, lb = tt[tiny], lam_b[tiny]
            p0 = _phi0_far(p, tb) if rho != 0 else np.ones(tb.shape)
            pb = _phi_hc(p, lb, tb)
            res[tiny] = p0 + (pb - p0) * (la[tiny] / lb) ** 2
        out[far] = res
    return _scalar(out)


def phi_dt(p, lam, t, cfg=PHI_SERIES):
    """t-derivative of phi_lambda(t), via the parameter shift (alpha+1, beta+1)."""
    lam, t = np.broadcast_arrays(_check_lambda(lam), _check_t(t))
    q = p.shifted(1)
    val = (-(p.rho ** 2 + lam ** 2) * np.sinh(t) * np.cosh(t) / (2 * (p.alpha + 1))
           * phi(q, lam, t, cfg))
    return _scalar(val)


def phi_dtt(p, lam, t, cfg=PHI_SERIES):
    """Second t-derivative, from the differential equation for t > 0 and its limit at 0."""
    lam, t = np.broadcast_arrays(_check_lambda(lam), _check_t(t))
    k = lam ** 2 + p.rho ** 2
    out = np.empty(lam.shape)
    zero = t == 0
    out[zero] = -k[zero] / (2 * (p.alpha + 1))
    pos = ~zero
    if np.any(pos):
        lp, tp = lam[pos], t[pos]
        out[pos] = (-delta_log_derivative(p, tp) * phi_dt(p, lp, tp, cfg)
                    - k[pos] * phi(p, lp, tp, cfg))
    return _scalar(out)


def psi(p, lam, t, cfg=PHI_SERIES):
    """psi_lambda(t) = phi_lambda(t) / phi_0(t)."""
    lam, t = np.broadcast_arrays(_check_lambda(lam), _check_t(t))
    return _scalar(phi(p, lam, t, cfg) / phi(p, 0.0, t, cfg))


def psi_dt(p, lam, t, cfg=PHI_SERIES):
    """t-derivative of psi_lambda by the quotient rule."""
    lam, t = np.broadcast_arrays(_check_lambda(lam), _check_t(t))
    f, df = phi(p, lam, t, cfg), phi_dt(p, lam, t, cfg)
    g, dg = phi(p, 0.0, t, cfg), phi_dt(p, 0.0, t, cfg)
    return _scalar((df * g - f * dg) / g ** 2)


def phi_dlambda(p, lam, t, h=None, cfg=PHI_SERIES):
    """lambda-derivative of phi_lambda(t) by Richardson-extrapolated central differences.

    Uses steps h, h/2, h/4 and two elimination rounds, so the truncation
    error is O(h^6). The default step scales with the oscillation period 1/t.
    """
    lam = float(lam)
    t = float(t)
    if h is None:
        h = 0.05 / max(t, 0.05)

    def central(step):
        hi = phi(p, lam + step, t, cfg)
        lo = phi(p, abs(lam - step), t, cfg)
        return (hi - lo) / (2 * step)

    d1, d2, d3 = central(h), central(h / 2), central(h / 4)
    e1 = (4 * d2 - d1) / 3
    e2 = (4 * d3 - d2) / 3
    return (16 * e2 - e1) / 15


def asymptotic_phi(p, lam, t):
    """Leading large-lambda term (2/pi)^(1/2) (Delta s)^(-1/2) cos(lambda t - pi(alpha+1/2)/2)."""
    lam = np.asarray(lam, dtype=float)
    t = np.asarray(t, dtype=float)
    if np.any(lam <= 0) or np.any(t <= 0):
        raise DomainError("asymptotic_phi needs lambda > 0 and t > 0")
    amp = math.sqrt(2 / math.pi) / np.sqrt(weight_delta(p, t) * spectral_weight(p, lam))
    return _scalar(amp * np.cos(lam * t - math.pi * (p.alpha + 0.5) / 2))


def spectral_weight_leading(p, lam):
    """Leading power law (2^(rho+alpha) Gamma(alpha+1))^(-2) lambda^(2 alpha+1) of s."""
    lam = np.asarray(lam, dtype=float)
    log_k = -2 * ((p.rho + p.alpha) * _LN2 + math.lgamma(p.alpha + 1))
    return _scalar(np.exp(log_k) * lam ** (2 * p.alpha + 1))
