"""Complex log-Gamma, Gauss hypergeometric evaluation and the Mehler kernel.

Everything here is a pure function of its arguments. Array inputs are
accepted where noted and broadcast with numpy rules.
"""
from dataclasses import dataclass
import math

import numpy as np
from scipy.special import bernoulli, comb, digamma

from .errors import ConvergenceError, DomainError, ParameterError, PoleError


@dataclass(frozen=True)
class SeriesConfig:
    """Stopping rule for hypergeometric-type power series."""

    rel_tol: float = 1e-12
    abs_tol: float = 1e-300
    max_terms: int = 10_000

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ParameterError("rel_tol must be positive")
        if not self.abs_tol >= 0:
            raise ParameterError("abs_tol must be non-negative")
        if int(self.max_terms) != self.max_terms or self.max_terms < 16:
            raise ParameterError("max_terms must be an integer >= 16")


DEFAULT_SERIES = SeriesConfig()

LOG_PI = math.log(math.pi)
LOG_2PI_HALF = 0.5 * math.log(2.0 * math.pi)

# Lanczos coefficients for g = 7, nine terms.
_LANCZOS_G = 7.0
_LANCZOS = np.array([
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
])


def _lanczos_log_gamma(z):
    # valid for Re z >= 1/2
    w = z - 1.0
    acc = np.full_like(w, _LANCZOS[0])
    for k in range(1, len(_LANCZOS)):
        acc = acc + _LANCZOS[k] / (w + k)
    t = w + _LANCZOS_G + 0.5
    return LOG_2PI_HALF + (w + 0.5) * np.log(t) - t + np.log(acc)


def _log_sin_pi(z):
    """A continuous logarithm of sin(pi z) on each closed half-plane."""
    z = np.asarray(z, dtype=complex)
    upper = np.where(z.imag >= 0, z, np.conj(z))
    e = np.exp(2j * np.pi * upper)
    val = -1j * np.pi * upper + np.log(0.5j) + np.log1p(-e)
    return np.where(z.imag >= 0, val, np.conj(val))


def log_gamma(z, cfg=DEFAULT_SERIES):
    """Principal branch of ln Gamma(z) for complex z.

    Uses a Lanczos rational approximation for Re z >= 1/2 and the reflection
    formula elsewhere. Accepts scalars or arrays.

    Raises:
        PoleError: if any z is a non-positive integer (within cfg.abs_tol).
    """
    z = np.asarray(z, dtype=complex)
    near = np.round(z.real)
    pole = (near <= 0) & (np.abs(z - near) <= cfg.abs_tol)
    if np.any(pole):
        raise PoleError(f"Gamma has a pole at {z[pole].ravel()[0]}")
    out = np.empty_like(z)
    right = z.real >= 0.5
    if np.any(right):
        out[right] = _lanczos_log_gamma(z[right])
    left = ~right
    if np.any(left):
        zl = z[left]
        val = LOG_PI - _log_sin_pi(zl) - _lanczos_log_gamma(1.0 - zl)
        out[left] = val + _branch_shift(zl, val)
    return out[()] if out.ndim == 0 else out


def _branch_shift(z, val):
    # Walk up with the recurrence ln G(z) = ln G(z+n) - sum ln(z+j) to find the
    # principal imaginary part, then snap val onto it. Only the imaginary part
    # of the recurrence is needed, so a crude sum suffices.
    n = np.maximum(np.ceil(0.5 - z.real), 0).astype(int)
    im = _principal_imag_asymptotic(z)
    near = n <= 64
    if np.any(near):
        zn, nn = z[near], n[near]
        acc = _lanczos_log_gamma(zn + nn).imag
        for j in range(int(nn.max())):
            acc = acc - np.where(j < nn, np.angle(zn + j), 0.0)
        im[near] = acc
    k = np.round((im - val.imag) / (2 * np.pi))
    return 2j * np.pi * k


def _principal_imag_asymptotic(z):
    # Stirling's series imaginary part, adequate to pick a 2 pi multiple
    w = z
    val = (w - 0.5) * np.log(w) - w + LOG_2PI_HALF + 1.0 / (12.0 * w)
    return val.imag


_BERN = bernoulli(40)


def _bernoulli_poly(k, x):
    j = np.arange(k + 1)
    return float(np.sum(comb(k, j) * _BERN[: k + 1] * np.power(float(x), k - j)))


def _ratio_asymptotic(z, a, b, nterms=16):
    out = (a - b) * np.log(z)
    zp = np.ones_like(z)
    for n in range(1, nterms + 1):
        zp = zp * z
        coef = (-1) ** (n + 1) * (_bernoulli_poly(n + 1, a) - _bernoulli_poly(n + 1, b)) / (n * (n + 1))
        if coef != 0.0:
            out = out + coef / zp
    return out


def log_gamma_ratio(z, a, b, cfg=DEFAULT_SERIES):
    """Logarithm of Gamma(z+a)/Gamma(z+b) for complex z and real shifts a, b.

    For large |z| the ratio is evaluated by its asymptotic series, which avoids
    the cancellation of two large log-Gamma values. The result is a logarithm
    of the ratio; its imaginary part is only meaningful modulo 2 pi.
    """
    z = np.asarray(z, dtype=complex)
    out = np.empty_like(z)
    big = np.abs(z) >= 20.0
    refl = big & (z.real < 0) & (np.abs(z.imag) >= 10.0)
    direct = big & ~refl
    small = ~big | (big & (z.real < 0) & (np.abs(z.imag) < 10.0))
    direct &= ~small
    if np.any(direct):
        out[direct] = _ratio_asymptotic(z[direct], a, b)
    if np.any(refl):
        zr = z[refl]
        sgn = np.where(zr.imag >= 0, 1.0, -1.0)
        up = np.where(zr.imag >= 0, zr, np.conj(zr))
        sines = (-1j * np.pi * (b - a) + np.log1p(-np.exp(2j * np.pi * (up + b)))
                 - np.log1p(-np.exp(2j * np.pi * (up + a))))
        sines = np.where(sgn > 0, sines, np.conj(sines))
        out[refl] = sines + _ratio_asymptotic(-zr, 1.0 - b, 1.0 - a)
    if np.any(small):
        zs = z[small]
        out[small] = log_gamma(zs + a, cfg) - log_gamma(zs + b, cfg)
    return out[()] if out.ndim == 0 else out


def hyp_series(a, b, c, x, cfg=DEFAULT_SERIES):
    """Plain power series of F(a, b; c; x), vectorised over broadcast inputs.

    Returns the complex partial sum. Terms are accumulated until three
    consecutive ones, inflated by the geometric tail factor 1/(1-|x|), fall
    below rel_tol*|sum| + abs_tol.
    """
    a, b, c, x = np.broadcast_arrays(
        np.asarray(a, dtype=complex), np.asarray(b, dtype=complex),
        np.asarray(c, dtype=complex), np.asarray(x, dtype=complex))
    shape = a.shape
    a, b, c, x = (v.ravel() for v in (a, b, c, x))
    result = np.empty(a.shape, dtype=complex)
    act = np.arange(a.size)
    term = np.ones(a.shape, dtype=complex)
    total = term.copy()
    quiet = np.zeros(a.shape, dtype=int)
    # terms eventually shrink like |x|^k, so the tail is about term/(1-|x|)
    tail = 1.0 / np.maximum(1.0 - np.abs(x), 1e-3)
    for k in range(int(cfg.max_terms)):
        term = term * (a + k) * (b + k) / ((c + k) * (k + 1)) * x
        total = total + term
        ok = np.abs(term) * tail <= cfg.rel_tol * np.abs(total) + cfg.abs_tol
        quiet = np.where(ok, quiet + 1, 0)
        done = quiet >= 3
        n_done = np.count_nonzero(done)
        # shrinking the active set costs a copy, so only do it in bulk
        if n_done == done.size or (n_done and (n_done * 4 >= done.size or k % 64 == 0)):
            result[act[done]] = total[done]
            keep = ~done
            if not np.any(keep):
                return result.reshape(shape)
            act, a, b, c, x, term, total, quiet, tail = (
                v[keep] for v in (act, a, b, c, x, term, total, quiet, tail))
    raise ConvergenceError(f"hypergeometric series did not converge in {cfg.max_terms} terms")


def _is_nonpositive_int(v):
    return float(v).is_integer() and v <= 0


def _gamma_ratio_coeff(num, den):
    return np.exp(sum(log_gamma(v) for v in num) - sum(log_gamma(v) for v in den))


def _log_case(A, B, x, cfg):
    # F(A, B; A+B; 1-x) for small x > 0, real A, B > 0
    lx = math.log(x)
    pre = math.exp(math.lgamma(A + B) - math.lgamma(A) - math.lgamma(B))
    coef = 1.0
    total = 0.0
    quiet = 0
    for n in range(int(cfg.max_terms)):
        if n > 0:
            coef *= (A + n - 1) * (B + n - 1) / (n * n) * x
        term = coef * (2 * digamma(n + 1) - digamma(A + n) - digamma(B + n) - lx)
        total += term
        if abs(term) / (1.0 - x) <= cfg.rel_tol * abs(total) + cfg.abs_tol:
            quiet += 1
            if quiet >= 3:
                return pre * total
        else:
            quiet = 0
    raise ConvergenceError("logarithmic connection series did not converge")


def gauss_2f1(a, b, c, z, cfg=DEFAULT_SERIES):
    """Real value of F(a, b; c; z) for z <= 0.

    Args:
        a, b: either complex conjugates of each other or both real.
        c: real, positive.
        z: real, non-positive.
        cfg: series stopping rule.

    Returns:
        float

    The direct series is used for |z| <= 1/2, the Pfaff transformation while
    z/(z-1) <= 0.95, and the connection formula around 1 beyond that.
    """
    a = complex(a)
    b = complex(b)
    c = float(np.real(c))
    z = float(z)
    if _is_nonpositive_int(c):
        raise ParameterError("c must not be a non-positive integer")
    if c <= 0:
        raise ParameterError("c must be positive")
    conjugate = abs(b - a.conjugate()) <= 1e-15 * max(1.0, abs(a))
    real = a.imag == 0 and b.imag == 0
    if not (conjugate or real):
        raise ParameterError("a and b must be conjugate or both real")
    if z > 0:
        raise DomainError("gauss_2f1 is defined here for z <= 0 only")
    if z == 0:
        return 1.0
    if -z <= 0.5:
        return float(hyp_series(a, b, c, z, cfg).real)
    w = z / (z - 1.0)
    pref = (1.0 - z) ** (-a)
    if w <= 0.95:
        return float((pref * hyp_series(a, c - b, c, w, cfg)).real)
    return float(_connection(a, b, c, z, w, cfg).real)


def _connection(a, b, c, z, w, cfg):
    x = 1.0 / (1.0 - z)
    d = b - a
    if abs(d) <= 1e-14 * max(1.0, abs(a)):
        if a.imag == 0 and (_is_nonpositive_int(a.real) or _is_nonpositive_int(c - a.real)):
            return (1.0 - z) ** (-a) * hyp_series(a, c - b, c, w, cfg)
        return (1.0 - z) ** (-a) * _log_case(a.real, c - a.real, x, cfg)
    if d.imag == 0 and float(d.real).is_integer():
        # integer gap: the two-term formula degenerates, fall back on Pfaff
        return (1.0 - z) ** (-a) * hyp_series(a, c - b, c, w, cfg)
    t1 = _gamma_ratio_coeff([c, d], [c - a, b]) * hyp_series(a, c - b, a - b + 1, x, cfg)
    t2 = _gamma_ratio_coeff([c, -d], [a, c - b]) * hyp_series(c - a, b, b - a + 1, x, cfg)
    return (1.0 - z) ** (-a) * t1 + (1.0 - z) ** (-b) * t2


def mehler_constant(alpha):
    """c_alpha = Gamma(alpha+1) / (Gamma(1/2) Gamma(alpha+1/2))."""
    if alpha <= -0.5:
        raise DomainError("the Mehler constant needs alpha > -1/2")
    return math.exp(math.lgamma(alpha + 1) - 0.5 * LOG_PI - math.lgamma(alpha + 0.5))


def mehler_kernel(s, t, p, with_constant=False, cfg=DEFAULT_SERIES):
    """Kernel A(s, t) of the Mehler representation of the Jacobi function.

    phi_lambda(t) = c_alpha / Delta(t) * int_0^t A(s, t) cos(lambda s) ds.

    Args:
        s: array of points with 0 <= s < t.
        t: positive time.
        p: object with attributes alpha and beta (alpha > -1/2).
        with_constant: multiply by c_alpha.

    Returns:
        ndarray of non-negative kernel values.
    """
    alpha, beta = float(p.alpha), float(p.beta)
    if alpha <= -0.5:
        raise DomainError("the Mehler kernel needs alpha > -1/2")
    s = np.asarray(s, dtype=float)
    t = float(t)
    if np.any(s < 0) or np.any(s >= t):
        raise DomainError("the Mehler kernel needs 0 <= s < t")
    cht = math.cosh(t)
    gap = 2.0 * np.sinh(t + s) * np.sinh(t - s)  # cosh 2t - cosh 2s
    arg = (cht - np.cosh(s)) / (2.0 * cht)
    hyp = hyp_series(alpha + beta, alpha - beta, alpha + 0.5, arg, cfg).real
    val = (2.0 ** (alpha + 2 * beta + 2.5) * math.sinh(2 * t) * cht ** (beta - alpha)
           * gap ** (alpha - 0.5) * hyp)
    if with_constant:
        val = val * mehler_constant(alpha)
    return val
