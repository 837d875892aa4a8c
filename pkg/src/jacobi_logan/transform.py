"""Jacobi transform pair, quadrature against dmu and dsigma, Gauss rule at Jacobi zeros.

Spectral integrals run over [0, inf) against s(lambda) d lambda. Integrands
that are built from Jacobi functions (SpectralProduct) get an exact treatment
of the tail: each phi_lambda(t) is split as c(lambda)Phi_lambda(t) +
c(-lambda)Phi_-lambda(t), every resulting exponential exp(i lambda omega) is
integrated along a vertical ray where it decays, and only the non-oscillating
part (omega = 0) is integrated along the real axis on geometric panels.
Plain callables fall back to panel sums with Aitken extrapolation.
"""
from dataclasses import dataclass, field, replace
import csv
import enum
import io
import itertools
import math

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.interpolate import CubicSpline
from scipy.special import roots_jacobi

from .errors import (DomainError, ParameterError, RefinementBudgetError,
                     SignViolationError, TailDivergenceError)
from .jacobi import (T_MAX, hc_sum, log_c_function, phi, phi_dlambda,
                     spectral_weight, weight_delta)
from .zeros import lambda_zeros

_GL_X, _GL_W = leggauss(15)
_LOG_2PI = math.log(2 * math.pi)


class TailAccel(enum.Enum):
    NONE = "none"
    AITKEN = "aitken"


@dataclass(frozen=True)
class QuadConfig:
    """Tolerances and budgets for the half-line quadratures."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_panels: int = 20_000
    tail_accel: TailAccel = TailAccel.AITKEN

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise ParameterError("rel_tol must be positive")
        if self.abs_tol < 0:
            raise ParameterError("abs_tol must be non-negative")
        if self.max_panels < 4:
            raise ParameterError("max_panels must be at least 4")


DEFAULT_QUAD = QuadConfig()


# ---------------------------------------------------------------- sampled data

@dataclass(frozen=True)
class SampledFunction:
    """Samples on a strictly increasing grid, interpolated by a cubic spline.

    Outside [grid[0], grid[-1]] (or beyond support_hint when given) the function
    is taken to be zero.
    """

    grid: np.ndarray
    values: np.ndarray
    support_hint: float = None
    _spline: CubicSpline = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        g = np.asarray(self.grid, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if g.ndim != 1 or g.shape != v.shape or len(g) < 2:
            raise ParameterError("grid and values must be 1-d of equal length >= 2")
        if np.any(np.diff(g) <= 0):
            raise ParameterError("grid must be strictly increasing")
        object.__setattr__(self, "grid", g)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "_spline", CubicSpline(g, v))

    @property
    def right(self):
        r = self.grid[-1]
        return min(r, self.support_hint) if self.support_hint is not None else r

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        inside = (x >= self.grid[0]) & (x <= self.right)
        return np.where(inside, self._spline(np.clip(x, self.grid[0], self.grid[-1])), 0.0)

    @classmethod
    def from_csv(cls, text_or_file, support_hint=None):
        """Read two columns (coordinate, value); a non-numeric first row is a header."""
        if hasattr(text_or_file, "read"):
            text = text_or_file.read()
        else:
            text = text_or_file
        rows = [r for r in csv.reader(io.StringIO(text)) if r and any(c.strip() for c in r)]
        pts = []
        for i, r in enumerate(rows):
            try:
                pts.append((float(r[0]), float(r[1])))
            except (ValueError, IndexError):
                if i == 0:
                    continue
                raise ParameterError(f"malformed CSV row {i + 1}: {r!r}")
        arr = np.array(pts, dtype=float)
        if arr.shape[0] < 2:
            raise ParameterError("need at least two samples")
        return cls(arr[:, 0], arr[:, 1], support_hint)

    def to_csv(self, header=("x", "value")):
        return write_csv(self.grid, self.values, header)


def write_csv(x, y, header=("x", "value")):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if header:
        w.writerow(header)
    for a, b in zip(np.asarray(x, dtype=float), np.asarray(y, dtype=float)):
        w.writerow([repr(float(a)), repr(float(b))])
    return buf.getvalue()


# ---------------------------------------------------------------- dmu quadrature

_LAM_BLOCK = 64


def _dmu_rule(p, T, n_sub, breaks):
    """Nodes and weights of the int_0^T (.) Delta dt rule.

    The first panel at the origin absorbs t^(2 alpha+1) into a Gauss-Jacobi
    weight; all other panels are Gauss-Legendre.
    """
    edges = [0.0] + [b for b in breaks if 0 < b < T] + [T]
    xs, ws = [], []
    a = 2 * p.alpha + 1
    for lo, hi in zip(edges[:-1], edges[1:]):
        cuts = np.linspace(lo, hi, n_sub + 1)
        for j, (u, v) in enumerate(zip(cuts[:-1], cuts[1:])):
            half = 0.5 * (v - u)
            if lo == 0.0 and j == 0 and a != 0:
                x, w = roots_jacobi(15, 0.0, a)
                t = u + half * (1 + x)
                smooth = (2.0 ** (2 * p.rho) * (np.sinh(t) / t) ** a
                          * np.cosh(t) ** (2 * p.beta + 1))
                xs.append(t)
                ws.append(w * half ** (a + 1) * smooth)
            else:
                t = u + half * (1 + _GL_X)
                xs.append(t)
                ws.append(_GL_W * half * weight_delta(p, t))
    return np.concatenate(xs), np.concatenate(ws)


def _dmu_apply(p, T, fn, cfg, breaks=()):
    """Integrate fn(t) (possibly vector-valued along axis 0 of the result) against Delta dt."""
    n_sub = 2
    prev = None
    while True:
        t, w = _dmu_rule(p, T, n_sub, breaks)
        vals = np.asarray(fn(t))
        cur = vals @ w if vals.ndim > 1 else float(np.dot(vals, w))
        if prev is not None:
            err = np.max(np.abs(cur - prev))
            if err <= cfg.rel_tol * np.max(np.abs(cur)) + cfg.abs_tol:
                return cur
        prev = cur
        n_sub *= 2
        if n_sub * (len(breaks) + 1) > cfg.max_panels:
            raise RefinementBudgetError(
                f"dmu quadrature did not reach rel_tol={cfg.rel_tol:g} within {cfg.max_panels} panels")


def integrate_dmu(g, T, p, cfg=DEFAULT_QUAD):
    """int_0^T g(t) Delta(t) dt for a vectorised evaluator g."""
    T = float(T)
    if not 0 < T <= T_MAX:
        raise DomainError(f"T must lie in (0, {T_MAX}]")
    breaks = tuple(g.grid) if isinstance(g, SampledFunction) else ()
    return _dmu_apply(p, T, lambda t: g(t), cfg, breaks)


def jacobi_transform(g, p, lam, cfg=DEFAULT_QUAD, T=None):
    """Jg(lambda) = int_0^T g(t) phi_lambda(t) Delta(t) dt.

    g is a SampledFunction (T defaults to its right end) or a vectorised
    evaluator, in which case T is required. lam may be an array.
    """
    if T is None:
        if not isinstance(g, SampledFunction):
            raise ParameterError("T is required for evaluator input")
        T = g.right
    T = float(T)
    if not 0 < T <= T_MAX:
        raise DomainError(f"T must lie in (0, {T_MAX}]")
    lam = np.atleast_1d(np.asarray(lam, dtype=float))
    breaks = tuple(g.grid) if isinstance(g, SampledFunction) else ()
    # blocks of lambda keep the (lambda, node) matrix small on fine sample grids
    out = np.concatenate([
        np.atleast_1d(_dmu_apply(
            p, T, lambda t, lb=lb: phi(p, lb[:, None], t[None, :]) * g(t)[None, :], cfg, breaks))
        for lb in np.array_split(lam, -(-len(lam) // _LAM_BLOCK))])
    return float(out[0]) if out.size == 1 else out


# ---------------------------------------------------------------- structured spectral integrands

def _interp_at(x_nodes, y_nodes, x):
    # barycentric Lagrange interpolation on a handful of nodes
    n = len(x_nodes)
    w = np.ones(n)
    for j in range(n):
        for k in range(n):
            if k != j:
                w[j] /= (x_nodes[j] - x_nodes[k])
    d = x[:, None] - x_nodes[None, :]
    hit = d == 0
    d = np.where(hit, 1.0, d)
    num = (w * y_nodes[None, :] / d).sum(axis=1) if y_nodes.ndim == 1 else None
    den = (w / d).sum(axis=1)
    out = num / den
    if np.any(hit):
        r, c = np.nonzero(hit)
        out[r] = y_nodes[c]
    return out


@dataclass(frozen=True)
class SpectralProduct:
    """f(lambda) = R(lambda) * prod_j phi_lambda(t_j) * prod_k trig(a_k lambda).

    rational: callable on complex lambda, analytic for Re lambda beyond the
        largest entry of `poles`; None stands for R = 1.
    poles: real parts of the singularities of R. Poles on the real axis must be
        cancelled by zeros of the remaining factors so that f is smooth there.
    rdecay: exponent of |R(lambda)| as lambda -> inf.
    trig: pairs ("cos" | "sin", a) with a >= 0.
    """

    params: object
    times: tuple = ()
    rational: object = None
    poles: tuple = ()
    rdecay: float = 0.0
    trig: tuple = ()

    def __post_init__(self):
        ts = tuple(float(t) for t in self.times)
        if any(t < 0 or t > T_MAX for t in ts):
            raise DomainError(f"factor times must lie in [0, {T_MAX}]")
        object.__setattr__(self, "times", tuple(t for t in ts if t > 0))
        object.__setattr__(self, "poles", tuple(complex(z) for z in self.poles))
        for kind, a in self.trig:
            if kind not in ("cos", "sin") or a < 0:
                raise ParameterError(f"bad trig factor {(kind, a)!r}")

    @property
    def decay(self):
        """Exponent of |f(lambda) s(lambda)| at infinity."""
        a = self.params.alpha
        return self.rdecay - (a + 0.5) * len(self.times) + (2 * a + 1)

    @property
    def type_width(self):
        """Exponential type sum t_j + sum a_k."""
        return sum(self.times) + sum(a for _, a in self.trig)

    def with_times(self, *ts):
        return replace(self, times=self.times + tuple(float(t) for t in ts))

    def with_lambda_power(self, k):
        """Multiply by lambda^(2k)."""
        if k == 0:
            return self
        base = self.rational
        return replace(
            self,
            rational=lambda lam, base=base: lam ** (2 * k) * (1.0 if base is None else base(lam)),
            rdecay=self.rdecay + 2 * k)

    def _r(self, lam):
        return 1.0 if self.rational is None else self.rational(lam)

    def raw(self, lam):
        lam = np.asarray(lam, dtype=float)
        val = np.real(self._r(lam.astype(complex))) * np.ones(lam.shape)
        for t in self.times:
            val = val * phi(self.params, lam, t)
        for kind, a in self.trig:
            val = val * (np.cos(a * lam) if kind == "cos" else np.sin(a * lam))
        return val

    def __call__(self, lam):
        """Real evaluation; points next to real poles are interpolated from outside."""
        lam = np.asarray(lam, dtype=float)
        flat = np.abs(lam.ravel())
        out = self.raw(flat)
        width = max(self.type_width, 1e-3)
        offs = np.array([-3, -2.5, -2, -1.5, -1, 1, 1.5, 2, 2.5, 3], dtype=float)
        for z in self.poles:
            if abs(z.imag) > 0 or z.real <= 0:
                continue
            c = z.real
            h = 1e-3 * min(c, 1.0 / width)
            near = np.abs(flat - c) < h
            if np.any(near):
                xn = c + h * offs
                out[near] = _interp_at(xn, self.raw(xn), flat[near])
        return out.reshape(lam.shape) if lam.ndim else float(out[0])

    # -- tail pieces -----------------------------------------------------------

    def _branches(self):
        """Yield (omega, signs) over all choices of exponential branches."""
        n_phi = len(self.times)
        freqs = list(self.times) + [a for _, a in self.trig]
        for signs in itertools.product((1, -1), repeat=len(freqs)):
            omega = sum(s * f for s, f in zip(signs, freqs))
            yield omega, signs[:n_phi], signs[n_phi:]

    def log_amplitude(self, lam, phi_signs, trig_signs, cache):
        """log of R * prod branch amplitudes * s, without the exp(i lambda omega) factor."""
        p = self.params
        key_c = ("c", 1), ("c", -1)
        if key_c[0] not in cache:
            cache[key_c[0]] = log_c_function(p, lam)
            cache[key_c[1]] = log_c_function(p, -lam)
        out = np.log(np.asarray(self._r(lam), dtype=complex) * np.ones(lam.shape))
        out = out - _LOG_2PI - cache[key_c[0]] - cache[key_c[1]]
        for t, e in zip(self.times, phi_signs):
            key = ("S", t, e)
            if key not in cache:
                cache[key] = np.log(hc_sum(p, e * lam, t))
            out = out + cache[("c", e)] - p.rho * t + cache[key]
        for (kind, _), e in zip(self.trig, trig_signs):
            if kind == "cos":
                out = out + math.log(0.5)
            else:
                out = out + np.log(0.5 / 1j * e)
        return out


def _gl_panels(edges):
    edges = np.asarray(edges, dtype=float)
    a, b = edges[:-1], edges[1:]
    half = 0.5 * (b - a)
    x = (a + half)[:, None] + half[:, None] * _GL_X[None, :]
    w = half[:, None] * _GL_W[None, :]
    return x.ravel(), w.ravel()


def _omega_key(omega):
    return 0.0 if abs(omega) < 1e-13 else omega


def _tail_batch(f, ts, lam0):
    """int_{lam0}^inf f(lambda) phi_lambda(t) s(lambda) d lambda for every t in ts (t = 0 drops the factor).

    Each exponential branch exp(i lambda omega) is integrated along the ray
    lam0 + i sign(omega) y, y >= 0, where it decays like exp(-|omega| y). All
    rays share one geometric y-grid so the amplitudes of f are computed once.
    """
    p = f.params
    ts = np.asarray(ts, dtype=float)
    base = list(f._branches())
    omegas = [_omega_key(ob + e * t) for ob, _, _ in base for t in ts
              for e in ((1, -1) if t > 0 else (1,))]
    nonzero = [abs(w) for w in omegas if w != 0.0]
    out = np.zeros(len(ts))
    if nonzero:
        y0 = 0.5 * min(lam0, 1.0 / max(nonzero))
        n = int(math.ceil(math.log2(max(50.0 / (min(nonzero) * y0), 2.0)))) + 1
        y, wy = _gl_panels(np.concatenate(([0.0], y0 * 2.0 ** np.arange(0, n + 1))))
        rays = {1: lam0 + 1j * y, -1: lam0 - 1j * y}
        caches = {1: {}, -1: {}}
        amps = {}
        for d in (1, -1):
            for i, (ob, ps, tsg) in enumerate(base):
                amps[d, i] = np.exp(f.log_amplitude(rays[d], ps, tsg, caches[d]))
    axis = None
    pos = ts > 0
    extra = {}
    if nonzero and np.any(pos):
        for d in (1, -1):
            for e in (1, -1):
                extra[d, e] = np.zeros((len(y), len(ts)), dtype=complex)
                extra[d, e][:, pos] = _phi_branch(p, rays[d], ts[pos], e, caches[d])
    for j, t in enumerate(ts):
        total = 0.0 + 0.0j
        for i, (ob, ps, tsg) in enumerate(base):
            for e in ((1, -1) if t > 0 else (0,)):
                omega = _omega_key(ob + e * t)
                if omega == 0.0:
                    if axis is None:
                        axis = _axis_rule(f, lam0)
                    lam, w, cache, log_amp = axis
                    amp = np.exp(log_amp[i])
                    if e:
                        amp = amp * _phi_branch(p, lam, t, e, cache)
                    total += np.sum(amp * w)
                    continue
                d = 1 if omega > 0 else -1
                amp = amps[d, i]
                if e:
                    amp = amp * extra[d, e][:, j]
                phase = np.exp(1j * lam0 * omega) * np.exp(-abs(omega) * y)
                total += np.sum(amp * phase * (1j * d) * wy)
        out[j] = total.real
    return out


def _phi_branch(p, lam, t, e, cache):
    """c(e lambda) exp(-rho t) S_{e lambda}(t): one half of phi_lambda(t) without exp(i e lambda t)."""
    # lam: 1-d nodes; t: scalar or 1-d, giving a (nodes, times) result
    if ("c", e) not in cache:
        cache[("c", e)] = log_c_function(p, e * lam)
    cl = cache[("c", e)]
    if np.ndim(t):
        lam, cl, t = lam[:, None], cl[:, None], np.asarray(t)[None, :]
    return np.exp(cl - p.rho * t + np.log(hc_sum(p, e * lam, t)))


def _axis_rule(f, lam0):
    # real half-line beyond lam0 on doubling panels up to ~1e16 lam0
    x, w = _gl_panels(lam0 * 2.0 ** np.arange(0, 55))
    lam = x.astype(complex)
    cache = {}
    log_amp = [f.log_amplitude(lam, ps, tsg, cache) for _, ps, tsg in f._branches()]
    return lam, w, cache, log_amp


def _real_batch(f, ts, lam0, cfg, extra_breaks=()):
    """int_0^{lam0} f(lambda) phi_lambda(t) s(lambda) d lambda for every t, refined by panel halving."""
    p = f.params
    ts = np.asarray(ts, dtype=float)
    width = max(f.type_width + float(np.max(ts)), 1e-3)
    w = min(math.pi / width, 1.0)
    if p.rho > 0:
        # s(lambda) has singularities at distance min(rho, alpha-beta+1) from the axis
        w = min(w, 0.5 * min(p.rho, p.alpha - p.beta + 1))
    for z in f.poles:
        if z.imag != 0 and abs(z.real) < lam0:
            w = min(w, 0.5 * abs(z.imag))
    brk = sorted({0.0, lam0} | {z.real for z in f.poles if z.imag == 0 and 0 < z.real < lam0}
                 | {b for b in extra_breaks if 0 < b < lam0})
    prev = None
    while True:
        edges = [brk[0]]
        for lo, hi in zip(brk[:-1], brk[1:]):
            k = max(1, int(math.ceil((hi - lo) / w)))
            edges.extend(np.linspace(lo, hi, k + 1)[1:])
        x, wt = _gl_panels(edges)
        fs = f(x) * spectral_weight_safe(p, x) * wt
        mat = np.ones((len(x), len(ts)))
        pos = ts > 0
        if np.any(pos):
            mat[:, pos] = phi(p, x[:, None], ts[None, pos])
        val = fs @ mat
        scale = np.abs(fs) @ np.abs(mat)
        if prev is not None:
            if np.all(np.abs(val - prev) <= cfg.rel_tol * scale + cfg.abs_tol):
                return val
        prev = val
        w *= 0.5
        if len(edges) - 1 > cfg.max_panels:
            raise RefinementBudgetError("spectral quadrature exceeded its panel budget")


def spectral_weight_safe(p, lam):
    lam = np.asarray(lam, dtype=float)
    return np.where(lam > 0, spectral_weight(p, np.where(lam > 0, lam, 1.0)), 0.0)


def _cutoff(f):
    real_poles = [abs(z.real) for z in f.poles] or [0.0]
    return max(40.0, 1.1 * max(real_poles) + 10.0)


def _check_decay(decay):
    if decay is None:
        raise TailDivergenceError("a decay exponent must be declared for spectral integrands")
    if decay > -2:
        raise TailDivergenceError(
            f"declared decay exponent {decay} of f*s is slower than lambda^-2")


def _check_structured_decay(f, lam0):
    # Oscillating branches converge for any negative exponent once rotated;
    # only a surviving zero-frequency branch needs the lambda^-2 bound.
    if f.decay >= 0:
        raise TailDivergenceError(f"decay exponent {f.decay} of f*s does not decay")
    if f.decay <= -2:
        return
    lam = np.array([lam0], dtype=complex)
    cache = {}
    parts = [np.exp(f.log_amplitude(lam, ps, ts, cache))[0]
             for omega, ps, ts in f._branches() if abs(omega) < 1e-13]
    if parts and abs(sum(parts)) > 1e-12 * sum(abs(v) for v in parts):
        raise TailDivergenceError(
            f"decay exponent {f.decay} of f*s is slower than lambda^-2 on a non-oscillating part")


def integrate_dsigma(f, p=None, cfg=DEFAULT_QUAD, decay=None, scale=1.0, breaks=()):
    """int_0^inf f(lambda) s(lambda) d lambda.

    f is a SpectralProduct (tail by contour rotation) or a vectorised callable
    whose product with s decays like lambda^decay, decay <= -2 (tail by panel
    sums of width pi/(2 scale) and Aitken extrapolation).
    """
    if isinstance(f, SpectralProduct):
        return float(_structured_batch(f, np.zeros(1), cfg, breaks)[0])
    if p is None:
        raise ParameterError("JacobiParams are required for a plain callable")
    _check_decay(decay if decay is not None else getattr(f, "decay", None))
    return _generic_dsigma(f, p, cfg, scale, breaks)


def _structured_batch(f, ts, cfg, breaks=()):
    lam0 = _cutoff(f)
    for t in ts:
        g = f.with_times(t) if t > 0 else f
        if g.decay > -2 or g is f:
            _check_structured_decay(g, lam0)
    return _real_batch(f, ts, lam0, cfg, breaks) + _tail_batch(f, ts, lam0)


def aitken(seq):
    """One Aitken Delta^2 pass over a sequence of partial sums."""
    s = np.asarray(seq, dtype=float)
    d1 = s[1:-1] - s[:-2]
    d2 = s[2:] - 2 * s[1:-1] + s[:-2]
    safe = np.abs(d2) > 1e-300
    out = s[2:].copy()
    out[safe] = s[2:][safe] - (s[2:][safe] - s[1:-1][safe]) ** 2 / d2[safe]
    return out


def aitken_limit(seq, passes=3):
    s = np.asarray(seq, dtype=float)
    for _ in range(passes):
        if len(s) < 3:
            break
        s = aitken(s)
    return float(s[-1])


def panel_sums(fun, edges):
    """Integrals of fun over consecutive panels [edges[i], edges[i+1]] (Gauss-Legendre 15)."""
    x, w = _gl_panels(np.asarray(edges, dtype=float))
    return (fun(x) * w).reshape(len(edges) - 1, -1).sum(axis=1)


def _generic_dsigma(f, p, cfg, scale, breaks):
    width = math.pi / (2 * scale)
    integrand = lambda lam: np.asarray(f(lam)) * spectral_weight_safe(p, lam)
    lam0 = max(40.0, 40 * width)
    head = float(_real_batch(_Plain(f, p, scale), np.zeros(1), lam0, cfg, breaks)[0])
    edges = lam0 + width * np.arange(0, 401)
    partial = np.cumsum(panel_sums(integrand, edges))
    if cfg.tail_accel is TailAccel.AITKEN:
        return head + aitken_limit(partial[-60:])
    return head + float(partial[-1])


@dataclass(frozen=True)
class _Plain:
    fun: object
    params: object
    scale: float
    poles: tuple = ()

    @property
    def type_width(self):
        return 2 * self.scale

    def __call__(self, lam):
        return np.asarray(self.fun(lam), dtype=float)


def inverse_jacobi_transform(f, p, t, cfg=DEFAULT_QUAD, decay=None, scale=1.0):
    """J^-1 f(t) = int_0^inf f(lambda) phi_lambda(t) d sigma(lambda); t may be an array.

    SpectralProduct input is handled for all t at once.
    """
    ts = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(ts < 0) or np.any(ts > T_MAX):
        raise DomainError(f"t must lie in [0, {T_MAX}]")
    if isinstance(f, SpectralProduct):
        out = _structured_batch(f, ts, cfg)
    else:
        out = np.empty(ts.shape)
        for i, tv in enumerate(ts):
            g = lambda lam, tv=tv: np.asarray(f(lam)) * phi(p, lam, tv)
            out[i] = integrate_dsigma(g, p, cfg, decay=decay if decay is not None
                                      else getattr(f, "decay", None), scale=scale + tv)
    return float(out[0]) if np.ndim(t) == 0 else out


def inverse_from_samples(f, p, t, sub=4):
    """J^-1 f(t) for spectral samples, taking f = 0 beyond the last sample.

    Gauss-Legendre on every sample interval, split `sub` times, so that the
    spline pieces and the oscillation of phi_lambda(t) are both resolved.
    """
    if not isinstance(f, SampledFunction):
        raise ParameterError("inverse_from_samples expects a SampledFunction")
    ts = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(ts < 0) or np.any(ts > T_MAX):
        raise DomainError(f"t must lie in [0, {T_MAX}]")
    g = np.clip(f.grid, 0.0, None)
    edges = np.unique(np.concatenate([np.linspace(a, b, sub + 1)
                                      for a, b in zip(g[:-1], g[1:]) if b > a]))
    lam, w = _gl_panels(edges)
    weights = w * np.asarray(f(lam)) * spectral_weight_safe(p, lam)
    out = phi(p, lam[None, :], ts[:, None]) @ weights
    return float(out[0]) if np.ndim(t) == 0 else out


def translate_spectral(f_hat, p, t, x, cfg=DEFAULT_QUAD):
    """Generalised translation T^t applied through the spectrum: int phi(t) phi(x) f_hat d sigma."""
    if not isinstance(f_hat, SpectralProduct):
        raise ParameterError("translate_spectral expects a SpectralProduct")
    return integrate_dsigma(f_hat.with_times(t, x), cfg=cfg)


# ---------------------------------------------------------------- Gauss rule

@dataclass(frozen=True)
class GaussRule:
    """Nodes lambda_k(tau) with positive weights gamma_k of the rule int f d sigma = sum gamma_k f(lambda_k)."""

    tau: float
    nodes: np.ndarray = field(repr=False)
    weights: np.ndarray = field(repr=False)

    @property
    def count(self):
        return len(self.nodes)

    def apply(self, f):
        """Gauss sum over every node of the rule.

        No early exit on small terms: a term can vanish structurally (a factor
        of f sharing a zero with phi_lambda(tau)) while later ones do not.
        """
        vals = np.asarray(f(self.nodes), dtype=float) * self.weights
        return float(math.fsum(vals))


def cardinal(p, tau, lam_k):
    """l_k(lambda) = phi_lambda(tau)^2 / (1 - lambda^2/lambda_k^2)^2."""
    return SpectralProduct(
        p, times=(tau, tau),
        rational=lambda lam: 1.0 / (1.0 - lam ** 2 / lam_k ** 2) ** 2,
        poles=(lam_k,), rdecay=-4.0)


def gauss_rule(p, tau, count, cfg=DEFAULT_QUAD):
    """Weights gamma_k = int l_k d sigma / l_k(lambda_k) at the first `count` zeros."""
    if int(count) != count or not 1 <= count <= 200:
        raise ParameterError("count must be an integer in 1..200")
    nodes = lambda_zeros(p, tau, count).zeros
    weights = np.empty(count)
    for k, lk in enumerate(nodes):
        num = integrate_dsigma(cardinal(p, tau, lk), cfg=cfg)
        d = phi_dlambda(p, lk, tau)
        weights[k] = num / (lk * d / 2) ** 2
    if np.any(weights <= 0):
        bad = int(np.nonzero(weights <= 0)[0][0])
        raise SignViolationError(f"Gauss weight {bad + 1} is {weights[bad]:.3e}")
    return GaussRule(tau=float(tau), nodes=nodes, weights=weights)


# ---------------------------------------------------------------- Paley-Wiener support test

@dataclass
class SupportReport:
    passed: bool
    tau: float
    at_zero: float
    worst: float
    worst_t: float
    profile_t: list
    profile: list
    degenerate: bool = False
    note: str = ""

    def as_dict(self):
        return {"pass": self.passed, "tau": self.tau, "at_zero": self.at_zero,
                "worst": self.worst, "worst_t": self.worst_t, "degenerate": self.degenerate,
                "note": self.note}


def paley_wiener_test(f, p, tau, cfg=DEFAULT_QUAD, delta=0.02, eps=1e-4, n=40,
                      t_max=None, decay=None, scale=1.0):
    """Is J^-1 f negligible on [tau(1+delta), t_max]?  Returns a SupportReport.

    Support of J^-1 f inside [0, tau] is the membership criterion for the
    bandlimited class of type tau. "Negligible" is relative to sup |J^-1 f| on
    [0, tau]; the value at 0 alone can vanish, e.g. when f has mean zero.
    """
    tau = float(tau)
    t_max = min(T_MAX, 4 * tau + 1.0) if t_max is None else float(t_max)
    at0 = float(inverse_jacobi_transform(f, p, 0.0, cfg, decay=decay, scale=scale))
    probe = np.linspace(0.0, 40.0, 81)
    fvals = np.asarray(f(probe), dtype=float)
    ts = np.linspace(tau * (1 + delta), t_max, n)
    if not np.any(fvals != 0) and at0 == 0:
        return SupportReport(False, tau, at0, 0.0, float(ts[0]), [], [], True,
                             "identically zero input")
    prof = np.asarray(inverse_jacobi_transform(f, p, ts, cfg, decay=decay, scale=scale))
    inner = np.asarray(inverse_jacobi_transform(f, p, np.linspace(0.0, tau, n + 1)[1:], cfg,
                                                decay=decay, scale=scale))
    ref = max(abs(at0), float(np.max(np.abs(inner))))
    i = int(np.argmax(np.abs(prof)))
    worst = float(abs(prof[i]))
    ok = worst <= eps * ref
    return SupportReport(bool(ok), tau, at0, worst, float(ts[i]),
                         [float(v) for v in ts], [float(v) for v in prof])
