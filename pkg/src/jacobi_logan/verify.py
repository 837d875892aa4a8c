"""Verification suites with JSON-ready reports.

Each suite returns a Report whose checks carry a measured value, the
tolerance it is held to and a verdict. The suites are deterministic: random
samples come from a seeded generator and every reduction runs in a fixed order.
"""
from dataclasses import dataclass, field
import math

import numpy as np
from scipy.special import roots_jacobi

from .errors import JacobiError
from .jacobi import (JacobiParams, phi, phi_dt, spectral_weight, spectral_weight_leading,
                     weight_delta)
from .logan import (BasisKind, EigenExpansion, ExtremizerKind, build_extremizer,
                    chebyshev_family, chebyshev_zero_count, derivatives_at_tau,
                    derivatives_fd, lambda_sup, p_polynomial, partial_fraction_coefficients,
                    sign_pattern, verify_orthogonality)
from .specfun import mehler_kernel
from .transform import (DEFAULT_QUAD, SpectralProduct, gauss_rule, integrate_dmu,
                        integrate_dsigma, inverse_jacobi_transform)
from .zerocount import build_G, r_polynomial, shape_checks, star_sum
from .zeros import lambda_star_zeros, lambda_zeros

SUITES = ("core", "logan", "zerocount", "chebyshev", "all")
DEFAULT_SEED = 20240607


@dataclass
class Check:
    name: str
    value: float
    tolerance: float
    passed: bool

    def as_dict(self):
        return {"name": self.name, "value": self.value, "tolerance": self.tolerance,
                "pass": self.passed}


@dataclass
class Report:
    suite: str
    params: dict
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def add(self, name, value, tolerance, mode="le"):
        """Record value against tolerance: mode le (value <= tol), ge, or gt."""
        value = None if value is None else float(value)
        if value is None or not math.isfinite(value):
            ok = False
            value = None if value is None or math.isnan(value) else value
        elif mode == "le":
            ok = value <= tolerance
        elif mode == "ge":
            ok = value >= tolerance
        else:
            ok = value > tolerance
        self.checks.append(Check(name, value, float(tolerance), bool(ok)))

    def guard(self, name, fn):
        """Run fn(); a library error becomes a failed check instead of a crash."""
        try:
            fn()
        except (JacobiError, ArithmeticError, ValueError) as exc:
            self.checks.append(Check(f"{name}: {type(exc).__name__}: {exc}", None, 0.0, False))

    def extend(self, other):
        self.checks.extend(other.checks)

    def as_dict(self):
        return {"suite": self.suite, "params": dict(self.params),
                "checks": [c.as_dict() for c in self.checks]}


def _rel(a, b, floor=1e-300):
    return float(np.max(np.abs(a - b) / np.maximum(np.abs(b), floor)))


# ---------------------------------------------------------------- core

def recurrence_residual(p, lam, t):
    """Relative residual of the three-term relation linking (alpha,beta), +1 and +2 shifts."""
    a, b = p.alpha, p.beta
    sh, ch = np.sinh(t), np.cosh(t)
    lhs = ((lam ** 2 + (a + b + 3) ** 2) * (sh * ch) ** 2 / (4 * (a + 1) * (a + 2))
           * phi(p.shifted(2), lam, t))
    mid = ((a + 1) * ch ** 2 + (b + 1) * sh ** 2) / (a + 1) * phi(p.shifted(1), lam, t)
    rhs = mid - phi(p, lam, t)
    return np.abs(lhs - rhs) / np.maximum(np.abs(mid), 1.0)


def derivative_identity_residual(p, lam, t):
    """(sh^(2a+2) ch^(2b+2) phi^(a+1,b+1))' = 2(a+1) sh^(2a+1) ch^(2b+1) phi, by differences.

    The residual is relative to 2(a+1) sh^(2a+1) ch^(2b+1), the size of the
    right side when |phi| = 1.
    """
    a, b = p.alpha, p.beta
    q = p.shifted(1)
    g = lambda s: np.sinh(s) ** (2 * a + 2) * np.cosh(s) ** (2 * b + 2) * phi(q, lam, s)
    d = derivatives_fd(g, t, max_order=1, h=0.05 * min(t, 1.0, 1.0 / max(lam, 1.0)))[1]
    size = 2 * (a + 1) * math.sinh(t) ** (2 * a + 1) * math.cosh(t) ** (2 * b + 1)
    return abs(d - size * phi(p, lam, t)) / size


def wronskian_residual(p, mu, lam, tau):
    """int_0^tau Delta phi_mu phi_lam dt by quadrature against its closed form."""
    direct = integrate_dmu(lambda t: phi(p, mu, t) * phi(p, lam, t), tau, p)
    closed = (weight_delta(p, tau) * (phi(p, mu, tau) * phi_dt(p, lam, tau)
                                      - phi_dt(p, mu, tau) * phi(p, lam, tau))
              / (mu ** 2 - lam ** 2))
    # Cauchy-Schwarz bound on the integral, with smooth integrands
    scale = math.sqrt(integrate_dmu(lambda t: phi(p, mu, t) ** 2, tau, p)
                      * integrate_dmu(lambda t: phi(p, lam, t) ** 2, tau, p))
    return abs(direct - closed) / scale


def mehler_value(p, lam, t, nodes=None):
    """phi_lambda(t) from the cosine-transform representation, by Gauss-Jacobi quadrature.

    With s = t(1+x)/2 the kernel behaves like (1-x)^(alpha-1/2) at s = t, which
    the Gauss-Jacobi weight absorbs.
    """
    e = p.alpha - 0.5
    if nodes is None:
        nodes = int(0.5 * lam * t) + 80
    x, w = roots_jacobi(nodes, e, 0.0)
    s = 0.5 * t * (1 + x)
    kern = mehler_kernel(s, t, p, with_constant=True)
    smooth = kern / (t - s) ** e * (0.5 * t) ** e
    integral = 0.5 * t * float(np.sum(w * smooth * np.cos(lam * s)))
    return integral / weight_delta(p, t)


def gauss_test_functions(p, tau):
    """Integrable entire functions of exponential type at most 2 tau, as SpectralProducts.

    Real poles sit on zeros of the phi factors, so every product is entire.
    """
    def poles(t, count, power):
        z = lambda_zeros(p, t, count).zeros
        zz = tuple(float(v) for v in z)
        def rat(lam):
            # exactly on a pole the value is discarded by the evaluator
            with np.errstate(divide="ignore", invalid="ignore"):
                return np.prod([(1.0 - lam ** 2 / v ** 2) ** -power for v in zz], axis=0)
        return rat, zz, -2.0 * power * count

    out = []
    for name, times, (pt, count, power) in (
            ("tau_half_half", (tau, tau / 2, tau / 2), (tau, 2, 1)),
            ("quarter_fold", (tau / 2,) * 4, (tau / 2, 2, 2)),
            ("tau_split", (tau, 0.4 * tau, 0.6 * tau), (tau, 3, 1)),
            ("three_quarter_pair", (0.75 * tau, 0.75 * tau, 0.25 * tau, 0.25 * tau),
             (0.75 * tau, 2, 2)),
            ("lopsided", (0.9 * tau, 0.9 * tau, 0.1 * tau, 0.1 * tau), (0.9 * tau, 2, 2))):
        rat, zz, rd = poles(pt, count, power)
        out.append((name, SpectralProduct(p, times=times, rational=rat, poles=zz, rdecay=rd)))
    return out


def core_suite(p, tau=1.0, samples=2000, seed=DEFAULT_SEED, gauss_nodes=40):
    rep = Report("core", {"alpha": p.alpha, "beta": p.beta, "tau": tau, "samples": samples,
                          "seed": seed})
    rng = np.random.default_rng(seed)
    lam = rng.uniform(0.0, 50.0, samples)
    t = rng.uniform(0.0, 5.0, samples)

    def bounds():
        rep.add("phi_bounded_by_one", float(np.max(np.abs(phi(p, lam, t)))) - 1.0, 1e-10)
        rep.add("phi0_positive", float(np.min(phi(p, 0.0, t))), 0.0, "gt")
    rep.guard("bounds", bounds)

    def interlacing():
        z = lambda_zeros(p, tau, 20).zeros
        zs = lambda_star_zeros(p, tau, 20).zeros
        merged = np.empty(40)
        merged[0::2], merged[1::2] = z, zs
        rep.add("interlacing_min_gap", float(np.min(np.diff(merged))), 0.0, "gt")
    rep.guard("interlacing", interlacing)

    def identities():
        k = 20
        lk, tk = lam[:k], np.maximum(t[:k], 0.05)
        rep.add("recurrence_residual", float(np.max(recurrence_residual(p, lk, tk))), 1e-8)
        rep.add("derivative_identity_residual",
                max(derivative_identity_residual(p, float(a), float(b))
                    for a, b in zip(lk[:8], tk[:8])), 1e-6)
        mus = rng.uniform(0.0, 20.0, 6)
        las = rng.uniform(0.0, 20.0, 6)
        rep.add("wronskian_integral_residual",
                max(wronskian_residual(p, float(a), float(b), tau) for a, b in zip(mus, las)),
                1e-6)
        if p.alpha > -0.5:
            errs = [abs(mehler_value(p, float(a), float(b)) - phi(p, float(a), float(b)))
                    for a, b in zip(lk[:10], tk[:10])]
            rep.add("mehler_vs_series", max(errs), 1e-6)
    rep.guard("identities", identities)

    def asymptotics():
        grid = np.linspace(50.0, 500.0, 46)
        ratio = spectral_weight(p, grid) / spectral_weight_leading(p, grid)
        rep.add("weight_asymptotic_ratio_times_lambda", float(np.max(np.abs(ratio - 1) * grid)),
                5.0)
    rep.guard("asymptotics", asymptotics)

    def gauss():
        rule = gauss_rule(p, tau, gauss_nodes)
        rep.add("gauss_min_weight", float(np.min(rule.weights)), 0.0, "gt")
        for name, f in gauss_test_functions(p, tau):
            direct = integrate_dsigma(f)
            rep.add(f"gauss_exact_{name}", abs(rule.apply(f) - direct) / abs(direct), 1e-5)
    rep.guard("gauss", gauss)
    return rep


# ---------------------------------------------------------------- logan

def _pf_residual(nodes):
    x = np.asarray(nodes) ** 2
    a = partial_fraction_coefficients(nodes)
    top = float(x[-1])
    probe = np.linspace(0.0, 1.5 * top, 97)
    probe = probe[np.min(np.abs(probe[:, None] - x[None, :]), axis=1) > 1e-3 * top]
    lhs = np.sum(a[None, :] / (x[None, :] - probe[:, None]), axis=1)
    rhs = 1.0 / np.prod(1.0 - probe[:, None] / x[None, :], axis=1)
    return _rel(lhs, rhs)


def transform_grid(tau, points):
    """Uniform grid of [0, 2 tau] with the given number of points."""
    return np.linspace(0.0, 2 * tau, points)


def logan_suite(p, m=2, tau=1.0, points=101):
    rep = Report("logan", {"alpha": p.alpha, "beta": p.beta, "m": m, "tau": tau,
                           "points": points})

    def structure():
        g = p_polynomial(p, m, tau)
        rep.add("B_min", float(np.min(g.coefficients)), 0.0, "gt")
        rep.add("partial_fractions", _pf_residual(g.frequencies), 1e-10)
        n = 2 * m - 1
        vals, scale = derivatives_at_tau(p, g, n, with_scale=True)
        rel = np.abs(vals) / scale
        rep.add("derivatives_vanish_to_2m-2", float(np.max(rel[1:n], initial=0.0)), 1e-6)
        rep.add("derivative_2m-1_nonzero", float(rel[n]), 1e-2, "ge")
        fd = derivatives_fd(g, tau, max_order=min(4, n))
        rep.add("derivatives_fd_agree", float(np.max(np.abs(fd - vals[:len(fd)])
                                                    / scale[:len(fd)])), 1e-5)
        h = EigenExpansion(g.coefficients, g.frequencies, BasisKind.PSI, tau, p)
        shape = shape_checks(p, g, h, n)
        rep.add("p_positive_on_[0,tau)", float(shape["positive_before_theta"]), 1.0, "ge")
        rep.add("p_decreasing_on_(0,tau)", float(shape["decreasing"]), 1.0, "ge")
    rep.guard("structure", structure)

    def inverse():
        g = p_polynomial(p, m, tau)
        ext = build_extremizer(p, m, tau, ExtremizerKind.F_M)
        ts = transform_grid(tau, points)
        if ext.decay >= -1:
            # int F_m d sigma diverges at t = 0; the transform pair holds for t > 0
            ts = ts[1:]
        vals = inverse_jacobi_transform(ext.product, p, ts)
        p0 = g(0.0)
        inside = ts <= tau
        rep.add("inverse_matches_p_on_[0,tau]",
                float(np.max(np.abs(vals[inside] - g(ts[inside])))) / p0, 1e-5)
        rep.add("inverse_vanishes_on_(tau,2tau]",
                float(np.max(np.abs(vals[~inside]), initial=0.0)) / p0, 1e-5)
    rep.guard("inverse_transform", inverse)

    def positive_definite():
        ext = build_extremizer(p, m, tau)
        vals = inverse_jacobi_transform(ext.product, p, transform_grid(tau, points))
        rep.add("inverse_f_nonnegative_scaled",
                float(-np.min(vals) / np.max(np.abs(vals))), 1e-6)
    rep.guard("positive_definite", positive_definite)

    def orthogonality():
        orth = verify_orthogonality(p, m, tau, DEFAULT_QUAD)
        rep.add("orthogonality_max_ratio", max(r["ratio"] for r in orth.rows), 1e-6)
    rep.guard("orthogonality", orthogonality)

    def logan_functional():
        ext = build_extremizer(p, m, tau)
        lam_m = float(ext.zeros[-1])
        rep.add("lambda_sup_equals_lambda_m", abs(lambda_sup(ext, m) - lam_m), 1e-8)
        pat = sign_pattern(ext)
        rep.add("sign_pattern_beyond_lambda_m", float(sum(not s for s in pat.expected)), 0.0)
    rep.guard("logan_functional", logan_functional)
    return rep


# ---------------------------------------------------------------- zerocount

def zerocount_suite(p, n_max=6, gammas=(1.0, 2.0, math.pi), tau=1.0):
    rep = Report("zerocount", {"alpha": p.alpha, "beta": p.beta, "n_max": n_max,
                               "gammas": [float(g) for g in gammas], "tau": tau})
    m_max = max(1, n_max // 2)

    def sums():
        rep.add("star_sum_is_one",
                max(abs(star_sum(p, m, tau) - 1.0) for m in range(1, m_max + 1)), 1e-10)
    rep.guard("star_sum", sums)

    def r_mult():
        for m in range(1, m_max + 1):
            r = r_polynomial(p, m, tau)
            vals, scale = derivatives_at_tau(p, r, 2 * m, with_scale=True)
            rel = np.abs(vals) / scale
            rep.add(f"r{m}_orders_vanish", float(np.max(rel[:2 * m])), 1e-6)
            rep.add(f"r{m}_order_{2 * m}_nonzero", float(rel[2 * m]), 1e-2, "ge")
    rep.guard("r_multiplicity", r_mult)

    for gamma in gammas:
        for n in range(1, n_max + 1):
            def cert(n=n, gamma=gamma):
                c = build_G(p, n, gamma)
                failed = [k for k, v in c.checks.items() if not v]
                rep.add(f"G{n}_gamma={gamma:.6g}_failed_checks", float(len(failed)), 0.0)
            rep.guard(f"G{n}_gamma={gamma:.6g}", cert)
    return rep


# ---------------------------------------------------------------- chebyshev

# phi_mu_const stands in for phi_mu, which misses the constant Neumann eigenfunction
CHEBYSHEV_FAMILIES = ("phi_lambda", "phi_mu_const", "dphi_mu", "dphi_lambda",
                      "phi_mu_shifted", "psi_lambda", "psi_star_const", "dpsi_star",
                      "psi_star_shifted")
# families whose k-th member is the k-th eigenfunction of a Sturm-Liouville problem
EIGEN_FAMILIES = ("phi_lambda", "phi_mu_const", "dphi_mu", "psi_lambda", "psi_star_const")


def chebyshev_trials(fam, size, trials, rng, grid_n=10_000):
    """Largest zero count over random combinations of the first `size` members."""
    _, mat = fam.sample(grid_n)
    worst = 0
    for _ in range(trials):
        c = rng.standard_normal(size)
        zc = chebyshev_zero_count(mat, c, fam.interval, fam.closed, n=grid_n)
        worst = max(worst, zc.count)
    return worst


def eigen_zero_counts(fam, grid_n=10_000):
    """Zero counts of each member taken alone."""
    _, mat = fam.sample(grid_n)
    out = []
    for k in range(len(fam.functions)):
        c = np.zeros(k + 1)
        c[k] = 1.0
        out.append(chebyshev_zero_count(mat, c, fam.interval, fam.closed, n=grid_n).count)
    return out


def chebyshev_suite(p, tau=1.0, size=6, trials=100, seed=DEFAULT_SEED,
                    families=CHEBYSHEV_FAMILIES):
    rep = Report("chebyshev", {"alpha": p.alpha, "beta": p.beta, "tau": tau, "size": size,
                               "trials": trials, "seed": seed})
    rng = np.random.default_rng(seed)
    for name in families:
        if name.startswith(("phi", "dphi")) and p.alpha <= -0.5:
            continue

        def run(name=name):
            fam = chebyshev_family(p, tau, name, size)
            rep.add(f"{name}_max_zeros", float(chebyshev_trials(fam, size, trials, rng)),
                    size - 1)
            if name in EIGEN_FAMILIES:
                counts = eigen_zero_counts(fam)
                off = max(abs(c - k) for k, c in enumerate(counts))
                rep.add(f"{name}_kth_member_has_k-1_zeros", float(off), 0.0)
        rep.guard(name, run)
    return rep


# ---------------------------------------------------------------- dispatch

def run_suite(suite, p, m=2, tau=1.0, n_max=6, gammas=(1.0, 2.0, math.pi), size=6,
              trials=100, seed=DEFAULT_SEED, points=101):
    if suite == "core":
        return core_suite(p, tau, seed=seed)
    if suite == "logan":
        return logan_suite(p, m, tau, points)
    if suite == "zerocount":
        return zerocount_suite(p, n_max, gammas, tau)
    if suite == "chebyshev":
        return chebyshev_suite(p, tau, size, trials, seed)
    if suite == "all":
        parts = [run_suite(s, p, m, tau, n_max, gammas, size, trials, seed, points)
                 for s in SUITES[:-1]]
        rep = Report("all", {})
        for part in parts:
            rep.params.update(part.params)
            for c in part.checks:
                rep.checks.append(Check(f"{part.suite}.{c.name}", c.value, c.tolerance,
                                        c.passed))
        return rep
    raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
