"""Command-line interface.

    jacobi-logan eval phi --alpha 0.5 --beta -0.5 --lam 2 --t 0.5
    jacobi-logan zeros --alpha -0.5 --beta -0.5 --tau 1 --count 3 --kind lambda
    jacobi-logan verify --suite logan --m 2 --alpha 0.5 --beta -0.5 --tau 1

Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.
"""
import argparse
import json
import math
import sys

import numpy as np

from .errors import JacobiError
from .hyperboloid import logan_bound, params_for_dim, spherical_extremizer
from .jacobi import JacobiParams, phi, psi, spectral_weight, weight_delta
from .logan import ExtremizerKind, build_extremizer, lambda_sup, p_polynomial
from .transform import (QuadConfig, SampledFunction, gauss_rule, inverse_from_samples,
                        jacobi_transform, write_csv)
from .verify import DEFAULT_SEED, SUITES, run_suite
from .zerocount import build_G
from .zeros import zero_table


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def parse_grid(text):
    """'a:b:n' -> n equally spaced points from a to b."""
    try:
        a, b, n = text.split(":")
        a, b, n = float(a), float(b), int(n)
    except ValueError:
        raise UsageError(f"grid must look like a:b:n, got {text!r}")
    if n < 2 or not (math.isfinite(a) and math.isfinite(b)) or b <= a:
        raise UsageError(f"grid needs a < b and n >= 2, got {text!r}")
    return np.linspace(a, b, n)


def _params(args):
    has_ab = args.alpha is not None or args.beta is not None
    if has_ab and args.d is not None:
        raise UsageError("give either --alpha/--beta or --d, not both")
    if args.d is not None:
        return params_for_dim(args.d).jacobi
    if args.alpha is None or args.beta is None:
        raise UsageError("both --alpha and --beta are required (or --d)")
    return JacobiParams(args.alpha, args.beta)


def _quad(args):
    if args.rel_tol is None:
        return QuadConfig()
    if not args.rel_tol > 0:
        raise UsageError("--rel-tol must be positive")
    return QuadConfig(rel_tol=args.rel_tol)


def _dump_json(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def _table(args, x, y, header):
    if args.format == "json":
        return _dump_json({header[0]: [float(v) for v in x], header[1]: [float(v) for v in y]})
    return write_csv(x, y, None if args.no_header else header)


def _grid_csv(args, x, y, header):
    return write_csv(x, y, None if args.no_header else header)


# ---------------------------------------------------------------- subcommands

def cmd_eval(args):
    p = _params(args)
    fun = args.function
    over = args.over or ("lam" if fun in ("weight", "sweight") else "t")
    if args.emit_grid:
        x = parse_grid(args.emit_grid)
    else:
        x = np.array([args.lam if over == "lam" else args.t])
    if fun in ("phi", "psi"):
        f = phi if fun == "phi" else psi
        y = f(p, x, args.t) if over == "lam" else f(p, args.lam, x)
    elif fun == "weight":
        y = spectral_weight(p, x) if over == "lam" else weight_delta(p, x)
    else:
        # the weight of the psi problem, phi_0^2 Delta
        if over == "lam":
            raise UsageError("sweight is a function of t; use --over t")
        y = phi(p, 0.0, x) ** 2 * weight_delta(p, x)
    y = np.atleast_1d(y)
    return _table(args, x, y, (over, fun)), 0


def cmd_zeros(args):
    p = _params(args)
    table = zero_table(p, args.tau, args.count, args.kind)
    k = np.arange(1, args.count + 1)
    if args.format == "json":
        return _dump_json({"kind": args.kind, "tau": args.tau, "params": p.as_dict(),
                           "zeros": table.as_list()}), 0
    lines = [] if args.no_header else [f"k,{args.kind}_k"]
    lines += [f"{i},{float(z)!r}" for i, z in zip(k, table.zeros)]
    return "\n".join(lines) + "\n", 0


def cmd_quadrature(args):
    p = _params(args)
    rule = gauss_rule(p, args.tau, args.count, _quad(args))
    return _table(args, rule.nodes, rule.weights, ("node", "weight")), 0


def _read_input(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_transform(args):
    p = _params(args)
    data = SampledFunction.from_csv(_read_input(args.input))
    if args.emit_grid:
        x = parse_grid(args.emit_grid)
    elif args.direction == "forward":
        x = np.linspace(0.0, 20.0, 101)
    else:
        x = np.linspace(0.0, 2.0, 101)
    if args.direction == "forward":
        y = np.atleast_1d(jacobi_transform(data, p, x, _quad(args)))
        header = ("lambda", "Jg")
    else:
        y = np.atleast_1d(inverse_from_samples(data, p, x))
        header = ("t", "Jinv_f")
    return _table(args, x, y, header), 0


def cmd_extremizer(args):
    p = _params(args)
    kind = ExtremizerKind(args.kind)
    ext = build_extremizer(p, args.m, args.tau, kind)
    if args.emit_grid:
        x = parse_grid(args.emit_grid)
        return _grid_csv(args, x, ext(x), ("lambda", kind.value)), 0
    out = ext.as_dict()
    out["p_m"] = p_polynomial(p, args.m, args.tau).as_dict()
    if kind is ExtremizerKind.SMALL_F_M:
        out["lambda_sup"] = lambda_sup(ext, args.m)
    return _dump_json(out), 0


def cmd_zerocount(args):
    p = _params(args)
    cert = build_G(p, args.n, args.gamma)
    if args.emit_grid:
        x = parse_grid(args.emit_grid)
        return _grid_csv(args, x, cert(x), ("t", f"G_{args.n}")), 0
    return _dump_json(cert.as_dict()), (0 if cert.passed else 1)


def cmd_hyperboloid(args):
    if args.d is None or args.alpha is not None or args.beta is not None:
        raise UsageError("hyperboloid takes --d and no --alpha/--beta")
    hp = params_for_dim(args.d)
    if args.emit_grid:
        x = parse_grid(args.emit_grid)
        return _grid_csv(args, x, spherical_extremizer(hp.d, args.m, args.tau, x),
                         ("lambda", "f_m")), 0
    out = {"d": hp.d, "alpha": hp.jacobi.alpha, "beta": hp.jacobi.beta, "rho": hp.rho,
           "m": args.m, "tau": args.tau, "logan_bound": logan_bound(hp.d, args.m, args.tau)}
    return _dump_json(out), 0


def cmd_verify(args):
    p = _params(args)
    gammas = tuple(float(g) for g in args.gammas.split(",")) if args.gammas else (
        1.0, 2.0, math.pi)
    rep = run_suite(args.suite, p, m=args.m, tau=args.tau, n_max=args.n_max, gammas=gammas,
                    size=args.size, trials=args.trials, seed=args.seed, points=args.points)
    return _dump_json(rep.as_dict()), (0 if rep.passed else 1)


# ---------------------------------------------------------------- parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float)
    common.add_argument("--beta", type=float)
    common.add_argument("--d", type=int, help="hyperboloid dimension, in place of alpha/beta")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", "-o", default="-", help="output path, - for stdout")
    common.add_argument("--no-header", action="store_true")
    common.add_argument("--rel-tol", type=float, help="relative tolerance for quadratures")
    common.add_argument("--emit-grid", metavar="A:B:N",
                        help="sample the object on N points of [A, B] and emit CSV")

    top = _Parser(prog="jacobi-logan", description="Jacobi harmonic analysis and Logan extremizers.")
    sub = top.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("eval", parents=[common], help="phi, psi or the weights")
    s.add_argument("function", choices=("phi", "psi", "weight", "sweight"))
    s.add_argument("--lam", type=float, default=0.0)
    s.add_argument("--t", type=float, default=0.0)
    s.add_argument("--over", choices=("t", "lam"), help="variable swept by --emit-grid")
    s.set_defaults(run=cmd_eval)

    s = sub.add_parser("zeros", parents=[common], help="zeros lambda_k, mu_k or lambda*_k")
    s.add_argument("--tau", type=float, required=True)
    s.add_argument("--count", type=int, required=True)
    s.add_argument("--kind", choices=("lambda", "mu", "lambda_star"), default="lambda")
    s.set_defaults(run=cmd_zeros)

    s = sub.add_parser("quadrature", parents=[common], help="Gauss rule at lambda_k(tau)")
    s.add_argument("--tau", type=float, required=True)
    s.add_argument("--count", type=int, required=True)
    s.set_defaults(run=cmd_quadrature)

    s = sub.add_parser("transform", parents=[common], help="Jacobi transform of CSV samples")
    s.add_argument("direction", choices=("forward", "inverse"))
    s.add_argument("--input", "-i", default="-", help="two-column CSV, - for stdin")
    s.set_defaults(run=cmd_transform)

    s = sub.add_parser("extremizer", parents=[common], help="Logan extremizer certificate")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--tau", type=float, required=True)
    s.add_argument("--kind", choices=("f_m", "F_m"), default="f_m")
    s.set_defaults(run=cmd_extremizer)

    s = sub.add_parser("zerocount", parents=[common], help="G_n with an n-fold zero at theta")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--gamma", type=float, required=True)
    s.set_defaults(run=cmd_zerocount)

    s = sub.add_parser("hyperboloid", parents=[common], help="Logan bound on the hyperboloid")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--tau", type=float, required=True)
    s.set_defaults(run=cmd_hyperboloid)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("--suite", choices=SUITES, default="all")
    s.add_argument("--m", type=int, default=2)
    s.add_argument("--tau", type=float, default=1.0)
    s.add_argument("--n-max", type=int, default=6)
    s.add_argument("--gammas", help="comma-separated spectral bounds")
    s.add_argument("--size", type=int, default=6)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--points", type=int, default=101)
    s.set_defaults(run=cmd_verify)
    return top


def run(argv=None, stdout=None, stderr=None):
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, code = args.run(args)
    except UsageError as exc:
        stderr.write(str(exc).rstrip("\n") + "\n")
        return 2
    except (JacobiError, ValueError, OSError) as exc:
        stderr.write(f"jacobi-logan: {exc}\n")
        return 2
    except SystemExit as exc:
        # --help
        return 0 if exc.code in (0, None) else 2
    if args.output == "-":
        stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return code


def main():
    sys.exit(run())
