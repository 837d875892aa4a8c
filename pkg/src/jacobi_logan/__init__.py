"""Jacobi harmonic analysis on the half-line and extremizers of the Logan problem."""
from .errors import (BracketingError, ConvergenceError, DomainError, JacobiError,
                     ParameterError, PoleError, RefinementBudgetError, SignViolationError,
                     TailDivergenceError)
from .jacobi import COSINE, JacobiParams, asymptotic_phi, phi, psi, spectral_weight, weight_delta
from .logan import (ExtremizerKind, build_extremizer, lambda_sup, p_polynomial,
                    verify_orthogonality)
from .transform import gauss_rule, integrate_dsigma, inverse_jacobi_transform, jacobi_transform
from .zerocount import build_G, r_polynomial, theta
from .zeros import lambda_star_zeros, lambda_zeros, mu_zeros

__version__ = "0.1.0"
