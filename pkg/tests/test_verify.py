import math

import numpy as np
import pytest

from conftest import PAIRS
from jacobi_logan.errors import DomainError
from jacobi_logan.jacobi import JacobiParams
from jacobi_logan.verify import (Report, derivative_identity_residual, mehler_value,
                                 recurrence_residual, run_suite, wronskian_residual)


def test_report_modes():
    rep = Report("x", {})
    rep.add("le", 1.0, 2.0)
    rep.add("ge", 1.0, 2.0, "ge")
    rep.add("gt", 2.0, 2.0, "gt")
    rep.add("nan", math.nan, 1.0)
    rep.add("inf", math.inf, math.inf)
    assert [c.passed for c in rep.checks] == [True, False, False, False, False]
    assert rep.checks[3].value is None


def test_guard_turns_errors_into_failures():
    rep = Report("x", {})

    def boom():
        raise DomainError("bad t")
    rep.guard("thing", boom)
    assert not rep.passed
    assert rep.checks[0].name.startswith("thing: DomainError")


@pytest.mark.parametrize("ab", PAIRS)
def test_identities_hold(ab):
    p = JacobiParams(*ab)
    lam = np.array([0.0, 1.3, 9.0])
    t = np.array([0.1, 0.8, 2.5])
    assert np.max(recurrence_residual(p, lam, t)) < 1e-10
    assert derivative_identity_residual(p, 3.0, 0.7) < 1e-8
    assert wronskian_residual(p, 2.0, 5.5, 1.0) < 1e-8


def test_mehler_route():
    import oracle
    p = JacobiParams(1.5, 0.5)
    assert mehler_value(p, 4.0, 1.1) == pytest.approx(float(oracle.phi(1.5, 0.5, 4.0, 1.1)),
                                                      abs=1e-10)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope", JacobiParams(1.0, 0.0))


@pytest.mark.parametrize("ab", [(0.5, -0.5), (2.0, 1.0)])
def test_zerocount_suite_passes(ab):
    rep = run_suite("zerocount", JacobiParams(*ab), n_max=4, gammas=(2.0,))
    assert rep.passed, [c for c in rep.checks if not c.passed]


def test_chebyshev_suite_skips_phi_below_half():
    rep = run_suite("chebyshev", JacobiParams(-0.5, -0.5), size=4, trials=10)
    assert rep.passed
    assert not any(c.name.startswith(("phi", "dphi")) for c in rep.checks)
