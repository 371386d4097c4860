import math

import numpy as np
import pytest
from scipy.optimize import minimize_scalar

from sysgraph import bounds
from sysgraph.bounds import (Bootstrap, PowerLog, PseudoCubeLog, coefficient_sequence,
                             dual_systolic_bound, envelope, loglog_closed_form,
                             next_coefficient, optimal_epsilon)
from sysgraph.errors import DomainError


def numeric_next(c, ell, L=1e6):
    """Minimize the bootstrap objective numerically and read off the coefficient."""
    f = lambda e: c * (4.0 / e) ** (1.0 / ell) + e * L
    res = minimize_scalar(f, bounds=(1e-12, 10.0), method="bounded",
                          options={"xatol": 1e-14})
    return res.fun / L ** (1.0 / (ell + 1))


def test_first_step():
    assert abs(next_coefficient(1, 1) - 4.0) < 1e-12


@pytest.mark.parametrize("c,ell", [(1, 1), (4, 2), (7.5, 3), (20, 6), (3, 10)])
def test_next_coefficient_matches_numeric_minimum(c, ell):
    assert next_coefficient(c, ell) == pytest.approx(numeric_next(c, ell), rel=1e-6)


def test_sequence_below_4ell():
    seq = coefficient_sequence(64)
    assert seq[0] == 1 and len(seq) == 64
    assert all(c <= 4 * ell for ell, c in enumerate(seq, start=1))
    assert all(b > a for a, b in zip(seq, seq[1:]))


def test_optimal_epsilon_stationary():
    for c, ell, s in [(1, 1, 2 ** 20), (4, 2, 2 ** 40), (7.56, 3, 2 ** 100)]:
        e = optimal_epsilon(c, ell, s)
        f = lambda x: bounds.bootstrap_objective(c, ell, x, s)
        h = e * np.finfo(float).eps ** (1 / 3)
        assert abs((f(e + h) - f(e - h)) / (2 * h)) <= 1e-6
        assert f(e) <= f(e * 1.01) and f(e) <= f(e * 0.99)
        assert f(e) == pytest.approx(next_coefficient(c, ell) * math.log2(s) ** (1 / (ell + 1)))


def test_bounding_functions():
    assert PseudoCubeLog()(2 ** 10) == 10
    assert PowerLog(4, 2)(2 ** 16) == 16
    b = Bootstrap(PseudoCubeLog(), 0.5)
    assert b(2 ** 10) == pytest.approx(8 + 5)
    assert b.at_log(4096.0) == pytest.approx(8 + 2048)
    with pytest.raises(DomainError):
        PowerLog(0, 1)
    with pytest.raises(DomainError):
        Bootstrap(PseudoCubeLog(), 0)


def test_envelope_below_closed_form():
    for k in range(2, 1025, 2):
        s = 2 ** k
        env, _ = envelope(s)
        assert env <= loglog_closed_form(s) + 1e-9
        assert envelope(s, "exact")[0] <= env + 1e-9


def test_envelope_at_65536():
    env, ell = envelope(2 ** 16)
    assert ell == 3 and env == pytest.approx(12 * 16 ** (1 / 3))
    assert PowerLog(16, 4)(2 ** 16) == pytest.approx(32)
    assert dual_systolic_bound(20, 2 ** 16) == pytest.approx(20 - 12 * 16 ** (1 / 3))


def test_huge_sizes_do_not_overflow():
    assert math.isfinite(dual_systolic_bound(10, 2 ** 4096))
    assert loglog_closed_form(2 ** 1024) == pytest.approx(8 * (1 + 10))


def test_domain():
    with pytest.raises(DomainError):
        loglog_closed_form(1)
    with pytest.raises(DomainError):
        next_coefficient(0.5, 1)
    with pytest.raises(DomainError):
        coefficient_sequence(65)


def test_parse_size():
    assert bounds.parse_size("2^16") == bounds.parse_size("2**16") == 65536
    assert bounds.parse_size("100") == 100


def test_table():
    rows = bounds.bounds_table(20, 2 ** 16, 4)
    assert [r["ell"] for r in rows] == [1, 2, 3, 4]
    assert rows[0]["coef_exact"] == 1 and rows[1]["coef_exact"] == pytest.approx(4)


def test_evaluate_examples():
    assert bounds.evaluate(PseudoCubeLog(), 8) == pytest.approx(3)
    assert bounds.evaluate(Bootstrap(PseudoCubeLog(), 2), 4) == pytest.approx(6)
    assert bounds.evaluate(PowerLog(4, 2), 2 ** 16) == pytest.approx(16)
    with pytest.raises(DomainError):
        bounds.evaluate(PseudoCubeLog(), 1)
