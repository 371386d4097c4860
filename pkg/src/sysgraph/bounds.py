"""Bounding functions g with P(s) >= d - g(s), and the bootstrap that improves them.

Starting from ``log s``, one bootstrap step with the best epsilon per s turns
``c log^(1/l) s`` into ``c' log^(1/(l+1)) s``. Iterating gives coefficients
below ``4l`` and, minimizing over l, a bound of order ``log log s``.

Every function takes ``log2 s`` internally so arguments like ``2**1024`` do
not overflow; public entry points accept s itself (int or float).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import DomainError

MAX_ELL = 64
SLACK = 1e-9


def _log2(s) -> float:
    if isinstance(s, int):
        if s <= 1:
            raise DomainError(f"s must exceed 1, got {s}")
        return math.log2(s)
    s = float(s)
    if not s > 1:
        raise DomainError(f"s must exceed 1, got {s}")
    return math.log2(s)


@dataclass(frozen=True)
class PseudoCubeLog:
    """g(s) = log2 s."""

    def at_log(self, L: float) -> float:
        return L

    def __call__(self, s) -> float:
        return self.at_log(_log2(s))


@dataclass(frozen=True)
class PowerLog:
    """g(s) = c * (log2 s)^(1/ell)."""

    c: float
    ell: int

    def __post_init__(self):
        if not self.c > 0:
            raise DomainError("coefficient must be positive")
        if int(self.ell) != self.ell or self.ell < 1:
            raise DomainError("ell must be a positive integer")

    def at_log(self, L: float) -> float:
        return self.c * L ** (1.0 / self.ell)

    def __call__(self, s) -> float:
        return self.at_log(_log2(s))


@dataclass(frozen=True)
class Bootstrap:
    """s -> inner(2^(4/eps)) + eps * log2 s."""

    inner: "BoundingFunction"
    eps: float

    def __post_init__(self):
        if not self.eps > 0:
            raise DomainError("epsilon must be positive")

    def at_log(self, L: float) -> float:
        return self.inner.at_log(4.0 / self.eps) + self.eps * L

    def __call__(self, s) -> float:
        return self.at_log(_log2(s))


BoundingFunction = Union[PseudoCubeLog, PowerLog, Bootstrap]


def evaluate(f: BoundingFunction, s) -> float:
    return f(s)


def next_coefficient(c: float, ell: int) -> float:
    """Coefficient after one optimized bootstrap step from ``c log^(1/ell)``:
    ``(4 c^ell ell)^(1/(ell+1)) + (4 (c/ell)^ell)^(1/(ell+1))``."""
    if c < 1:
        raise DomainError(f"coefficient must be at least 1, got {c}")
    if ell < 1:
        raise DomainError("ell must be positive")
    p = 1.0 / (ell + 1)
    # in logs: c^ell overflows double for c ~ 4 ell beyond ell ~ 170
    first = math.exp(p * (math.log(4.0) + ell * math.log(c) + math.log(ell)))
    second = math.exp(p * (math.log(4.0) + ell * (math.log(c) - math.log(ell))))
    out = first + second
    assert out >= 1.0
    if c <= 4 * ell:
        assert out <= 4 * (ell + 1) + SLACK
    return out


def optimal_epsilon(c: float, ell: int, s) -> float:
    """The epsilon minimizing ``c (4/eps)^(1/ell) + eps log2 s``."""
    L = _log2(s)
    return (c * 4.0 ** (1.0 / ell) / (ell * L)) ** (ell / (ell + 1.0))


def bootstrap_objective(c: float, ell: int, eps: float, s) -> float:
    return Bootstrap(PowerLog(c, ell), eps)(s)


def coefficient_sequence(ell_max: int) -> list[float]:
    """Coefficients of ``log^(1/ell)`` for ell = 1..ell_max, starting at 1."""
    if not 1 <= ell_max <= MAX_ELL:
        raise DomainError(f"ell_max must lie in 1..{MAX_ELL}")
    coeffs = [1.0]
    while len(coeffs) < ell_max:
        ell = len(coeffs)
        coeffs.append(next_coefficient(coeffs[-1], ell))
    for ell, c in enumerate(coeffs, start=1):
        assert c <= 4 * ell
    return coeffs


def g_ell_family(ell_max: int) -> tuple[list[PowerLog], list[PowerLog]]:
    """``(exact, simplified)``: ``c_ell log^(1/ell)`` from the recurrence, and
    ``4 ell log^(1/ell)``, for ell = 1..ell_max."""
    coeffs = coefficient_sequence(ell_max)
    exact = [PowerLog(c, ell) for ell, c in enumerate(coeffs, start=1)]
    simple = [PowerLog(4.0 * ell, ell) for ell in range(1, ell_max + 1)]
    return exact, simple


def _loglog(L: float) -> float:
    return math.log2(L) if L > 1 else 0.0


def loglog_closed_form(s) -> float:
    """``8 (1 + log2 log2 s)``, with log log clamped at 0 for s <= 2."""
    return 8.0 * (1.0 + _loglog(_log2(s)))


def envelope(s, family: str = "simplified", ell_max: int = MAX_ELL) -> tuple[float, int]:
    """``min over ell`` of the chosen family at s, and the minimizing ell."""
    L = _log2(s)
    if family == "simplified":
        fs = [PowerLog(4.0 * ell, ell) for ell in range(1, ell_max + 1)]
    elif family == "exact":
        fs = g_ell_family(ell_max)[0]
    else:
        raise ValueError(f"unknown family {family!r}")
    vals = [f.at_log(L) for f in fs]
    k = min(range(len(vals)), key=vals.__getitem__)
    return vals[k], k + 1


def dual_systolic_bound(d: int, s) -> float:
    """Lower bound on P(s) for weakly dual systolic graphs of dimension d."""
    env, _ = envelope(s)
    closed = loglog_closed_form(s)
    if _log2(s) >= 2:
        assert env <= closed + SLACK
    return d - min(env, closed)


def pseudo_cube_bound(d: int, s) -> float:
    if isinstance(s, int) and s == 1:
        return float(d)
    return d - _log2(s)


def parse_size(text: str) -> int:
    """Accept ``65536``, ``2^16`` or ``2**16``."""
    t = text.strip().replace("**", "^")
    if "^" in t:
        base, exp = t.split("^", 1)
        return int(base) ** int(exp)
    return int(t)


def bounds_table(d: int, s, ell_max: int) -> list[dict]:
    """Per-ell rows: exact and simplified coefficients and their values at s."""
    L = _log2(s)
    exact, simple = g_ell_family(ell_max)
    return [{"ell": e.ell, "coef_exact": e.c, "coef_simplified": f.c,
             "g_exact": e.at_log(L), "g_simplified": f.at_log(L),
             "bound_exact": d - e.at_log(L), "bound_simplified": d - f.at_log(L)}
            for e, f in zip(exact, simple)]
