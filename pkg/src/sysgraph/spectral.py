"""Normalized adjacency spectra, threshold ranks, and the copy-vector identity."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
import scipy.linalg

from .colored_graph import ColoredGraph
from .constructions import clique_product, clique_size_sequence, copy_blocks
from .errors import BadCopyIndex, DomainError, TooLarge

DENSE_MAX_N = 4096
INERTIA_MAX_N = 8192
TIE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    d: int
    eigenvalues: np.ndarray  # descending
    solver: str
    tolerance: float
    max_residual: float


def normalized_adjacency(g: ColoredGraph) -> np.ndarray:
    n, d = g.num_vertices, g.dimension
    m = np.zeros((n, n))
    rows = np.repeat(np.arange(n), d)
    np.add.at(m, (rows, g.table.reshape(-1)), 1.0 / d)
    return m


def full_spectrum(g: ColoredGraph, tolerance: float = 1e-9) -> SpectrumReport:
    """All eigenvalues of A/d via LAPACK's symmetric solver, with residuals."""
    n = g.num_vertices
    if n > DENSE_MAX_N:
        raise TooLarge(f"dense spectrum limited to n <= {DENSE_MAX_N}; "
                       "use threshold_rank(method='inertia') for counts")
    m = normalized_adjacency(g)
    vals, vecs = np.linalg.eigh(m)
    resid = np.linalg.norm(m @ vecs - vecs * vals, axis=0)
    order = np.argsort(-vals, kind="stable")
    ev = vals[order]
    ev.setflags(write=False)
    return SpectrumReport(n, g.dimension, ev, "DenseFull", tolerance, float(resid.max()))


def _counts_from_spectrum(ev, eps, tie_tolerance):
    t = 1.0 - eps
    return int((ev >= t).sum()), int((ev >= t - tie_tolerance).sum())


def inertia_count(g: ColoredGraph, threshold: float, pivot_tolerance: float = 1e-12) -> int:
    """Number of eigenvalues of A/d that are >= ``threshold``.

    Sylvester's law: that count equals the number of non-positive eigenvalues
    of ``threshold*I - A/d``, read off the block-diagonal factor of a
    Bunch-Kaufman LDL^T factorization.
    """
    n = g.num_vertices
    if n > INERTIA_MAX_N:
        raise TooLarge(f"dense inertia count limited to n <= {INERTIA_MAX_N}")
    a = threshold * np.eye(n) - normalized_adjacency(g)
    _, dfac, _ = scipy.linalg.ldl(a, lower=True, hermitian=True)
    count = 0
    k = 0
    while k < n:
        if k + 1 < n and dfac[k + 1, k] != 0.0:
            block = dfac[k:k + 2, k:k + 2]
            count += int((np.linalg.eigvalsh(block) <= pivot_tolerance).sum())
            k += 2
        else:
            count += int(dfac[k, k] <= pivot_tolerance)
            k += 1
    return count


def threshold_counts(g: ColoredGraph, eps: float, tie_tolerance: float = TIE_TOLERANCE,
                     method: str = "auto") -> tuple[int, int]:
    """``(strict, tolerant)`` counts of eigenvalues >= 1 - eps (resp. minus the
    tie tolerance)."""
    eps = float(eps)
    if not 0 < eps <= 2:
        raise DomainError(f"epsilon must lie in (0, 2], got {eps}")
    if method == "auto":
        method = "dense" if g.num_vertices <= DENSE_MAX_N else "inertia"
    if method == "dense":
        return _counts_from_spectrum(full_spectrum(g).eigenvalues, eps, tie_tolerance)
    if method == "inertia":
        t = 1.0 - eps
        return inertia_count(g, t), inertia_count(g, t - tie_tolerance)
    raise ValueError(f"unknown method {method!r}")


def threshold_rank(g: ColoredGraph, eps: float, tie_tolerance: float = TIE_TOLERANCE,
                   method: str = "auto") -> int:
    """TR_{1-eps}: eigenvalues of A/d at least ``1 - eps - tie_tolerance``."""
    return threshold_counts(g, eps, tie_tolerance, method)[1]


def copy_rayleigh(d: int, k: int, j: int, g: ColoredGraph | None = None) -> Fraction:
    """``<v, Mv>`` for the normalized indicator v of copy j of CP^(d-k) in CP^(d).

    Computed from edge counts alone: ``2 * internal_edges / (|copy| * d)``.
    """
    if not 0 <= k < d:
        raise BadCopyIndex(f"depth k must lie in 0..{d - 1}")
    size, count = copy_blocks(d, k)
    if not 0 <= j < count:
        raise BadCopyIndex(f"copy index {j} outside 0..{count - 1}")
    if g is None:
        g = clique_product(d)
    lo = j * size
    block = g.table[lo:lo + size]
    internal2 = int(((block >= lo) & (block < lo + size)).sum())
    return Fraction(internal2, size * d)


def all_copy_rayleigh(d: int, k: int, g: ColoredGraph | None = None) -> list[Fraction]:
    """:func:`copy_rayleigh` for every copy at once."""
    if g is None:
        g = clique_product(d)
    size, count = copy_blocks(d, k)
    owner = np.arange(g.num_vertices) // size
    same = (g.table // size) == owner[:, None]
    per = np.bincount(owner, weights=same.sum(axis=1), minlength=count).astype(np.int64)
    return [Fraction(int(x), size * d) for x in per]


def copy_count_inequality(d: int, k: int) -> bool:
    """``(n^(d-k))^(2^k) < n^(d)`` in exact integers."""
    seq = clique_size_sequence(d)
    small = seq[d - k - 1]
    return small ** (2 ** k) < seq[-1]


@dataclass(frozen=True)
class ThresholdTheoremCheck:
    d: int
    k: int
    eps: Fraction
    n: int
    threshold_rank: int
    threshold_rank_strict: int
    bound: float
    required: int
    size_inequality: bool
    max_residual: float

    @property
    def verdict(self) -> bool:
        return self.size_inequality and self.threshold_rank >= self.required

    def to_dict(self) -> dict:
        return {"d": self.d, "k": self.k, "epsilon": str(self.eps), "n": self.n,
                "threshold_rank": self.threshold_rank,
                "threshold_rank_strict": self.threshold_rank_strict,
                "bound": self.bound, "required": self.required,
                "size_inequality": self.size_inequality,
                "max_residual": self.max_residual, "verdict": self.verdict}


def verify_threshold_theorem(d: int, k: int, tie_tolerance: float = TIE_TOLERANCE
                             ) -> ThresholdTheoremCheck:
    """At eps = 2k/d, check TR_{1-eps}(CP^(d)) >= n^(1 - 2^-k) / 2."""
    if d <= 2:
        raise DomainError("requires d > 2")
    if not (0 < k and 2 * k <= d):
        raise DomainError("requires 0 < k <= d/2")
    eps = Fraction(2 * k, d)
    g = clique_product(d)
    n = g.num_vertices
    spec = full_spectrum(g)
    strict, tolerant = _counts_from_spectrum(spec.eigenvalues, float(eps), tie_tolerance)
    bound = n ** (1.0 - 2.0 ** (-k)) / 2.0
    return ThresholdTheoremCheck(d, k, eps, n, tolerant, strict, bound,
                                 math.ceil(bound), copy_count_inequality(d, k),
                                 spec.max_residual)
