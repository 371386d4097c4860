"""Edge boundaries, expansion, and exact or heuristic isoperimetric profiles."""

from __future__ import annotations

import csv
import enum
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import bounds
from ._backend import kernels, thread_count
from .colored_graph import ColoredGraph
from .errors import EmptySet, IdOutOfRange, TooLarge

ROW_LIMIT = 10 ** 7
SWEEP_MAX_N = 24
SLACK = 1e-9


def _membership(g: ColoredGraph, U: Iterable[int]) -> np.ndarray:
    ids = np.unique(np.asarray(list(U) if not isinstance(U, np.ndarray) else U,
                               dtype=np.int64))
    n = g.num_vertices
    if ids.size and (ids[0] < 0 or ids[-1] >= n):
        raise IdOutOfRange(int(ids[0] if ids[0] < 0 else ids[-1]), n)
    inset = np.zeros(n, dtype=bool)
    inset[ids] = True
    return inset


def boundary(g: ColoredGraph, U: Iterable[int]) -> int:
    """Number of edges with exactly one endpoint in ``U``."""
    inset = _membership(g, U)
    return int((~inset[g.table[inset]]).sum())


def expansion(g: ColoredGraph, U: Iterable[int]) -> Fraction:
    inset = _membership(g, U)
    size = int(inset.sum())
    if size == 0:
        raise EmptySet("expansion of the empty set is undefined")
    return Fraction(int((~inset[g.table[inset]]).sum()), size)


def inner_edges_by_color(g: ColoredGraph, U: Iterable[int]) -> list[int]:
    """``e_i(U)`` for i = 1..d: edges of color i with both ends in U.

    Asserts ``d |U| = boundary(U) + 2 * sum(e_i(U))``.
    """
    inset = _membership(g, U)
    inner = inset[g.table[inset]]  # (|U|, d): neighbor along color also inside
    counts = [int(x) // 2 for x in inner.sum(axis=0)]
    size = int(inset.sum())
    assert g.dimension * size == int((~inner).sum()) + 2 * sum(counts)
    return counts


class Method(str, enum.Enum):
    EXACT = "exact"
    HEURISTIC = "heuristic"


@dataclass(frozen=True)
class ProfileRow:
    s: int
    value: Fraction
    witness: tuple[int, ...]
    method: Method

    @property
    def boundary(self) -> int:
        return int(self.value * self.s)


@dataclass
class ProfileReport:
    num_vertices: int
    dimension: int
    rows: list[ProfileRow] = field(default_factory=list)

    def row(self, s: int) -> ProfileRow:
        for r in self.rows:
            if r.s == s:
                return r
        raise KeyError(s)

    def values(self) -> dict[int, Fraction]:
        return {r.s: r.value for r in self.rows}


def _rows_from_counts(n, d, sizes, best, witnesses, method):
    return [ProfileRow(s, Fraction(int(best[s]), s), tuple(int(x) for x in witnesses[s]),
                       method) for s in sizes]


def exact_profile(g: ColoredGraph, s_max: int | None = None,
                  sizes: Sequence[int] | None = None, threads: int | None = None,
                  row_limit: int = ROW_LIMIT) -> ProfileReport:
    """Exact ``P(s) = min{ boundary(U)/|U| : |U| = s }`` by enumeration.

    Graphs with at most 24 vertices are swept over all 2^n subsets at once;
    otherwise each requested size enumerates its C(n, s) subsets and must
    stay within ``row_limit``. The witness of each row is the
    lexicographically smallest minimizer.
    """
    n, d = g.num_vertices, g.dimension
    if sizes is None:
        top = n if s_max is None else min(int(s_max), n)
        sizes = list(range(1, top + 1))
    sizes = sorted(set(int(s) for s in sizes))
    if not sizes or sizes[0] < 1 or sizes[-1] > n:
        raise ValueError(f"sizes must lie in 1..{n}")

    report = ProfileReport(n, d)
    if n <= SWEEP_MAX_N:
        best, masks = kernels.min_boundary_sweep(g.table, sizes[-1])
        wits = {s: [v for v in range(n) if (int(masks[s]) >> v) & 1] for s in sizes}
        report.rows = _rows_from_counts(n, d, sizes, best, wits, Method.EXACT)
        return report

    for s in sizes:
        if math.comb(n, s) > row_limit:
            raise TooLarge(f"size {s}: C({n},{s}) = {math.comb(n, s)} exceeds "
                           f"the enumeration limit {row_limit}")
    workers = thread_count(threads)
    for s in sizes:
        best, wit = _enumerate_row(g.table, s, workers)
        report.rows.append(ProfileRow(s, Fraction(best, s), wit, Method.EXACT))
    return report


def _enumerate_row(table, s, workers):
    n = table.shape[0]
    firsts = n - s + 1
    # split by leading element; chunks are merged in leading-element order, so
    # the first strict minimum is the lexicographically smallest witness
    nchunks = min(firsts, max(1, workers * 4)) if workers > 1 else 1
    cuts = np.linspace(0, firsts, nchunks + 1).astype(int)
    jobs = [(int(cuts[k]), int(cuts[k + 1])) for k in range(nchunks)
            if cuts[k] < cuts[k + 1]]
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(
                lambda lh: kernels.min_boundary_combinations(table, s, lh[0], lh[1]),
                jobs))
    else:
        results = [kernels.min_boundary_combinations(table, s, lo, hi)
                   for lo, hi in jobs]
    best, wit = -1, None
    for b, w in results:
        if b >= 0 and (best < 0 or b < best):
            best, wit = b, w
    return int(best), tuple(int(x) for x in wit)


def _greedy_then_swap(g: ColoredGraph, s: int, rng: np.random.Generator,
                      max_passes: int):
    table = g.table
    n, d = table.shape
    inset = np.zeros(n, dtype=bool)
    cnt = np.zeros(n, dtype=np.int64)  # neighbors inside the set
    bnd = 0

    def add(v):
        nonlocal bnd
        bnd += d - 2 * cnt[v]
        inset[v] = True
        np.add.at(cnt, table[v], 1)

    def remove(v):
        nonlocal bnd
        inset[v] = False
        np.subtract.at(cnt, table[v], 1)
        bnd -= d - 2 * cnt[v]

    add(int(rng.integers(n)))
    frontier = set(int(w) for w in table[np.flatnonzero(inset)].ravel())
    frontier = {w for w in frontier if not inset[w]}
    while inset.sum() < s:
        if frontier:
            cand = sorted(frontier)
            scores = cnt[cand]
            top = np.flatnonzero(scores == scores.max())
            v = cand[int(top[rng.integers(top.size)])]
        else:
            outside = np.flatnonzero(~inset)
            v = int(outside[rng.integers(outside.size)])
        add(v)
        frontier.discard(v)
        frontier.update(int(w) for w in table[v] if not inset[w])

    for _ in range(max_passes):
        improved = False
        members = np.flatnonzero(inset)
        rng.shuffle(members)
        for u in members:
            u = int(u)
            out_gain = d - 2 * cnt[u]  # boundary drop when u leaves
            nbrs_u = set(int(x) for x in table[u])
            cands = {int(w) for x in members for w in table[x] if not inset[w]}
            for w in sorted(cands):
                in_cost = d - 2 * (cnt[w] - (1 if w in nbrs_u else 0))
                if in_cost - out_gain < 0:
                    remove(u)
                    add(w)
                    improved = True
                    break
            if improved:
                break
        if not improved:
            break
    return int(bnd), tuple(int(v) for v in np.flatnonzero(inset))


def heuristic_min_expansion(g: ColoredGraph, s: int, trials: int = 10,
                            seed: int = 0, threads: int | None = None,
                            max_passes: int = 200) -> tuple[Fraction, tuple[int, ...]]:
    """Upper bound on P(s): multi-start greedy growth plus swap local search.

    Each trial draws from its own child of ``SeedSequence(seed)``, so the
    result does not depend on how trials are scheduled across threads.
    """
    n = g.num_vertices
    if not 1 <= s <= n:
        raise ValueError(f"size must lie in 1..{n}")
    if s == n:
        return Fraction(0), tuple(range(n))
    children = np.random.SeedSequence(int(seed)).spawn(int(trials))

    def run(child):
        return _greedy_then_swap(g, s, np.random.default_rng(child), max_passes)

    workers = thread_count(threads)
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(run, children))
    else:
        results = [run(c) for c in children]
    best, wit = min(results)
    return Fraction(best, s), wit


def heuristic_profile(g: ColoredGraph, sizes: Sequence[int], trials: int = 10,
                      seed: int = 0, threads: int | None = None) -> ProfileReport:
    report = ProfileReport(g.num_vertices, g.dimension)
    for s in sorted(set(int(x) for x in sizes)):
        value, wit = heuristic_min_expansion(g, s, trials, seed, threads)
        report.rows.append(ProfileRow(s, value, wit, Method.HEURISTIC))
    return report


class BoundKind(str, enum.Enum):
    PSEUDO_CUBE = "pseudo-cube"
    DUAL_SYSTOLIC = "dual-systolic"


def bound_value(kind: BoundKind, d: int, s: int) -> float:
    """Lower bound on P(s): ``d - log s`` or ``d - 8(1 + log log s)``.

    log log s is clamped at 0 for s <= 2; at s = 1, where the second bound is
    not stated, P(1) = d is used.
    """
    if kind is BoundKind.PSEUDO_CUBE:
        return d - math.log2(s)
    if s == 1:
        return float(d)
    return d - bounds.loglog_closed_form(s)


@dataclass(frozen=True)
class BoundCheck:
    s: int
    value: Fraction
    method: Method
    bound: float
    passed: bool


def check_profile_against_bounds(report: ProfileReport, kind: BoundKind | str
                                 ) -> list[BoundCheck]:
    kind = BoundKind(kind)
    d = report.dimension
    out = []
    for r in report.rows:
        b = bound_value(kind, d, r.s)
        out.append(BoundCheck(r.s, r.value, r.method, b, float(r.value) >= b - SLACK))
    return out


CSV_COLUMNS = ["s", "min_expansion_num", "min_expansion_den", "method",
               "bound_pseudo", "bound_dualsys", "pass_pseudo", "pass_dualsys",
               "witness"]


def profile_csv(report: ProfileReport, header_lines: Sequence[str] = ()) -> str:
    """CSV rendering; bounds printed with 12 significant digits."""
    pseudo = check_profile_against_bounds(report, BoundKind.PSEUDO_CUBE)
    dual = check_profile_against_bounds(report, BoundKind.DUAL_SYSTOLIC)
    buf = io.StringIO()
    for line in header_lines:
        buf.write(f"# {line}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r, p, q in zip(report.rows, pseudo, dual):
        w.writerow([r.s, r.value.numerator, r.value.denominator, r.method.value,
                    f"{p.bound:.12g}", f"{q.bound:.12g}", int(p.passed), int(q.passed),
                    ";".join(str(v) for v in r.witness)])
    return buf.getvalue()
