"""Decide the pseudo-cube / dual-systolic hierarchy and produce witnesses.

The weak (recursive) properties are evaluated level by level instead of by
recursing into each component. Write ``L_k`` for the partition into
components of the colors ``1..k``. A component of ``L_k`` is checked by
contracting its color-k edges against ``L_{k-1}``; since color-k edges never
leave an ``L_k`` component, one global pass per color handles every component
at that depth at once.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .colored_graph import ColoredGraph, Partition, components, restrict


class Property(str, enum.Enum):
    PSEUDO_CUBE = "pseudo-cube"
    DUAL_SYSTOLIC = "dual-systolic"
    WEAK_PSEUDO_CUBE = "weak-pseudo-cube"
    WEAKLY_DUAL_SYSTOLIC = "weakly-dual-systolic"


class WitnessKind(str, enum.Enum):
    SELF_LOOP_EDGE = "SelfLoopEdge"
    PARALLEL_EDGE_PAIR = "ParallelEdgePair"
    BAD_COMPONENT = "BadComponent"


@dataclass(frozen=True)
class Witness:
    """A concrete violation.

    ``edges`` hold one self-loop edge or two parallel edges of ``color``.
    ``component_ids`` are the quotient nodes the edges land on; for
    ``BadComponent`` the chain of enclosing component ids from depth 1 down
    is in ``component_path`` and ``cause`` names the underlying violation.
    ``contracted`` lists the colors whose components define the quotient.
    """

    kind: WitnessKind
    color: int
    edges: tuple[tuple[int, int], ...]
    component_ids: tuple[int, ...]
    multiplicity: Optional[int] = None
    cause: Optional[WitnessKind] = None
    component_path: tuple[int, ...] = ()
    contracted: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        out = {
            "kind": self.kind.value,
            "color": self.color,
            "edges": [list(e) for e in self.edges],
            "component_ids": list(self.component_ids),
            "contracted_colors": list(self.contracted),
        }
        if self.multiplicity is not None:
            out["multiplicity"] = self.multiplicity
        if self.cause is not None:
            out["cause"] = self.cause.value
            out["component_path"] = list(self.component_path)
        return out


@dataclass
class VerificationReport:
    property: Property
    verdict: bool
    witness: Optional[Witness] = None
    mode: Optional[str] = None
    # trace_levels[j - 1] holds the verdict of every component at depth j
    trace_levels: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        assert self.verdict == (self.witness is None)

    @property
    def recursion_trace(self) -> list[tuple[int, int, bool]]:
        """``(depth, component id, verdict)`` for every checked component."""
        return [(depth, cid, bool(ok))
                for depth, level in enumerate(self.trace_levels, start=1)
                for cid, ok in enumerate(level)]

    def trace_summary(self) -> list[dict]:
        return [{"depth": depth, "components": int(level.size),
                 "failed": int((~level).sum())}
                for depth, level in enumerate(self.trace_levels, start=1)]

    def to_dict(self) -> dict:
        out = {"property": self.property.value, "verdict": self.verdict}
        if self.mode is not None:
            out["mode"] = self.mode
        out["witness"] = self.witness.to_dict() if self.witness else None
        if self.trace_levels:
            out["trace"] = self.trace_summary()
        return out


def _others(d: int, color: int, upto: int | None = None) -> list[int]:
    top = d if upto is None else upto
    return [c for c in range(1, top + 1) if c != color]


def _loop_witness(edges: np.ndarray, labels: np.ndarray, color: int,
                  contracted: list[int]):
    a = labels[edges[:, 0]]
    b = labels[edges[:, 1]]
    hit = np.flatnonzero(a == b)
    if not hit.size:
        return None, hit
    u, v = (int(x) for x in edges[hit[0]])
    w = Witness(WitnessKind.SELF_LOOP_EDGE, color, ((u, v),), (int(a[hit[0]]),),
                contracted=tuple(contracted))
    return w, hit


def _parallel_witness(edges: np.ndarray, labels: np.ndarray, num_nodes: int,
                      color: int, contracted: list[int]):
    a = labels[edges[:, 0]]
    b = labels[edges[:, 1]]
    key = np.minimum(a, b) * num_nodes + np.maximum(a, b)
    keys, inverse, counts = np.unique(key, return_inverse=True, return_counts=True)
    mult = counts[inverse]
    hit = np.flatnonzero((mult > 1) & (a != b))
    if not hit.size:
        return None, hit
    first = hit[0]
    second = np.flatnonzero(key == key[first])[1]
    e1 = tuple(int(x) for x in edges[first])
    e2 = tuple(int(x) for x in edges[second])
    lo, hi = sorted((int(a[first]), int(b[first])))
    w = Witness(WitnessKind.PARALLEL_EDGE_PAIR, color, (e1, e2), (lo, hi),
                multiplicity=int(mult[first]), contracted=tuple(contracted))
    return w, hit


def verify_pseudo_cube(g: ColoredGraph) -> VerificationReport:
    """No color-i edge lies inside a component of the other colors, for all i."""
    d = g.dimension
    for i in range(1, d + 1):
        part = components(restrict(g, _others(d, i)))
        w, _ = _loop_witness(g.color_edges(i), part.block_of, i, _others(d, i))
        if w is not None:
            return VerificationReport(Property.PSEUDO_CUBE, False, w)
    return VerificationReport(Property.PSEUDO_CUBE, True)


def verify_dual_systolic(g: ColoredGraph) -> VerificationReport:
    """Pseudo-cube whose every color quotient is also free of parallel edges."""
    d = g.dimension
    parts = {}
    for i in range(1, d + 1):
        parts[i] = components(restrict(g, _others(d, i)))
        w, _ = _loop_witness(g.color_edges(i), parts[i].block_of, i, _others(d, i))
        if w is not None:
            return VerificationReport(Property.DUAL_SYSTOLIC, False, w)
    for i in range(1, d + 1):
        w, _ = _parallel_witness(g.color_edges(i), parts[i].block_of,
                                 parts[i].num_blocks, i, _others(d, i))
        if w is not None:
            return VerificationReport(Property.DUAL_SYSTOLIC, False, w)
    return VerificationReport(Property.DUAL_SYSTOLIC, True)


def prefix_levels(g: ColoredGraph) -> list[Partition]:
    """``L_0..L_{d-1}``: components of colors ``1..k`` for k = 0..d-1."""
    n = g.num_vertices
    ident = np.arange(n, dtype=np.int64)
    ident.setflags(write=False)
    levels = [Partition(n, ident)]
    for k in range(1, g.dimension):
        levels.append(components(restrict(g, range(1, k + 1))))
    return levels


def _bad_component(w: Witness, depth_chain: tuple[int, ...]) -> Witness:
    return Witness(WitnessKind.BAD_COMPONENT, w.color, w.edges, w.component_ids,
                   multiplicity=w.multiplicity, cause=w.kind,
                   component_path=depth_chain, contracted=w.contracted)


def _chain(levels: list[Partition], d: int, vertex: int, color: int) -> tuple[int, ...]:
    # enclosing component ids at depths 1..(d - color), i.e. levels d-1 .. color
    return tuple(int(levels[k].block_of[vertex]) for k in range(d - 1, color - 1, -1))


def _trace(levels, d, bad_vertices_by_color, lowest_color):
    """Per-depth component verdicts from the vertices of violating edges."""
    out = []
    for depth in range(1, d - lowest_color + 1):
        k = d - depth
        verdict = np.ones(levels[k].num_blocks, dtype=bool)
        for color, verts in bad_vertices_by_color.items():
            if color <= k and verts.size:
                verdict[levels[k].block_of[verts]] = False
        out.append(verdict)
    return out


def verify_weakly_dual_systolic(g: ColoredGraph) -> VerificationReport:
    """Color-d quotient simple, and every component of G minus color d
    recursively weakly dual systolic; a perfect matching at d = 1."""
    d = g.dimension
    levels = prefix_levels(g)
    witness = None
    bad = {}
    for k in range(d, 0, -1):
        edges = g.color_edges(k)
        lab = levels[k - 1]
        prefix = list(range(1, k))
        w_loop, hit_loop = _loop_witness(edges, lab.block_of, k, prefix)
        w_par, hit_par = _parallel_witness(edges, lab.block_of, lab.num_blocks, k,
                                           prefix)
        w = w_loop or w_par
        hits = np.union1d(hit_loop, hit_par)
        bad[k] = edges[hits, 0] if hits.size else np.zeros(0, dtype=np.int64)
        if witness is None and w is not None:
            if k < d:
                w = _bad_component(w, _chain(levels, d, w.edges[0][0], k))
            witness = w
    trace = _trace(levels, d, bad, lowest_color=1)
    return VerificationReport(Property.WEAKLY_DUAL_SYSTOLIC, witness is None,
                              witness, trace_levels=trace)


# accepted spellings of the two recursion modes
MODE_ALIASES = {"literal": "literal", "paper_literal": "literal", "paper-literal": "literal",
                "fully_weak": "fully_weak", "fully-weak": "fully_weak", "weak": "fully_weak"}


def verify_weak_pseudo_cube(g: ColoredGraph, mode: str = "literal"
                            ) -> VerificationReport:
    """No color-d self-loop after contracting the other colors, and each
    component of G minus color d is a strict pseudo-cube (``literal``)
    or, recursively, a weak pseudo-cube (``fully_weak``)."""
    if mode not in MODE_ALIASES:
        raise ValueError(f"unknown mode {mode!r}")
    mode = MODE_ALIASES[mode]
    d = g.dimension
    levels = prefix_levels(g)
    top = levels[d - 1]
    w, _ = _loop_witness(g.color_edges(d), top.block_of, d, list(range(1, d)))
    witness = w
    bad = {}

    if mode == "fully_weak":
        for k in range(d - 1, 0, -1):
            wk, hit = _loop_witness(g.color_edges(k), levels[k - 1].block_of, k,
                                    list(range(1, k)))
            bad[k] = g.color_edges(k)[hit, 0]
            if witness is None and wk is not None:
                witness = _bad_component(wk, _chain(levels, d, wk.edges[0][0], k))
        trace = _trace(levels, d, bad, lowest_color=1)
    else:
        # strict color independence inside each component of G minus color d
        failing = np.zeros(top.num_blocks, dtype=bool)
        for i in range(1, d):
            part = components(restrict(g, _others(d, i, upto=d - 1)))
            edges = g.color_edges(i)
            wi, hit = _loop_witness(edges, part.block_of, i, _others(d, i, upto=d - 1))
            failing[top.block_of[edges[hit, 0]]] = True
            if witness is None and wi is not None:
                witness = _bad_component(wi, (int(top.block_of[wi.edges[0][0]]),))
        trace = [~failing] if d > 1 else []
    return VerificationReport(Property.WEAK_PSEUDO_CUBE, witness is None, witness,
                              mode=mode, trace_levels=trace)


VERIFIERS = {
    Property.PSEUDO_CUBE: verify_pseudo_cube,
    Property.DUAL_SYSTOLIC: verify_dual_systolic,
    Property.WEAK_PSEUDO_CUBE: verify_weak_pseudo_cube,
    Property.WEAKLY_DUAL_SYSTOLIC: verify_weakly_dual_systolic,
}


def verify(g: ColoredGraph, prop: Property | str, mode: str = "literal"
           ) -> VerificationReport:
    prop = Property(prop)
    if prop is Property.WEAK_PSEUDO_CUBE:
        return verify_weak_pseudo_cube(g, mode)
    return VERIFIERS[prop](g)


def replay_witness(g: ColoredGraph, w: Witness) -> bool:
    """Re-derive a witness's violation from scratch.

    Components of ``w.contracted`` are recomputed by depth-first search, so
    this shares no bookkeeping with the verifiers. A self-loop edge must have
    both endpoints in one component; a parallel pair must join the same two
    distinct components.
    """
    kind = w.cause if w.kind is WitnessKind.BAD_COMPONENT else w.kind
    i = w.color
    if i in w.contracted:
        return False
    for u, v in w.edges:
        if g.neighbor(u, i) != v:
            return False

    def comp(x):
        seen = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for c in w.contracted:
                z = g.neighbor(y, c)
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        return seen

    if kind is WitnessKind.SELF_LOOP_EDGE:
        (u, v), = w.edges
        return v in comp(u)
    if kind is WitnessKind.PARALLEL_EDGE_PAIR:
        (u1, v1), (u2, v2) = w.edges
        if (u1, v1) == (u2, v2):
            return False
        cu = comp(u1)
        if v1 in cu:
            return False
        return (u2 in cu and v2 in comp(v1)) or (v2 in cu and u2 in comp(v1))
    return False
