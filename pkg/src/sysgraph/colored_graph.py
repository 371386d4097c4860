"""Edge-colored regular graphs and the restriction/contraction operations.

A :class:`ColoredGraph` on vertices ``0..n-1`` with colors ``1..d`` is stored
as an ``(n, d)`` neighbor table: ``table[v, c - 1]`` is the unique neighbor of
``v`` along color ``c``. Properness of the coloring is exactly what makes this
table well defined, so every operation below is a column slice of it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from ._backend import kernels
from .errors import (ColorOutOfRange, DuplicateEdge, GraphError, IdOutOfRange,
                     ImproperColoring, NotRegular, SelfLoop)


class ColoredGraph:
    """Simple d-regular graph with a proper edge d-coloring. Immutable."""

    __slots__ = ("_d", "_table", "_edges")

    def __init__(self, dimension: int, table: np.ndarray):
        # use validate() or from_neighbor_table(); this trusts its input
        self._d = int(dimension)
        t = np.ascontiguousarray(table, dtype=np.int64)
        t.setflags(write=False)
        self._table = t
        self._edges = None

    @property
    def dimension(self) -> int:
        return self._d

    @property
    def num_vertices(self) -> int:
        return self._table.shape[0]

    @property
    def num_edges(self) -> int:
        return self.num_vertices * self._d // 2

    @property
    def table(self) -> np.ndarray:
        """Read-only ``(n, d)`` neighbor table, column ``c - 1`` for color ``c``."""
        return self._table

    def neighbor(self, v: int, color: int) -> int:
        return int(self._table[v, color - 1])

    def adjacency(self, v: int) -> list[tuple[int, int]]:
        """``(neighbor, color)`` pairs of ``v`` sorted by color."""
        return [(int(w), c + 1) for c, w in enumerate(self._table[v])]

    def color_edges(self, color: int) -> np.ndarray:
        """Edges of one color as an ``(n/2, 2)`` array of ``u < v`` rows, sorted."""
        col = self._table[:, color - 1]
        lo = np.flatnonzero(np.arange(self.num_vertices) < col)
        return np.column_stack([lo, col[lo]])

    def edges(self) -> np.ndarray:
        """All edges as ``(m, 3)`` rows ``(u, v, c)``, ``u < v``, lexicographic."""
        if self._edges is None:
            n = self.num_vertices
            parts = []
            for c in range(1, self._d + 1):
                e = self.color_edges(c)
                parts.append(np.column_stack([e, np.full(len(e), c, dtype=np.int64)]))
            e = np.concatenate(parts) if parts else np.zeros((0, 3), dtype=np.int64)
            order = np.argsort(e[:, 0] * n + e[:, 1], kind="stable")
            e = e[order]
            e.setflags(write=False)
            self._edges = e
        return self._edges

    def __eq__(self, other):
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self._d == other._d and np.array_equal(self._table, other._table)

    def __hash__(self):
        return hash((self._d, self._table.shape, self._table[:64].tobytes()))

    def __repr__(self):
        return f"ColoredGraph(dimension={self._d}, num_vertices={self.num_vertices})"


def validate(dimension: int, num_vertices: int, edges: Iterable) -> ColoredGraph:
    """Check a raw ``(u, v, color)`` edge list and build a :class:`ColoredGraph`.

    Raises the first violated condition, in the order: vertex ids, colors,
    self-loops, repeated pairs, degrees, coloring.
    """
    d, n = int(dimension), int(num_vertices)
    if d < 1:
        raise GraphError(f"dimension must be positive, got {d}")
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    e = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                   dtype=np.int64).reshape(-1, 3)
    u, v, c = e[:, 0], e[:, 1], e[:, 2]

    ends = np.column_stack([u, v])
    bad = np.flatnonzero(((ends < 0) | (ends >= n)).any(axis=1))
    if bad.size:
        row = ends[bad[0]]
        raise IdOutOfRange(int(row[0] if not 0 <= row[0] < n else row[1]), n)
    bad = np.flatnonzero((c < 1) | (c > d))
    if bad.size:
        raise ColorOutOfRange(int(c[bad[0]]), d)
    bad = np.flatnonzero(u == v)
    if bad.size:
        raise SelfLoop(int(u[bad[0]]))

    a, b = np.minimum(u, v), np.maximum(u, v)
    keys, counts = np.unique(a * n + b, return_counts=True)
    dup = np.flatnonzero(counts > 1)
    if dup.size:
        k = int(keys[dup[0]])
        raise DuplicateEdge(k // n, k % n)

    both = np.concatenate([u, v])
    deg = np.bincount(both, minlength=n)
    bad = np.flatnonzero(deg != d)
    if bad.size:
        raise NotRegular(int(bad[0]), int(deg[bad[0]]), d)

    slot = both * d + (np.concatenate([c, c]) - 1)
    per = np.bincount(slot, minlength=n * d)
    bad = np.flatnonzero(per > 1)
    if bad.size:
        s = int(bad[0])
        raise ImproperColoring(s // d, s % d + 1, int(per[s]))

    table = np.empty((n, d), dtype=np.int64)
    table[u, c - 1] = v
    table[v, c - 1] = u
    return ColoredGraph(d, table)


def from_neighbor_table(table: np.ndarray, dimension: int | None = None) -> ColoredGraph:
    """Validate a neighbor table directly (fast path for generated graphs)."""
    t = np.ascontiguousarray(table, dtype=np.int64)
    if t.ndim != 2:
        raise GraphError("neighbor table must be two-dimensional")
    n, d = t.shape
    if dimension is not None and int(dimension) != d:
        raise GraphError(f"table has {d} colors, expected {dimension}")
    if n < 1 or d < 1:
        raise GraphError("empty neighbor table")
    bad = np.argwhere((t < 0) | (t >= n))
    if bad.size:
        raise IdOutOfRange(int(t[tuple(bad[0])]), n)
    ids = np.arange(n)
    loops = np.argwhere(t == ids[:, None])
    if loops.size:
        raise SelfLoop(int(loops[0, 0]))
    for c in range(d):
        back = t[t[:, c], c]
        bad = np.flatnonzero(back != ids)
        if bad.size:
            v = int(bad[0])
            raise ImproperColoring(int(t[v, c]), c + 1, 2)
    if d > 1:
        srt = np.sort(t, axis=1)
        bad = np.argwhere(srt[:, 1:] == srt[:, :-1])
        if bad.size:
            v = int(bad[0, 0])
            w = int(srt[v, bad[0, 1]])
            raise DuplicateEdge(min(v, w), max(v, w))
    return ColoredGraph(d, t)


@dataclass(frozen=True)
class ColorRestriction:
    """Spanning subgraph of ``graph`` keeping only the listed colors."""

    graph: ColoredGraph
    colors: tuple[int, ...]

    @property
    def num_vertices(self) -> int:
        return self.graph.num_vertices

    @property
    def num_edges(self) -> int:
        return len(self.colors) * self.graph.num_vertices // 2

    def keep_mask(self) -> np.ndarray:
        mask = np.zeros(self.graph.dimension, dtype=np.uint8)
        for c in self.colors:
            mask[c - 1] = 1
        return mask

    def edges(self) -> np.ndarray:
        e = self.graph.edges()
        return e[np.isin(e[:, 2], self.colors)]


def restrict(g: ColoredGraph, keep: Iterable[int]) -> ColorRestriction:
    """Delete every edge whose color is not in ``keep``; vertex ids unchanged."""
    colors = tuple(sorted(set(int(c) for c in keep)))
    for c in colors:
        if not 1 <= c <= g.dimension:
            raise ColorOutOfRange(c, g.dimension)
    return ColorRestriction(g, colors)


@dataclass(frozen=True, eq=False)
class Partition:
    """Vertex partition; block ids follow each block's smallest vertex."""

    num_blocks: int
    block_of: np.ndarray
    _blocks: list = field(default=None, repr=False, compare=False)

    @property
    def blocks(self) -> list[list[int]]:
        if self._blocks is None:
            order = np.argsort(self.block_of, kind="stable")
            cuts = np.cumsum(np.bincount(self.block_of, minlength=self.num_blocks))[:-1]
            object.__setattr__(self, "_blocks",
                               [b.tolist() for b in np.split(order, cuts)])
        return self._blocks

    def block_sizes(self) -> np.ndarray:
        return np.bincount(self.block_of, minlength=self.num_blocks)

    def members(self, block: int) -> np.ndarray:
        return np.flatnonzero(self.block_of == block)


def components(g: ColoredGraph | ColorRestriction) -> Partition:
    """Connected components, canonically numbered by minimum vertex id."""
    if isinstance(g, ColoredGraph):
        g = ColorRestriction(g, tuple(range(1, g.dimension + 1)))
    labels, count = kernels.label_components(g.graph.table, g.keep_mask())
    labels = np.asarray(labels, dtype=np.int64)
    labels.setflags(write=False)
    return Partition(int(count), labels)


@dataclass(frozen=True, eq=False)
class QuotientMultigraph:
    """Result of contracting every edge whose color differs from ``color``.

    ``pair_nodes``/``pair_mult`` list each unordered node pair joined by at
    least one color edge with its multiplicity; ``loop_nodes``/``loop_counts``
    do the same for self-loops. Both are sorted.
    """

    color: int
    num_nodes: int
    node_of: np.ndarray
    pair_nodes: np.ndarray
    pair_mult: np.ndarray
    loop_nodes: np.ndarray
    loop_counts: np.ndarray

    @property
    def parallel_edges(self) -> dict[tuple[int, int], int]:
        return {(int(a), int(b)): int(m)
                for (a, b), m in zip(self.pair_nodes, self.pair_mult)}

    @property
    def self_loops(self) -> dict[int, int]:
        return {int(a): int(m) for a, m in zip(self.loop_nodes, self.loop_counts)}

    @property
    def num_edges(self) -> int:
        return int(self.pair_mult.sum() + self.loop_counts.sum())

    def is_simple(self) -> bool:
        return self.loop_nodes.size == 0 and bool((self.pair_mult <= 1).all())


def quotient_of(edges: np.ndarray, node_of: np.ndarray, num_nodes: int,
                color: int) -> QuotientMultigraph:
    """Quotient of a set of ``(u, v)`` edges under a vertex labelling."""
    a = node_of[edges[:, 0]]
    b = node_of[edges[:, 1]]
    loop = a == b
    loop_nodes, loop_counts = np.unique(a[loop], return_counts=True)
    lo = np.minimum(a[~loop], b[~loop])
    hi = np.maximum(a[~loop], b[~loop])
    keys, mult = np.unique(lo * num_nodes + hi, return_counts=True)
    pairs = np.column_stack([keys // num_nodes, keys % num_nodes])
    return QuotientMultigraph(color, num_nodes, node_of, pairs, mult,
                              loop_nodes, loop_counts)


def contract_except(g: ColoredGraph, color: int) -> QuotientMultigraph:
    """Contract all edges of color != ``color``; keep the ``color`` edges."""
    if not 1 <= color <= g.dimension:
        raise ColorOutOfRange(color, g.dimension)
    others = [c for c in range(1, g.dimension + 1) if c != color]
    part = components(restrict(g, others))
    return quotient_of(g.color_edges(color), part.block_of, part.num_blocks, color)


def induced_component(g: ColoredGraph, part: Partition, block: int,
                      colors: Iterable[int]) -> tuple[ColoredGraph, np.ndarray]:
    """Re-index one block of ``part`` as a graph on ``colors`` (renumbered 1..k).

    Vertex ids are compacted in sorted order; the returned array maps local
    ids back to ids of ``g``. Raises ComponentNotRegular if the block is not
    closed under the requested colors.
    """
    from .errors import ComponentNotRegular

    colors = sorted(colors)
    ids = part.members(block)
    local = np.full(g.num_vertices, -1, dtype=np.int64)
    local[ids] = np.arange(ids.size)
    sub = local[g.table[ids][:, [c - 1 for c in colors]]]
    if (sub < 0).any():
        raise ComponentNotRegular(block, "colored edge leaves the block")
    try:
        return from_neighbor_table(sub, len(colors)), ids
    except GraphError as exc:
        raise ComponentNotRegular(block, str(exc)) from exc
