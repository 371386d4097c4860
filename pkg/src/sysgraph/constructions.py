"""Generators for boolean cubes and clique products.

Clique product vertex ids follow ``copy * n + (local - 1)`` at every level of
the recursion, so the copies of any lower-dimensional clique product are
contiguous id blocks and copy membership is an integer division.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .colored_graph import ColoredGraph, from_neighbor_table
from .errors import DimensionTooLarge, GraphError, SizeOverflow, TooLarge

MAX_CUBE_DIM = 30
MAX_EXACT = 2 ** 53
# vertex budget for materialized graphs; CP^(5) has ~3.3M vertices
MAX_BUILD_VERTICES = 1 << 25


def boolean_cube(d: int) -> ColoredGraph:
    """Q_d: vertex ``x`` joins ``x ^ (1 << (i - 1))`` in color ``i``."""
    d = int(d)
    if d < 1:
        raise GraphError("dimension must be positive")
    if d > MAX_CUBE_DIM:
        raise DimensionTooLarge(d, MAX_CUBE_DIM)
    ids = np.arange(1 << d, dtype=np.int64)
    table = ids[:, None] ^ (np.int64(1) << np.arange(d, dtype=np.int64))[None, :]
    return ColoredGraph(d, table)


def clique_size_sequence(d: int) -> list[int]:
    """``[n^(1), ..., n^(d)]`` with ``n^(1) = 2`` and ``n^(k) = n^(k-1)(n^(k-1)+1)``."""
    d = int(d)
    if d < 1:
        raise GraphError("dimension must be positive")
    seq = [2]
    while len(seq) < d:
        nxt = seq[-1] * (seq[-1] + 1)
        if nxt > MAX_EXACT:
            raise SizeOverflow(d, len(seq))
        seq.append(nxt)
    return seq


def replace_with_clique(g: ColoredGraph) -> ColoredGraph:
    """One clique-replacement step: n+1 copies of ``g`` plus a new color.

    Local node ``i`` (1-based) of copy ``j`` is matched, in the new color, to
    node ``m - i`` of copy ``(i + j) mod m`` where ``m = n + 1``.
    """
    n, d = g.num_vertices, g.dimension
    m = n + 1
    if n * m > MAX_BUILD_VERTICES:
        raise TooLarge(f"replacement product would have {n * m} vertices")
    table = np.empty((m * n, d + 1), dtype=np.int64)
    offsets = (np.arange(m, dtype=np.int64) * n)[:, None, None]
    table[:, :d] = (g.table[None, :, :] + offsets).reshape(m * n, d)
    j = np.arange(m, dtype=np.int64)[:, None]
    i = np.arange(1, n + 1, dtype=np.int64)[None, :]
    table[:, d] = (((i + j) % m) * n + (m - i - 1)).reshape(-1)
    return from_neighbor_table(table, d + 1)


@lru_cache(maxsize=8)
def clique_product(d: int) -> ColoredGraph:
    """CP^(d), built iteratively from a single edge."""
    sizes = clique_size_sequence(d)
    if sizes[-1] > MAX_BUILD_VERTICES:
        raise TooLarge(f"CP^({d}) has {sizes[-1]} vertices")
    g = ColoredGraph(1, np.array([[1], [0]], dtype=np.int64))
    for _ in range(1, int(d)):
        g = replace_with_clique(g)
    return g


def copy_blocks(d: int, depth: int) -> tuple[int, int]:
    """``(block_size, count)`` of the CP^(d - depth) copies inside CP^(d)."""
    sizes = clique_size_sequence(d)
    if not 0 <= depth < d:
        raise GraphError(f"depth must lie in 0..{d - 1}")
    size = sizes[d - depth - 1]
    return size, sizes[-1] // size


FAMILIES = ("cube", "clique-product")
_FAMILY_NAMES = {"cube": "cube", "boolean-cube": "cube", "BooleanCube": "cube",
                 "clique-product": "clique-product", "cp": "clique-product",
                 "CliqueProduct": "clique-product"}


@dataclass(frozen=True)
class FamilySpec:
    """A named family member, checked on creation: ``FamilySpec("cube", 3).build()``."""

    family: str
    dimension: int

    def __post_init__(self):
        if self.family not in _FAMILY_NAMES:
            raise GraphError(f"unknown family {self.family!r}")
        object.__setattr__(self, "family", _FAMILY_NAMES[self.family])
        if int(self.dimension) != self.dimension or self.dimension < 1:
            raise GraphError("dimension must be a positive integer")
        if self.family == "cube" and self.dimension > MAX_CUBE_DIM:
            raise DimensionTooLarge(self.dimension, MAX_CUBE_DIM)
        if self.family == "clique-product":
            clique_size_sequence(self.dimension)  # raises SizeOverflow past 2^53

    @property
    def num_vertices(self) -> int:
        if self.family == "cube":
            return 2 ** self.dimension
        return clique_size_sequence(self.dimension)[-1]

    def build(self) -> ColoredGraph:
        if self.family == "cube":
            return boolean_cube(self.dimension)
        return clique_product(self.dimension)


def build_family(family: str, d: int) -> ColoredGraph:
    """Dispatch on the CLI family names ``cube`` / ``clique-product``."""
    return FamilySpec(family, d).build()
