"""Chromatic, non-branching, pure simplicial complexes and their dual graphs."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable

import numpy as np

from .colored_graph import (ColoredGraph, components, from_neighbor_table,
                            restrict)
from .errors import (Branching, ComplexError, DimensionTooLarge, NotChromatic,
                     NotPure)

MAX_CUBE_COMPLEX_DIM = 20


@dataclass(frozen=True)
class ChromaticComplex:
    """A complex given by its facets; each facet lists one vertex per color.

    ``facets[k][i - 1]`` is the color-``i`` vertex of facet ``k``. Facet order
    is significant: it fixes the vertex ids of :func:`dual_graph`.
    """

    num_colors: int
    vertices: tuple[tuple[int, int], ...]
    facets: tuple[tuple[int, ...], ...]
    labels: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def color_of(self) -> dict[int, int]:
        return dict(self.vertices)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_facets(self) -> int:
        return len(self.facets)

    def one_skeleton(self) -> list[tuple[int, int]]:
        """Vertex pairs that co-occur in some facet, sorted."""
        edges = set()
        for f in self.facets:
            for a, b in combinations(sorted(f), 2):
                edges.add((a, b))
        return sorted(edges)

    def faces(self, size: int) -> set[tuple[int, ...]]:
        out = set()
        for f in self.facets:
            out.update(combinations(sorted(f), size))
        return out

    def euler_characteristic(self) -> int:
        return sum((-1) ** (k - 1) * len(self.faces(k))
                   for k in range(1, self.num_colors + 1))

    def star(self, vertex: int) -> list[int]:
        """Indices of the facets containing ``vertex``."""
        return [k for k, f in enumerate(self.facets) if vertex in f]


def validate_complex(num_colors: int, vertices: Iterable, facets: Iterable,
                     labels: dict | None = None) -> ChromaticComplex:
    """Check purity, the chromatic property and non-branching."""
    d = int(num_colors)
    if d < 1:
        raise ComplexError("number of colors must be positive")
    color_of = {}
    for vid, color in vertices:
        vid, color = int(vid), int(color)
        if vid in color_of:
            raise ComplexError(f"vertex {vid} declared twice")
        if not 1 <= color <= d:
            raise ComplexError(f"vertex {vid} has color {color} outside 1..{d}")
        color_of[vid] = color

    ordered = []
    for raw in facets:
        facet = tuple(int(v) for v in raw)
        for v in facet:
            if v not in color_of:
                raise ComplexError(f"facet {facet} references undeclared vertex {v}")
        if len(set(facet)) != d:
            raise NotPure(facet, len(set(facet)), d)
        by_color = {color_of[v]: v for v in facet}
        for i in range(1, d + 1):
            if i not in by_color:
                raise NotChromatic(facet, i)
        ordered.append(tuple(by_color[i] for i in range(1, d + 1)))

    count = defaultdict(int)
    for f in ordered:
        for i in range(d):
            count[f[:i] + f[i + 1:]] += 1
    for f in ordered:
        for i in range(d):
            face = f[:i] + f[i + 1:]
            if count[face] != 2:
                raise Branching(tuple(sorted(face)), count[face])

    verts = tuple(sorted(color_of.items()))
    return ChromaticComplex(d, verts, tuple(ordered), dict(labels or {}))


def cube_complex(d: int) -> ChromaticComplex:
    """Complex on ``[d] x {0, 1}`` whose facets are ``{(i, x_i)}`` for x in {0,1}^d.

    Vertex ``(i, b)`` has id ``2(i - 1) + b``; facet ``x`` sits at index ``x``
    (bit ``i - 1`` of x is ``x_i``), matching :func:`boolean_cube` ids.
    """
    d = int(d)
    if d < 1:
        raise ComplexError("dimension must be positive")
    if d > MAX_CUBE_COMPLEX_DIM:
        raise DimensionTooLarge(d, MAX_CUBE_COMPLEX_DIM)
    vertices = [(2 * i + b, i + 1) for i in range(d) for b in (0, 1)]
    facets = [tuple(2 * i + ((x >> i) & 1) for i in range(d)) for x in range(1 << d)]
    labels = {2 * i + b: (i + 1, b) for i in range(d) for b in (0, 1)}
    return validate_complex(d, vertices, facets, labels)


def cards_complex(players: int = 3, cards: int | None = None) -> ChromaticComplex:
    """Each player holds a distinct card; facets are the injective deals.

    With the default 3 players and 4 cards this is the 24-facet torus.
    Vertex ``(p, card)`` has id ``(p - 1) * cards + (card - 1)`` and color p.
    """
    if cards is None:
        cards = players + 1
    vertices = [((p - 1) * cards + (k - 1), p)
                for p in range(1, players + 1) for k in range(1, cards + 1)]
    facets = [tuple((p - 1) * cards + k for p, k in zip(range(1, players + 1), deal))
              for deal in permutations(range(cards), players)]
    names = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
    labels = {(p - 1) * cards + (k - 1): (names[p - 1], k)
              for p in range(1, players + 1) for k in range(1, cards + 1)}
    return validate_complex(players, vertices, facets, labels)


def dual_graph(c: ChromaticComplex) -> ColoredGraph:
    """One vertex per facet; facets sharing a co-dimension-one face are joined
    in the color of the vertex they disagree on."""
    d = c.num_colors
    owners = defaultdict(list)
    for k, f in enumerate(c.facets):
        for i in range(d):
            owners[(i, f[:i] + f[i + 1:])].append(k)
    table = np.empty((c.num_facets, d), dtype=np.int64)
    for (i, _), pair in owners.items():
        a, b = pair
        table[a, i] = b
        table[b, i] = a
    return from_neighbor_table(table, d)


def dual_complex(g: ColoredGraph) -> ChromaticComplex:
    """Complex whose color-i vertices are the components of g minus color i.

    Graph vertex v becomes the facet of components containing v. Raises a
    ComplexError when the result is not non-branching (for instance when g
    fails color independence).
    """
    d = g.dimension
    vertices, offset = [], 0
    labelled = []
    for i in range(1, d + 1):
        part = components(restrict(g, [c for c in range(1, d + 1) if c != i]))
        labelled.append(part.block_of + offset)
        vertices.extend((offset + b, i) for b in range(part.num_blocks))
        offset += part.num_blocks
    facets = np.column_stack(labelled)
    return validate_complex(d, vertices, facets.tolist())


def detect_empty_squares(c: ChromaticComplex, alternating_only: bool = False
                         ) -> list[tuple[int, int, int, int]]:
    """4-cycles ``(v1, u1, v2, u2)`` of the one-skeleton with no diagonal.

    Each square is reported once with ``v1`` its smallest vertex and
    ``u1 < u2``; the list is sorted.
    """
    adj = defaultdict(set)
    for a, b in c.one_skeleton():
        adj[a].add(b)
        adj[b].add(a)
    color = c.color_of
    verts = sorted(adj)
    found = set()
    for v1, v2 in combinations(verts, 2):
        if v2 in adj[v1]:
            continue
        common = sorted(adj[v1] & adj[v2])
        for u1, u2 in combinations(common, 2):
            if u2 in adj[u1]:
                continue
            if alternating_only and (color[v1] != color[v2] or color[u1] != color[u2]):
                continue
            quad = sorted([(v1, v2), (u1, u2)])
            (a, b), (x, y) = quad
            found.add((a, x, b, y))
    return sorted(found)


def detect_empty_triangles(c: ChromaticComplex) -> list[tuple[int, int, int]]:
    """3-cycles of the one-skeleton that do not span a face of the complex."""
    edges = set(c.one_skeleton())
    filled = c.faces(3) if c.num_colors >= 3 else set()
    adj = defaultdict(set)
    for a, b in edges:
        adj[a].add(b)
    out = []
    for a in sorted(adj):
        for b in sorted(adj[a]):
            for x in sorted(adj[b]):
                if (a, x) in edges and (a, b, x) not in filled:
                    out.append((a, b, x))
    return out


def star_correspondence(c: ChromaticComplex, g: ColoredGraph | None = None) -> bool:
    """Whether stars of color-i vertices are exactly the components of the
    dual graph with color i deleted, for every color i."""
    if g is None:
        g = dual_graph(c)
    d = c.num_colors
    color = c.color_of
    for i in range(1, d + 1):
        part = components(restrict(g, [k for k in range(1, d + 1) if k != i]))
        blocks = {tuple(b) for b in part.blocks}
        stars = {tuple(c.star(v)) for v, col in color.items() if col == i}
        centers = sum(1 for col in color.values() if col == i)
        if blocks != stars or len(stars) != centers:
            return False
    return True
