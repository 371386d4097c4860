"""Fixture graphs and complexes, plus slow reference implementations.

The reference code here works on plain Python edge lists and networkx so it
shares nothing with the package internals.
"""

from itertools import combinations

import networkx as nx
import numpy as np

from sysgraph import (boolean_cube, cards_complex, clique_product, cube_complex,
                      dual_graph, validate)
from sysgraph.errors import ComplexError
from sysgraph.simplicial import dual_complex, validate_complex


def cycle(n):
    """Even cycle with alternating colors."""
    edges = [(min(v, (v + 1) % n), max(v, (v + 1) % n), 1 + v % 2) for v in range(n)]
    return validate(2, n, edges)


def cartesian(g, h):
    """Box product; colors of h are shifted past those of g."""
    n, m = g.num_vertices, h.num_vertices
    edges = []
    for u, v, c in g.edges().tolist():
        edges += [(u * m + x, v * m + x, c) for x in range(m)]
    for u, v, c in h.edges().tolist():
        edges += [(a * m + u, a * m + v, g.dimension + c) for a in range(n)]
    return validate(g.dimension + h.dimension, n * m, edges)


def random_matching_graph(rng, d, n):
    edges = []
    for c in range(1, d + 1):
        p = rng.permutation(n)
        for i in range(n // 2):
            a, b = int(p[2 * i]), int(p[2 * i + 1])
            edges.append((min(a, b), max(a, b), c))
    try:
        return validate(d, n, edges)
    except ValueError:  # two colors picked the same pair
        return None


def graph_corpus():
    """(name, graph, tags). Tags name properties known to hold."""
    out = []
    for d in range(1, 6):
        out.append((f"Q{d}", boolean_cube(d), {"pseudo-cube", "weak"}))
    for d in range(1, 5):
        out.append((f"CP{d}", clique_product(d), {"weakly-dual-systolic", "weak"}))
    for n in (4, 6, 8, 10):
        out.append((f"C{n}", cycle(n), {"pseudo-cube"}))
    out.append(("C6xC6", cartesian(cycle(6), cycle(6)), set()))
    out.append(("C6xQ2", cartesian(cycle(6), boolean_cube(2)), set()))
    out.append(("cards-dual", dual_graph(cards_complex()), set()))
    rng = np.random.default_rng(7)
    k = 0
    while k < 12:
        g = random_matching_graph(rng, int(rng.integers(2, 5)), 2 * int(rng.integers(2, 8)))
        if g is not None:
            out.append((f"rand{k}", g, set()))
            k += 1
    return out


def complex_corpus():
    out = [("cards", cards_complex())]
    out += [(f"cube{d}", cube_complex(d)) for d in range(1, 5)]
    out.append(("cards-4-5", cards_complex(4, 5)))
    for name, g, _ in graph_corpus():
        try:
            out.append((f"dual-{name}", dual_complex(g)))
        except ComplexError:
            pass
    return out


def random_complexes(seed, count):
    """Valid complexes from the color-component construction on random graphs."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        g = random_matching_graph(rng, int(rng.integers(2, 5)), 2 * int(rng.integers(2, 9)))
        if g is None:
            continue
        try:
            out.append(dual_complex(g))
        except ComplexError:
            continue
    return out


# ---- reference implementations ----

def edge_list(g):
    return [tuple(e) for e in g.edges().tolist()]


def nx_components(nodes, edges, keep):
    h = nx.Graph()
    h.add_nodes_from(nodes)
    h.add_edges_from((u, v) for u, v, c in edges if c in keep)
    comp = {}
    for k, block in enumerate(sorted(nx.connected_components(h), key=min)):
        for v in block:
            comp[v] = k
    return comp


def ref_quotient_ok(nodes, edges, colors, i, allow_parallel):
    comp = nx_components(nodes, edges, set(colors) - {i})
    seen = set()
    for u, v, c in edges:
        if c != i:
            continue
        a, b = comp[u], comp[v]
        if a == b:
            return False
        key = (min(a, b), max(a, b))
        if key in seen and not allow_parallel:
            return False
        seen.add(key)
    return True


def ref_pseudo_cube(g):
    nodes, edges = range(g.num_vertices), edge_list(g)
    cols = range(1, g.dimension + 1)
    return all(ref_quotient_ok(nodes, edges, cols, i, True) for i in cols)


def ref_dual_systolic(g):
    nodes, edges = range(g.num_vertices), edge_list(g)
    cols = range(1, g.dimension + 1)
    return all(ref_quotient_ok(nodes, edges, cols, i, False) for i in cols)


def _ref_recursive(nodes, edges, k, strict_inner, allow_parallel):
    if k == 0:
        return True
    if not ref_quotient_ok(nodes, edges, range(1, k + 1), k, allow_parallel):
        return False
    comp = nx_components(nodes, edges, set(range(1, k)))
    groups = {}
    for v in nodes:
        groups.setdefault(comp[v], set()).add(v)
    for block in groups.values():
        sub = [e for e in edges if e[2] < k and e[0] in block]
        if strict_inner:
            cols = range(1, k)
            if not all(ref_quotient_ok(block, sub, cols, i, True) for i in cols):
                return False
        elif not _ref_recursive(block, sub, k - 1, False, allow_parallel):
            return False
    return True


def ref_weakly_dual_systolic(g):
    return _ref_recursive(set(range(g.num_vertices)), edge_list(g), g.dimension,
                          False, False)


def ref_weak_pseudo_cube(g, mode):
    return _ref_recursive(set(range(g.num_vertices)), edge_list(g), g.dimension,
                          mode == "literal", True)


def ref_boundary(g, subset):
    s = set(subset)
    return sum((u in s) != (v in s) for u, v, _ in edge_list(g))


def ref_profile(g, sizes):
    """Brute force: size -> (min boundary, lexicographically first minimizer)."""
    out = {}
    for s in sizes:
        best = None
        for U in combinations(range(g.num_vertices), s):
            b = ref_boundary(g, U)
            if best is None or b < best[0]:
                best = (b, U)
        out[s] = best
    return out


def complex_from_facets(d, facets):
    verts = sorted({(v, i + 1) for f in facets for i, v in enumerate(f)})
    return validate_complex(d, verts, facets)
