import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from corpus import graph_corpus, ref_boundary, ref_profile
from sysgraph import (boolean_cube, boundary, clique_product, exact_profile, expansion,
                      heuristic_min_expansion, heuristic_profile, inner_edges_by_color)
from sysgraph.errors import EmptySet, IdOutOfRange, TooLarge
from sysgraph.isoperimetry import (BoundKind, Method, check_profile_against_bounds,
                                   profile_csv)

CORPUS = graph_corpus()


def test_boundary_examples():
    q2 = boolean_cube(2)
    assert boundary(q2, [0]) == 2
    assert boundary(q2, [0, 1]) == 2
    assert boundary(q2, []) == 0 and boundary(q2, range(4)) == 0
    assert expansion(q2, [0, 1]) == 1
    with pytest.raises(EmptySet):
        expansion(q2, [])
    with pytest.raises(IdOutOfRange):
        boundary(q2, [4])


def test_inner_edges_cube_face():
    g = boolean_cube(3)
    assert inner_edges_by_color(g, [0, 1, 2, 3]) == [2, 2, 0]


@settings(max_examples=200, deadline=None)
@given(st.integers(0, len(CORPUS) - 1), st.data())
def test_boundary_matches_reference(k, data):
    g = CORPUS[k][1]
    U = data.draw(st.sets(st.integers(0, g.num_vertices - 1)))
    assert boundary(g, U) == ref_boundary(g, U)


def test_q2_profile():
    rep = exact_profile(boolean_cube(2))
    assert rep.values() == {1: 2, 2: 1, 3: Fraction(2, 3), 4: 0}
    assert all(r.method is Method.EXACT for r in rep.rows)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_cube_profile_sharp_at_powers_of_two(d):
    rep = exact_profile(boolean_cube(d))
    for r in rep.rows:
        assert r.value >= d - math.log2(r.s) - 1e-9
        if r.s & (r.s - 1) == 0:
            assert r.value == d - int(math.log2(r.s))


def test_sweep_and_rows_agree():
    g = clique_product(3)
    sizes = [1, 2, 3, 4]
    via_rows = exact_profile(g, sizes=sizes, threads=1)
    ref = ref_profile(g, sizes)
    for r in via_rows.rows:
        assert r.boundary == ref[r.s][0] and r.witness == ref[r.s][1]
    g = boolean_cube(3)
    sweep = exact_profile(g)
    rows = exact_profile(g, sizes=range(1, 9), row_limit=10 ** 7)
    assert sweep.values() == rows.values()


@pytest.mark.parametrize("threads", [1, 2, 5])
def test_threads_do_not_change_rows(threads):
    g = clique_product(3)
    base = exact_profile(g, sizes=[3, 5, 38], threads=1)
    other = exact_profile(g, sizes=[3, 5, 38], threads=threads)
    assert [(r.value, r.witness) for r in base.rows] == [(r.value, r.witness) for r in other.rows]


def test_row_limit():
    with pytest.raises(TooLarge):
        exact_profile(clique_product(3), sizes=[10])


def test_bad_sizes():
    with pytest.raises(ValueError):
        exact_profile(boolean_cube(2), sizes=[5])


@pytest.mark.parametrize("name,g,_", [c for c in CORPUS if c[1].num_vertices <= 16],
                         ids=[c[0] for c in CORPUS if c[1].num_vertices <= 16])
def test_heuristic_upper_bounds_exact(name, g, _):
    exact = exact_profile(g)
    for s in range(1, g.num_vertices + 1):
        value, wit = heuristic_min_expansion(g, s, trials=4, seed=1)
        assert value >= exact.row(s).value
        assert len(wit) == s and expansion(g, wit) == value


def test_heuristic_deterministic_across_threads():
    g = clique_product(3)
    a = heuristic_profile(g, [5, 10, 21], trials=6, seed=11, threads=1)
    b = heuristic_profile(g, [5, 10, 21], trials=6, seed=11, threads=4)
    assert [(r.value, r.witness) for r in a.rows] == [(r.value, r.witness) for r in b.rows]


def test_heuristic_finds_copy_on_cp3():
    # a CP^(2) copy has 6 vertices and 6 outgoing edges
    value, _ = heuristic_min_expansion(clique_product(3), 6, trials=8, seed=0)
    assert value == 1


def test_bound_checks_and_csv():
    rep = exact_profile(boolean_cube(2))
    checks = check_profile_against_bounds(rep, BoundKind.PSEUDO_CUBE)
    assert all(c.passed for c in checks)
    assert [c.bound for c in checks][:2] == [2.0, 1.0]
    text = profile_csv(rep, ["hello"])
    lines = text.splitlines()
    assert lines[0] == "# hello"
    assert lines[1].startswith("s,min_expansion_num,min_expansion_den,method")
    assert lines[3] == "2,1,1,exact,1,-6,1,1,0;1"


def test_hexagon_rows_and_symmetric_boundary():
    rep = exact_profile(clique_product(2))
    assert rep.row(2).value == 1 and rep.row(3).value == Fraction(2, 3)
    g = clique_product(3)
    U = [0, 5, 7, 19, 40]
    assert boundary(g, U) == boundary(g, set(range(42)) - set(U))


def test_heuristic_small_cases():
    exact = exact_profile(boolean_cube(2))
    for s in range(1, 5):
        assert heuristic_min_expansion(boolean_cube(2), s, trials=10)[0] == exact.row(s).value
