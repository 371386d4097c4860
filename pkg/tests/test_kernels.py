import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from corpus import graph_corpus, random_matching_graph, ref_profile
from sysgraph import _backend, boolean_cube, clique_product

PURE = _backend.pure
COMPILED = _backend.compiled
BACKENDS = [PURE] + ([COMPILED] if COMPILED is not None else [])
SMALL = [(name, g) for name, g, _ in graph_corpus() if g.num_vertices <= 12]


def test_compiled_backend_is_built():
    assert COMPILED is not None
    assert _backend.BACKEND in ("cython", "python")


@pytest.mark.parametrize("kern", BACKENDS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
@pytest.mark.parametrize("name,g", SMALL, ids=[s[0] for s in SMALL])
def test_sweep_matches_brute_force(kern, name, g):
    n = g.num_vertices
    best, masks = kern.min_boundary_sweep(g.table, n)
    ref = ref_profile(g, range(1, n + 1))
    for s in range(1, n + 1):
        assert best[s] == ref[s][0]
        assert [v for v in range(n) if (int(masks[s]) >> v) & 1] == list(ref[s][1])


@pytest.mark.parametrize("kern", BACKENDS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
@pytest.mark.parametrize("name,g", SMALL, ids=[s[0] for s in SMALL])
def test_combinations_match_brute_force(kern, name, g):
    n = g.num_vertices
    ref = ref_profile(g, range(1, n + 1))
    for s in range(1, n + 1):
        best, wit = kern.min_boundary_combinations(g.table, s, 0, n)
        assert best == ref[s][0] and tuple(wit) == ref[s][1]


@pytest.mark.parametrize("kern", BACKENDS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
def test_combinations_empty_range(kern):
    g = boolean_cube(3)
    best, wit = kern.min_boundary_combinations(g.table, 4, 6, 8)
    assert best == -1 and wit is None


@pytest.mark.skipif(COMPILED is None, reason="extension not built")
@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 32 - 1), st.integers(1, 4), st.integers(2, 11))
def test_backends_agree(seed, d, half):
    g = random_matching_graph(np.random.default_rng(seed), d, 2 * half)
    if g is None:
        return
    n = g.num_vertices
    for kern_fn in ("min_boundary_sweep",):
        a = getattr(PURE, kern_fn)(g.table, n)
        b = getattr(COMPILED, kern_fn)(g.table, n)
        assert list(a[0]) == list(b[0]) and list(a[1]) == list(b[1])
    for s in (1, half, n - 1):
        a = PURE.min_boundary_combinations(g.table, s, 0, n)
        b = COMPILED.min_boundary_combinations(g.table, s, 0, n)
        assert a[0] == b[0] and list(a[1]) == list(b[1])
    keep = np.zeros(d, dtype=np.uint8)
    keep[: d // 2 + 1] = 1
    la, ca = PURE.label_components(g.table, keep)
    lb, cb = COMPILED.label_components(g.table, keep)
    assert ca == cb and la.tolist() == lb.tolist()


@pytest.mark.skipif(COMPILED is None, reason="extension not built")
def test_backends_agree_cp4_components():
    g = clique_product(4)
    for mask in ([1, 0, 0, 0], [1, 1, 0, 0], [1, 1, 1, 0], [0, 1, 0, 1]):
        keep = np.array(mask, dtype=np.uint8)
        la, ca = PURE.label_components(g.table, keep)
        lb, cb = COMPILED.label_components(g.table, keep)
        assert ca == cb and np.array_equal(la, lb)


@pytest.mark.skipif(COMPILED is None, reason="extension not built")
def test_benchmark_script_runs():
    import pathlib
    import subprocess
    import sys
    script = pathlib.Path(__file__).parents[1] / "benchmarks" / "bench_kernels.py"
    res = subprocess.run([sys.executable, str(script), "--quick", "--repeat", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "MISMATCH" not in res.stdout
    assert res.stdout.count("x\n") == 4
