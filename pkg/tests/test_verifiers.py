import pytest

from corpus import (graph_corpus, ref_dual_systolic, ref_pseudo_cube,
                    ref_weak_pseudo_cube, ref_weakly_dual_systolic, cycle)
from sysgraph import (boolean_cube, clique_product, replay_witness, validate, verify,
                      verify_dual_systolic, verify_pseudo_cube, verify_weak_pseudo_cube,
                      verify_weakly_dual_systolic)
from sysgraph.verifiers import Property, WitnessKind

CORPUS = graph_corpus()
IDS = [c[0] for c in CORPUS]


@pytest.mark.parametrize("name,g,tags", CORPUS, ids=IDS)
def test_verdicts_match_reference(name, g, tags):
    got = {
        "pc": verify_pseudo_cube(g),
        "ds": verify_dual_systolic(g),
        "wds": verify_weakly_dual_systolic(g),
        "wpc-lit": verify_weak_pseudo_cube(g, "literal"),
        "wpc-weak": verify_weak_pseudo_cube(g, "fully_weak"),
    }
    ref = {
        "pc": ref_pseudo_cube(g),
        "ds": ref_dual_systolic(g),
        "wds": ref_weakly_dual_systolic(g),
        "wpc-lit": ref_weak_pseudo_cube(g, "literal"),
        "wpc-weak": ref_weak_pseudo_cube(g, "fully_weak"),
    }
    assert {k: r.verdict for k, r in got.items()} == ref
    for r in got.values():
        if r.witness is not None:
            assert replay_witness(g, r.witness)
    if "pseudo-cube" in tags:
        assert ref["pc"]
    if "weakly-dual-systolic" in tags:
        assert ref["wds"]


@pytest.mark.parametrize("name,g,tags", CORPUS, ids=IDS)
def test_hierarchy(name, g, tags):
    if verify_dual_systolic(g).verdict:
        assert verify_pseudo_cube(g).verdict
        assert verify_weakly_dual_systolic(g).verdict
    if verify_pseudo_cube(g).verdict:
        assert verify_weak_pseudo_cube(g, "literal").verdict
    if verify_weakly_dual_systolic(g).verdict:
        assert verify_weak_pseudo_cube(g, "fully_weak").verdict
    if verify_weak_pseudo_cube(g, "literal").verdict:
        assert verify_weak_pseudo_cube(g, "fully_weak").verdict


@pytest.mark.parametrize("d", range(2, 7))
def test_cube_parallel_witness(d):
    g = boolean_cube(d)
    assert verify_pseudo_cube(g).verdict == ref_pseudo_cube(g)
    r = verify_dual_systolic(g)
    w = r.witness
    assert not r.verdict and w.kind is WitnessKind.PARALLEL_EDGE_PAIR
    assert w.multiplicity == 2 ** (d - 1)
    assert replay_witness(g, w)


def test_q1_dual_systolic():
    assert verify_dual_systolic(boolean_cube(1)).verdict


def test_hexagon_dual_systolic_square_not():
    assert verify_dual_systolic(cycle(6)).verdict
    assert not verify_dual_systolic(cycle(4)).verdict


def test_self_loop_witness():
    # colors 1,2 form a 4-cycle; color 3 chords it
    g = validate(3, 4, [(0, 1, 1), (2, 3, 1), (1, 2, 2), (0, 3, 2), (0, 2, 3), (1, 3, 3)])
    r = verify_pseudo_cube(g)
    assert not r.verdict and r.witness.kind is WitnessKind.SELF_LOOP_EDGE
    # K4 minus the color-1 edges is connected, so color 1 is hit first
    assert r.witness.color == 1 and replay_witness(g, r.witness)


def test_clique_products_not_strict():
    # components of CP^(3) minus a low color are not separated enough
    assert verify_dual_systolic(clique_product(2)).verdict
    assert not verify_pseudo_cube(clique_product(3)).verdict
    assert not verify_pseudo_cube(clique_product(4)).verdict


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_clique_products_weakly_dual_systolic(d):
    r = verify_weakly_dual_systolic(clique_product(d))
    assert r.verdict
    assert len(r.trace_levels) == d - 1
    sizes = [lv.size for lv in r.trace_levels]
    from sysgraph.constructions import copy_blocks
    assert sizes == [copy_blocks(d, j)[1] for j in range(1, d)]


def squares_joined_by_k5():
    """Five 4-cycles (colors 1, 2) whose vertices are matched by color 3 so
    that every pair of cycles shares exactly one color-3 edge."""
    edges = []
    for a in range(5):
        o = 4 * a
        edges += [(o, o + 1, 1), (o + 2, o + 3, 1), (o, o + 3, 2), (o + 1, o + 2, 2)]
    for a in range(5):
        for b in range(a + 1, 5):
            ia = b - 1  # rank of b among the partners of a
            ib = a      # rank of a among the partners of b
            edges.append((4 * a + ia, 4 * b + ib, 3))
    return validate(3, 20, edges)


def test_bad_component_witness_and_trace():
    g = squares_joined_by_k5()
    assert ref_weakly_dual_systolic(g) is False
    r = verify_weakly_dual_systolic(g)
    w = r.witness
    assert not r.verdict and w.kind is WitnessKind.BAD_COMPONENT
    assert w.cause is WitnessKind.PARALLEL_EDGE_PAIR and w.color == 2
    assert len(w.component_path) == 1 and replay_witness(g, w)
    summary = r.trace_summary()
    assert summary[0] == {"depth": 1, "components": 5, "failed": 5}
    # the top level itself is fine: one color-3 edge per pair of squares
    # squares are pseudo-cubes, so only the simplicity condition fails
    assert verify_weak_pseudo_cube(g, "literal").verdict
    assert verify_weak_pseudo_cube(g, "fully_weak").verdict
    assert verify_pseudo_cube(g).verdict == ref_pseudo_cube(g)


def test_verify_dispatch_and_modes():
    g = clique_product(4)
    assert verify(g, "weakly-dual-systolic").verdict
    assert verify(g, Property.WEAK_PSEUDO_CUBE, "weak").verdict
    r = verify(g, "weak-pseudo-cube", "literal")
    assert not r.verdict and r.witness.kind is WitnessKind.BAD_COMPONENT
    assert r.mode == "literal"
    assert replay_witness(g, r.witness)
    with pytest.raises(ValueError):
        verify(g, "weak-pseudo-cube", "sideways")


def test_mode_aliases():
    from sysgraph.verifiers import MODE_ALIASES
    g = clique_product(3)
    for alias, mode in MODE_ALIASES.items():
        r = verify_weak_pseudo_cube(g, alias)
        assert r.mode == mode and r.verdict
    assert not verify_weak_pseudo_cube(clique_product(4), "literal").verdict


def test_report_dict():
    d = verify_dual_systolic(boolean_cube(3)).to_dict()
    assert d["verdict"] is False and d["witness"]["kind"] == "ParallelEdgePair"
    assert d["witness"]["multiplicity"] == 4
