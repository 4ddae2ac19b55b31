import pytest

import imsolve as im
from imsolve.kernel import (
    RULE_ISOLATED_EDGE,
    RULE_ISOLATED_VERTEX,
    RULE_PENDANT_TRIANGLE,
    Instance,
    TerminalState,
    reduce_instance,
    terminal_state,
)
from imsolve.oracle import measure

from conftest import all_labeled_graphs, build, cycle, random_graphs


def test_instance_rejects_negative_target():
    with pytest.raises(ValueError):
        Instance(build(1), -1)


def test_paw_with_tail_trace():
    reduced, harvested, trace = reduce_instance(Instance(im.paw_with_tail(), 2))
    rules = [s.rule for s in trace.steps]
    assert rules == [RULE_PENDANT_TRIANGLE, RULE_ISOLATED_EDGE, RULE_ISOLATED_EDGE]
    assert trace.steps[0].deleted == ("a",)
    assert harvested == frozenset({("b", "c"), ("x", "y")})
    assert reduced.ell == 0
    assert reduced.graph.vertex_count == 0
    assert im.verify_induced_matching(im.paw_with_tail(), harvested)


def test_triangle_star_reduces_completely():
    g = im.triangle_star_graph(4)
    reduced, harvested, trace = reduce_instance(Instance(g, 4))
    assert reduced.ell == 0
    assert reduced.graph.vertex_count == 0
    assert len(harvested) == 4
    rules = [s.rule for s in trace.steps]
    assert rules.count(RULE_PENDANT_TRIANGLE) == 1
    assert rules.count(RULE_ISOLATED_EDGE) == 4
    assert trace.steps[0].deleted == ("s",)
    assert im.verify_induced_matching(g, harvested)


def test_cycle_is_already_reduced():
    inst = Instance(cycle(5), 1)
    reduced, harvested, trace = reduce_instance(inst)
    assert reduced == inst
    assert harvested == frozenset()
    assert trace.steps == ()


def test_target_floor_deletes_without_harvest():
    reduced, harvested, trace = reduce_instance(Instance(build(2, [(1, 2)]), 0))
    assert reduced.ell == 0
    assert reduced.graph.vertex_count == 0
    assert harvested == frozenset()
    assert trace.steps == (
        im.ReductionStep(RULE_ISOLATED_EDGE, (1, 2), None),
    )


def test_isolated_vertices_removed_first_smallest_first():
    g = build(3)
    _, _, trace = reduce_instance(Instance(g, 0))
    assert [s.deleted for s in trace.steps] == [(1,), (2,), (3,)]
    assert all(s.rule == RULE_ISOLATED_VERTEX for s in trace.steps)


def test_pendant_triangle_mode_toggle():
    g = im.triangle_star_graph(1)  # one triangle: only the triangle rule acts
    reduced, _, _ = reduce_instance(Instance(g, 1), pendant_triangles=False)
    assert reduced.graph.vertex_count == 3
    reduced, harvested, _ = reduce_instance(Instance(g, 1))
    assert reduced.graph.vertex_count == 0
    assert len(harvested) == 1


def test_fixpoint_no_features_left():
    for g in random_graphs(200, seed0=17):
        reduced, _, _ = reduce_instance(Instance(g, 2))
        feats = reduced.graph.local_features()
        assert feats.isolated_vertices == ()
        assert feats.isolated_edges == ()
        assert feats.pendant_triangles == ()


def test_trace_harvest_bookkeeping():
    for g in random_graphs(150, seed0=29):
        for ell in (0, 1, 2, 3):
            inst = Instance(g, ell)
            reduced, harvested, trace = reduce_instance(inst)
            assert all(
                (s.harvested is not None) <= (s.rule == RULE_ISOLATED_EDGE)
                for s in trace.steps
            )
            assert len(harvested) == ell - reduced.ell


def test_equivalence_on_small_graphs():
    for g in all_labeled_graphs(4):
        top = (g.vertex_count + 1) // 2 + 1
        for ell in range(top + 1):
            reduced, harvested, _ = reduce_instance(Instance(g, ell))
            before = im.brute_im(g)[0] >= ell
            after = im.brute_im(reduced.graph)[0] >= reduced.ell
            assert before == after


def test_certificate_composition():
    for g in random_graphs(150, seed0=37):
        reduced, harvested, _ = reduce_instance(Instance(g, 3))
        _, witness = im.brute_im(reduced.graph)
        assert im.verify_induced_matching(g, harvested | witness)


def test_measure_never_increases():
    for g in random_graphs(120, max_n=8, seed0=41):
        for ell in (1, 2):
            reduced, _, _ = reduce_instance(Instance(g, ell))
            assert measure(reduced.graph, reduced.ell) <= measure(g, ell)


def test_terminal_state_order():
    assert terminal_state(Instance(cycle(5), 0), 0, 0) is TerminalState.YES
    assert terminal_state(Instance(build(3), 2), 0, 9) is TerminalState.NO
    assert terminal_state(Instance(cycle(5), 2), 0, 0) is TerminalState.EXHAUSTED
    assert terminal_state(Instance(cycle(5), 2), 0, 1) is TerminalState.CONTINUE
    # the yes check precedes the budget check
    assert terminal_state(Instance(build(0), 0), 5, 0) is TerminalState.YES
