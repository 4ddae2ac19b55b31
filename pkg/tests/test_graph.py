import pytest
from hypothesis import given

import imsolve as im
from imsolve.errors import (
    DuplicateEdgeError,
    SelfLoopError,
    UnknownEndpointError,
    UnknownVertexError,
)

from conftest import build, complete, cycle, graphs, path, star


def test_build_smallest():
    g = im.Graph.build({"a", "b"}, [("a", "b")])
    assert g.vertex_count == 2
    assert g.edge_count == 1
    assert g.has_edge("a", "b") and g.has_edge("b", "a")


def test_build_fig2_shape():
    g = im.naive_branch_trap()
    assert g.vertex_count == 9
    assert g.edge_count == 13


def test_build_rejections():
    with pytest.raises(SelfLoopError):
        im.Graph.build({"a"}, [("a", "a")])
    with pytest.raises(DuplicateEdgeError):
        im.Graph.build({"a", "b"}, [("a", "b"), ("b", "a")])
    with pytest.raises(UnknownEndpointError):
        im.Graph.build({"a", "b"}, [("a", "c")])


def test_delete_vertices_identity_and_empty():
    g = cycle(5)
    assert g.delete_vertices(set()) == g
    assert g.delete_vertices(set(g.vertices)).vertex_count == 0
    with pytest.raises(UnknownVertexError):
        g.delete_vertices({99})


def test_delete_keeps_matching_number_on_trap():
    g = im.naive_branch_trap()
    h = g.delete_vertices({"s"})
    assert h.vertex_count == 8
    assert len(im.maximum_matching(h)) == 4
    assert g.vertex_count == 9  # value semantics


def test_connected_components():
    g = build(4, [(1, 2), (3, 4)])
    comps = g.connected_components()
    assert comps == (frozenset({1, 2}), frozenset({3, 4}))
    assert build(0).connected_components() == ()
    assert len(im.naive_branch_trap().connected_components()) == 1


def test_bipartition():
    sides = cycle(6).bipartition()
    assert sides is not None
    u, w = sides
    assert len(u) == 3 and len(w) == 3
    assert cycle(3).bipartition() is None
    u, w = star(3).bipartition()
    assert u == frozenset({1}) and w == frozenset({2, 3, 4})


def test_local_features_single_edge():
    feats = build(2, [(1, 2)]).local_features()
    assert feats.isolated_edges == ((1, 2),)
    assert feats.isolated_vertices == ()
    assert feats.pendant_triangles == ()


def test_local_features_triangle_star():
    feats = im.triangle_star_graph(4).local_features()
    assert len(feats.pendant_triangles) == 4
    assert all(v == "s" for _, v, _ in feats.pendant_triangles)


def test_local_features_c5_empty():
    feats = cycle(5).local_features()
    assert feats == ((), (), ())


def test_local_features_isolated_triangle():
    # all three degrees are 2: the smallest vertex is reported as survivor
    feats = complete(3).local_features()
    assert feats.pendant_triangles == ((2, 1, 3),)


def test_verify_induced_matching_cases():
    paw = im.paw_with_tail()
    assert im.verify_induced_matching(paw, {("b", "c"), ("x", "y")})
    assert not im.verify_induced_matching(paw, {("a", "b"), ("a", "x")})
    p4 = path(4)
    assert not im.verify_induced_matching(p4, {(1, 2), (3, 4)})
    assert im.verify_induced_matching(p4, {(1, 2)})
    assert im.verify_induced_matching(p4, set())
    with pytest.raises(UnknownEndpointError):
        im.verify_induced_matching(p4, {(1, 99)})
    # pair that is not an edge of the host graph
    assert not im.verify_induced_matching(p4, {(1, 3)})


@given(graphs(max_n=7))
def test_degree_sum_is_twice_edges(g):
    assert sum(g.degree(v) for v in g.vertices) == 2 * g.edge_count


@given(graphs(max_n=7))
def test_delete_composes_over_disjoint_sets(g):
    vs = list(g.vertices)
    s1 = frozenset(vs[::3])
    s2 = frozenset(vs[1::3])
    assert g.delete_vertices(s1).delete_vertices(s2) == g.delete_vertices(s1 | s2)


@given(graphs(max_n=7))
def test_bipartition_has_no_intra_side_edge(g):
    sides = g.bipartition()
    if sides is None:
        return
    u, w = sides
    assert u | w == frozenset(g.vertices) and not (u & w)
    for a, b in g.edges():
        assert (a in u) != (b in u)


@given(graphs(max_n=7))
def test_components_partition_vertices(g):
    comps = g.connected_components()
    seen = set()
    for comp in comps:
        assert not (comp & seen)
        seen |= comp
    assert seen == set(g.vertices)


@given(graphs(max_n=7))
def test_induced_matching_survives_into_host(g):
    # a certificate of an induced subgraph stays valid in the host graph
    keep = frozenset(list(g.vertices)[::2])
    sub = g.induced(keep)
    _, witness = im.brute_im(sub)
    assert im.verify_induced_matching(g, witness)
