import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from annigraph import cyclic_ring, product_ring
from annigraph.errors import NotDistinct, UnknownVertex
from annigraph.graphs import (
    INF,
    GraphKind,
    GraphShape,
    IdealGraph,
    ag_adjacent,
    ai_adjacent,
    ai_adjacent_by_definition,
    bipartition,
    build_graph,
    classify_shape,
    diameter,
    extra_edges,
    girth,
    induced_on_nilpotent,
    is_complete_bipartite,
    is_connected,
    is_star,
    neighborhood,
    shape_summary,
    star_centers,
    to_dot,
)
from annigraph.ideals import Ideal, annihilator, ideal_product, principal_ideal, zero_ideal

from oracles import naive_ai_adjacent

HOST = cyclic_ring(16)


def synthetic(edges, v):
    """A graph with the given edge list on placeholder vertices."""
    verts = tuple(Ideal.from_indices(HOST, [0, k + 1]) for k in range(v))
    adj = np.zeros((v, v), dtype=bool)
    for a, b in edges:
        adj[a, b] = adj[b, a] = True
    return IdealGraph(HOST, GraphKind.AG, verts, adj)


@st.composite
def random_graphs(draw, max_v=8):
    v = draw(st.integers(0, max_v))
    pairs = list(itertools.combinations(range(v), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return synthetic(chosen, v)


def z16_ideals():
    return principal_ideal(HOST, 2), principal_ideal(HOST, 4), principal_ideal(HOST, 8)


# -- adjacency -------------------------------------------------------------------

def test_ag_adjacency_z16():
    m, m2, m3 = z16_ideals()
    assert ag_adjacent(m, m3)
    assert not ag_adjacent(m, m2)


def test_ai_adjacency_z16():
    m, m2, _ = z16_ideals()
    assert ai_adjacent(m, m2)
    assert ai_adjacent_by_definition(m, m2)


def test_field_times_local_extra_edge(z2z4):
    names = z2z4.names
    i2 = Ideal.from_indices(z2z4, [x for x in range(8) if names[x][3] in "02"])  # Z2 x 2Z4
    i4 = Ideal.from_indices(z2z4, [x for x in range(8) if names[x][1] == "0"])  # 0 x Z4
    assert not ideal_product(i2, i4).is_zero
    assert ai_adjacent(i2, i4)
    assert extra_edges(z2z4) == [(i4, i2)]


def test_not_distinct_errors():
    m, _, _ = z16_ideals()
    for fn in (ag_adjacent, ai_adjacent, ai_adjacent_by_definition):
        with pytest.raises(NotDistinct):
            fn(m, m)


# -- build + invariants ------------------------------------------------------------

def test_z16_graphs(z16):
    ag, ai = build_graph(z16, "AG"), build_graph(z16, GraphKind.AI)
    assert str(classify_shape(ag)) == "K1,2"
    assert classify_shape(ag) == GraphShape("Star", (2,))
    assert str(classify_shape(ai)) == "K3"
    assert girth(ai) == 3 and diameter(ai) == 1
    assert girth(ag) == INF and diameter(ag) == 2
    m, m2, m3 = z16_ideals()
    assert extra_edges(z16) == [(m2, m)]
    assert neighborhood(ag, m3) == {m, m2}
    assert neighborhood(ai, m3) == {m, m2}


@pytest.mark.parametrize("fixture", ["z2z4", "z2_dual"])
def test_field_times_local_graphs(fixture, request):
    r = request.getfixturevalue(fixture)
    ag, ai = build_graph(r, "AG"), build_graph(r, "AI")
    assert classify_shape(ag) == GraphShape("Path", (4,))
    assert classify_shape(ai) == GraphShape("Cycle", (4,))
    assert girth(ai) == 4 and diameter(ai) == 2
    assert girth(ag) == INF and diameter(ag) == 3
    assert len(extra_edges(r)) == 1


def test_small_examples(gf4, n22):
    assert build_graph(gf4, "AI").order == 0
    assert diameter(build_graph(gf4, "AI")) is None
    assert classify_shape(build_graph(n22, "AG")) == GraphShape("Complete", (4,))
    assert extra_edges(cyclic_ring(6)) == []
    z8 = build_graph(cyclic_ring(8), "AI")
    assert str(classify_shape(z8)) == "K2" and girth(z8) == INF and diameter(z8) == 1


def test_induced_on_nilpotent(z16, z2z4):
    assert str(classify_shape(induced_on_nilpotent(build_graph(z16, "AI")))) == "K3"
    sub = induced_on_nilpotent(build_graph(z2z4, "AI"))
    assert sub.order == 1
    assert induced_on_nilpotent(build_graph(cyclic_ring(6), "AI")).order == 0


def test_graph_is_cached_and_immutable(z16):
    g = build_graph(z16, "AI")
    assert build_graph(z16, "AI") is g
    with pytest.raises(ValueError):
        g.adjacency[0, 1] = False


def test_unknown_vertex(z16, gf4):
    with pytest.raises(UnknownVertex):
        neighborhood(build_graph(z16, "AG"), zero_ideal(z16))
    with pytest.raises(UnknownVertex):
        neighborhood(build_graph(gf4, "AG"), zero_ideal(gf4))


def test_matches_networkx(corpus16):
    for r in corpus16:
        for kind in GraphKind:
            g = build_graph(r, kind)
            h = g.to_networkx()
            assert g.edge_count == h.number_of_edges()
            expected = nx.girth(h) if g.order else INF
            assert girth(g) == expected, r.label
            if g.order >= 1:
                assert is_connected(g) == nx.is_connected(h)
                if nx.is_connected(h):
                    assert diameter(g) == nx.diameter(h)
                else:
                    assert diameter(g) == INF


# -- shapes --------------------------------------------------------------------------

@pytest.mark.parametrize("edges, v, text", [
    ([(0, 1)], 2, "K2"),
    ([(0, 1), (1, 2), (0, 2)], 3, "K3"),
    ([(0, 1), (0, 2)], 3, "K1,2"),
    ([(0, 1), (1, 2), (2, 3)], 4, "P4"),
    ([(0, 1), (1, 2), (2, 3), (3, 0)], 4, "C4"),
    ([(0, 1), (0, 2), (0, 3)], 4, "K1,3"),
    ([(a, b) for a in (0, 1) for b in (2, 3, 4)], 5, "K2,3"),
    ([(0, 1), (2, 3)], 4, "other"),
    ([], 1, "K1"),
])
def test_shape_classification(edges, v, text):
    assert str(classify_shape(synthetic(edges, v))) == text


def test_k11_star_has_two_centres():
    g = synthetic([(0, 1)], 2)
    assert star_centers(g) == [0, 1]
    assert is_star(g) and is_complete_bipartite(g, 1, 1)


def test_k23_recognised():
    g = synthetic([(a, b) for a in (0, 1) for b in (2, 3, 4)], 5)
    assert is_complete_bipartite(g, 2, 3)
    assert not is_complete_bipartite(g, 1, 4)
    assert bipartition(g) == ([0, 1], [2, 3, 4])


@settings(max_examples=150, deadline=None)
@given(random_graphs())
def test_recognisers_match_networkx(g):
    h = g.to_networkx()
    v = g.order
    shape = classify_shape(g)
    complete = h.number_of_edges() == v * (v - 1) // 2
    assert (shape.tag == "Complete") == complete
    if shape.tag == "Cycle":
        assert nx.is_isomorphic(h, nx.cycle_graph(v))
    if shape.tag == "Path":
        assert nx.is_isomorphic(h, nx.path_graph(v))
    if shape.tag == "Star":
        assert nx.is_isomorphic(h, nx.star_graph(v - 1))
    if shape.tag == "CompleteBipartite":
        m, n = shape.sizes
        assert nx.is_isomorphic(h, nx.complete_bipartite_graph(m, n))
    if is_star(g):
        assert nx.is_isomorphic(h, nx.star_graph(v - 1))
    parts = bipartition(g)
    if parts is not None:
        assert nx.is_isomorphic(h, nx.complete_bipartite_graph(len(parts[0]), len(parts[1])))
    gi = girth(g)
    assert gi == (nx.girth(h) if v else INF)


# -- DOT -------------------------------------------------------------------------------

Z16_AI_DOT = (
    "// A_I(R) of Z16: 3 vertices, 3 edges\n"
    "graph {\n"
    '  "{0,8}";\n'
    '  "{0,4,8,12}";\n'
    '  "{0,2,4,6,8,10,12,14}";\n'
    '  "{0,8}" -- "{0,4,8,12}";\n'
    '  "{0,8}" -- "{0,2,4,6,8,10,12,14}";\n'
    '  "{0,4,8,12}" -- "{0,2,4,6,8,10,12,14}" [style=dashed];\n'
    "}\n"
)


def test_dot_z16(z16):
    assert to_dot(build_graph(z16, "AI")) == Z16_AI_DOT
    ag = to_dot(build_graph(z16, "AG"))
    assert "dashed" not in ag and ag.count(" -- ") == 2


def test_dot_k2_and_empty(gf4):
    z6 = to_dot(build_graph(cyclic_ring(6), "AG"))
    assert z6 == ('// AG(R) of Z6: 2 vertices, 1 edges\ngraph {\n  "{0,3}";\n  "{0,2,4}";\n'
                  '  "{0,3}" -- "{0,2,4}";\n}\n')
    assert to_dot(build_graph(gf4, "AI")).endswith("graph { }\n")


def test_shape_summary(z16, gf4):
    assert shape_summary(build_graph(z16, "AI")) == "shape=K3 girth=3 diam=1"
    assert shape_summary(build_graph(z16, "AG")) == "shape=K1,2 girth=inf diam=2"
    assert shape_summary(build_graph(gf4, "AG")) == "shape=K0 girth=inf diam=n/a"


# -- corpus-wide properties --------------------------------------------------------

def test_edge_inclusion_and_oracle(corpus16):
    for r in corpus16:
        ag, ai = build_graph(r, "AG"), build_graph(r, "AI")
        assert not (ag.adjacency & ~ai.adjacency).any(), r.label
        assert np.array_equal(ai.adjacency, ai.adjacency.T) and not ai.adjacency.diagonal().any()
        for a, b in itertools.combinations(range(ai.order), 2):
            va, vb = ai.vertices[a], ai.vertices[b]
            expected = naive_ai_adjacent(r, va.elements, vb.elements)
            assert ai.has_edge(a, b) == expected == ai_adjacent_by_definition(va, vb)
            if ag.has_edge(a, b):
                assert ideal_product(va, vb).is_zero
            if not ai.has_edge(a, b):
                # non-adjacent pairs have comparable annihilators
                x, y = annihilator(va), annihilator(vb)
                assert x <= y or y <= x


def test_diameter_and_girth_bounds(corpus16):
    for r in corpus16:
        ag, ai = build_graph(r, "AG"), build_graph(r, "AI")
        if ai.order >= 2:
            assert is_connected(ai) and diameter(ai) <= 2
        assert girth(ai) in (3, 4, INF)
        if not ag.same_edges(ai):
            assert girth(ai) in (3, 4)


def test_product_vertex_count():
    r = product_ring(product_ring(cyclic_ring(2), cyclic_ring(2)), cyclic_ring(2))
    assert build_graph(r, "AI").order == 6
