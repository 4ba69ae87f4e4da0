import itertools
import random

import pytest

from raag.graphs import (
    Graph,
    complement,
    complete_graph,
    format_graph,
    full_embedding_search,
    graph_join,
    graph_to_dot,
    induced_subgraph,
    join_decompose,
    parse_graph,
    path_complement,
    path_graph,
    recognize_linear_forest_complement,
    verify_full_embedding,
)

from conftest import all_labeled_graphs, cycle_graph, random_graph


# -- construction and basic accessors ------------------------------------------


def test_graph_rejects_self_loop():
    with pytest.raises(ValueError, match="self-loop"):
        Graph("g", ["a"], [("a", "a")])


def test_graph_rejects_duplicate_vertex():
    with pytest.raises(ValueError, match="duplicate"):
        Graph("g", ["a", "a"])


def test_graph_rejects_unknown_edge_endpoint():
    with pytest.raises(ValueError, match="unknown"):
        Graph("g", ["a"], [("a", "b")])


def test_adjacency_is_symmetric():
    g = Graph("g", ["a", "b", "c"], [("a", "b")])
    assert g.adjacent("a", "b") and g.adjacent("b", "a")
    assert not g.adjacent("a", "c")
    assert g.degree("a") == 1 and g.degree("c") == 0


# -- complement -----------------------------------------------------------------


def test_complement_of_complete_is_edgeless():
    g = complement(complete_graph(3))
    assert g.edge_count() == 0 and len(g) == 3


def test_complement_single_vertex_fixed_point():
    g = Graph("g", ["a"])
    assert complement(g).edges() == []


def test_complement_of_p4():
    # oracle: direct enumeration of the non-edges of the path a-b-c-d
    p4 = Graph("P4", ["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")])
    expected = {
        frozenset(p) for p in itertools.combinations("abcd", 2)
    } - {frozenset(e) for e in p4.edges()}
    got = {frozenset(e) for e in complement(p4).edges()}
    assert got == expected == {frozenset("ac"), frozenset("ad"), frozenset("bd")}


def test_complement_involution_exhaustive_up_to_5():
    for n in range(1, 6):
        for g in all_labeled_graphs(n):
            assert complement(complement(g)) == g


# -- join decomposition ------------------------------------------------------------


def test_decompose_complete_graph_into_singletons():
    decomp = join_decompose(complete_graph(3))
    assert [c.kind for c in decomp.components] == ["singleton"] * 3


def test_decompose_p4c_is_irreducible():
    decomp = join_decompose(path_complement(4))
    assert len(decomp.components) == 1
    assert decomp.components[0].kind == "path-complement"


def test_decompose_complement_of_p2_disjoint_p1():
    # (P_2 disjoint-union P_1)^c on x1 x2 x3: edges x1-x3, x2-x3
    g = Graph("g", ["x1", "x2", "x3"], [("x1", "x3"), ("x2", "x3")])
    decomp = join_decompose(g)
    kinds = [c.kind for c in decomp.components]
    assert kinds == ["path-complement", "singleton"]
    assert decomp.components[0].graph.vertices == ("x1", "x2")
    assert decomp.components[0].graph.edge_count() == 0


def test_decompose_empty_graph_rejected():
    with pytest.raises(ValueError, match="empty input"):
        join_decompose(Graph("g", []))


def test_decompose_matches_complement_bfs_oracle():
    # independent oracle: explicit complement adjacency plus BFS
    rng = random.Random(99)
    for _ in range(120):
        g = random_graph(rng, rng.randint(1, 6), rng.random())
        comp_adj = {
            v: {u for u in g.vertices if u != v and not g.adjacent(u, v)}
            for v in g.vertices
        }
        seen = set()
        oracle = []
        for v in g.vertices:
            if v in seen:
                continue
            comp = {v}
            frontier = [v]
            while frontier:
                x = frontier.pop()
                for y in comp_adj[x]:
                    if y not in comp:
                        comp.add(y)
                        frontier.append(y)
            seen |= comp
            oracle.append(frozenset(comp))
        got = [frozenset(c.graph.vertices) for c in join_decompose(g).components]
        assert got == oracle


def test_decompose_rejoin_reconstructs():
    rng = random.Random(5)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 6), rng.random())
        decomp = join_decompose(g)
        rejoined = graph_join(decomp.graphs(), name=g.name)
        assert set(rejoined.vertices) == set(g.vertices)
        assert {frozenset(e) for e in rejoined.edges()} == {frozenset(e) for e in g.edges()}


# -- linear-forest-complement recognition -----------------------------------------------


def test_recognize_complete_graph():
    labelings = recognize_linear_forest_complement(complete_graph(4))
    assert labelings is not None and len(labelings) == 4
    assert all(len(lab.order) == 1 for lab in labelings)


def test_recognize_p5c():
    g = path_complement(5)
    labelings = recognize_linear_forest_complement(g)
    assert labelings is not None and len(labelings) == 1
    order = labelings[0].order
    assert set(order) == set(g.vertices)
    # consecutive labels are exactly the non-adjacent pairs
    for a in range(5):
        for b in range(a + 1, 5):
            assert g.adjacent(order[a], order[b]) == (b - a > 1)


def test_recognize_c4_as_two_anti_edges():
    labelings = recognize_linear_forest_complement(cycle_graph(4))
    assert labelings is not None and len(labelings) == 2
    assert sorted(len(lab.order) for lab in labelings) == [2, 2]


def test_recognize_rejects_c5():
    assert recognize_linear_forest_complement(cycle_graph(5)) is None


def test_recognize_empty_graph():
    assert recognize_linear_forest_complement(Graph("g", [])) is None


def test_recognized_labelings_are_anti_path_orders():
    rng = random.Random(17)
    found = 0
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 6), rng.random())
        labelings = recognize_linear_forest_complement(g)
        if labelings is None:
            continue
        found += 1
        for lab in labelings:
            order = lab.order
            for a in range(len(order)):
                for b in range(a + 1, len(order)):
                    assert g.adjacent(order[a], order[b]) == (b - a > 1)
    assert found > 20


# -- full embedding search ------------------------------------------------------------


def test_search_k2_into_k3_finds_first_edge():
    lam = complete_graph(2, prefix="u")
    found = full_embedding_search(lam, complete_graph(3))
    assert found == {"u1": "v1", "u2": "v2"}


def test_search_edgeless_pair_into_k3_fails():
    lam = Graph("lam", ["u1", "u2"])
    assert full_embedding_search(lam, complete_graph(3)) is None


def test_search_identity_case():
    g = path_complement(3)
    found = full_embedding_search(g, g)
    assert found == {v: v for v in g.vertices}


def test_search_restrict_subset_enforced():
    g = complete_graph(3)
    with pytest.raises(ValueError):
        full_embedding_search(complete_graph(2, prefix="u"), g, restrict=["v1", "zzz"])


def test_search_respects_restrict():
    g = complete_graph(4)
    lam = complete_graph(2, prefix="u")
    found = full_embedding_search(lam, g, restrict=["v3", "v4"])
    assert found == {"u1": "v3", "u2": "v4"}


def test_search_agrees_with_bruteforce():
    rng = random.Random(31)
    for _ in range(250):
        lam = random_graph(rng, rng.randint(1, 4), rng.random(), prefix="u")
        gam = random_graph(rng, rng.randint(1, 6), rng.random(), prefix="t")
        got = full_embedding_search(lam, gam)
        exists = False
        for perm in itertools.permutations(gam.vertices, len(lam)):
            mapping = dict(zip(lam.vertices, perm))
            if verify_full_embedding(lam, gam, mapping):
                exists = True
                break
        assert (got is not None) == exists
        if got is not None:
            assert verify_full_embedding(lam, gam, got)


def test_search_is_deterministic():
    rng = random.Random(77)
    for _ in range(40):
        lam = random_graph(rng, 3, 0.5, prefix="u")
        gam = random_graph(rng, 5, 0.5, prefix="t")
        assert full_embedding_search(lam, gam) == full_embedding_search(lam, gam)


# -- embedding verification --------------------------------------------------------------


def test_verify_identity_on_p4c():
    g = path_complement(4)
    assert verify_full_embedding(g, g, {v: v for v in g.vertices})


def test_verify_rejects_constant_map():
    k2 = complete_graph(2)
    chk = verify_full_embedding(k2, k2, {"v1": "v1", "v2": "v1"})
    assert not chk and "injectivity" in chk.violation


def test_verify_rejects_fullness_violation():
    lam = Graph("lam", ["u1", "u2"])
    c4 = cycle_graph(4)
    # a1 and a2 are adjacent in C_4 but u1, u2 are not adjacent in lam
    chk = verify_full_embedding(lam, c4, {"u1": "a1", "u2": "a2"})
    assert not chk and "fullness" in chk.violation


def test_verify_rejects_adjacency_violation():
    lam = complete_graph(2, prefix="u")
    c4 = cycle_graph(4)
    chk = verify_full_embedding(lam, c4, {"u1": "a1", "u2": "a3"})
    assert not chk and "adjacency" in chk.violation


def test_verify_requires_total_map():
    g = complete_graph(2)
    with pytest.raises(ValueError, match="not total"):
        verify_full_embedding(g, g, {"v1": "v1"})


def test_verify_reports_unknown_target():
    g = complete_graph(1)
    chk = verify_full_embedding(g, g, {"v1": "zzz"})
    assert not chk and "not a target vertex" in chk.violation


# -- text formats ------------------------------------------------------------------------


def test_parse_format_roundtrip():
    g = Graph("G", ["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert parse_graph(format_graph(g)) == g


def test_parse_empty_edges_line():
    g = parse_graph("graph G\nvertices: a b\nedges:\n")
    assert g.edge_count() == 0


@pytest.mark.parametrize(
    "text",
    [
        "graph G\nvertices: a b\nedges: a-a\n",  # self loop
        "graph G\nvertices: a b\nedges: a-b b-a\n",  # duplicate edge
        "graph G\nvertices: a a\nedges:\n",  # duplicate vertex
        "graph G\nvertices: a\nedges: a-b\n",  # unknown endpoint
        "graph G\nvertices: a-b\nedges:\n",  # bad id
        "graph G!\nvertices: a\nedges:\n",  # bad name
        "vertices: a\nedges:\n",  # missing header
        "graph G\nvertices: a\n",  # missing edges line
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_graph(text)


def test_dot_output_quotes_names():
    g = Graph("G", ["a", "b"], [("a", "b")])
    dot = graph_to_dot(g)
    assert dot.startswith('graph "G" {')
    assert '"a" -- "b";' in dot


def test_induced_subgraph_keeps_order():
    g = Graph("G", ["a", "b", "c", "d"], [("a", "c"), ("b", "d")])
    sub = induced_subgraph(g, ["d", "a", "c"])
    assert sub.vertices == ("a", "c", "d")
    assert sub.edges() == [("a", "c")]


def test_path_builders():
    p = path_graph(4)
    assert p.edges() == [("v1", "v2"), ("v2", "v3"), ("v3", "v4")]
    pc = path_complement(4)
    assert {frozenset(e) for e in pc.edges()} == {
        frozenset(("v1", "v3")),
        frozenset(("v1", "v4")),
        frozenset(("v2", "v4")),
    }
