import random
from collections import deque

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from raag.graphs import Graph, path_complement
from raag.words import (
    GroupElement,
    Word,
    build_expression,
    canonical_form,
    clique_commute_check,
    commutator,
    commutes,
    conjugate,
    inverse,
    is_reduced,
    is_trivial,
    oracle_is_trivial,
    parse_word,
    product,
    reduce,
    support,
)

from conftest import random_graph, random_word_letters


EDGE = Graph("edge", ["a", "b"], [("a", "b")])
FREE2 = Graph("free2", ["a", "b"])


# -- hypothesis strategy: (graph, word) over at most 4 vertices --------------------


@st.composite
def graph_and_word(draw, max_vertices=4, max_len=8):
    n = draw(st.integers(1, max_vertices))
    verts = [chr(ord("a") + i) for i in range(n)]
    pairs = [(verts[i], verts[j]) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    g = Graph("h", verts, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])
    letters = draw(
        st.lists(
            st.tuples(st.sampled_from(verts), st.sampled_from((1, -1))),
            max_size=max_len,
        )
    )
    return g, Word(g, letters)


# -- word basics ---------------------------------------------------------------------


def test_word_rejects_foreign_vertex():
    with pytest.raises(ValueError, match="foreign vertex"):
        Word(EDGE, [("z", 1)])


def test_word_rejects_bad_sign():
    with pytest.raises(ValueError, match="sign"):
        Word(EDGE, [("a", 2)])


def test_parse_and_str_roundtrip():
    w = parse_word(EDGE, "a b^-1 a")
    assert str(w) == "a b^-1 a"
    assert str(parse_word(EDGE, "1")) == "1"
    with pytest.raises(ValueError, match="unknown generator"):
        parse_word(EDGE, "a z")
    with pytest.raises(ValueError):
        parse_word(EDGE, "   ")


def test_vertex_named_1_shadows_empty_word():
    g = Graph("g", ["1", "x"])
    w = parse_word(g, "1")
    assert w.letters == (("1", 1),)


def test_ambient_mismatch_refused():
    with pytest.raises(ValueError, match="ambient"):
        product(parse_word(EDGE, "a"), parse_word(FREE2, "a"))


# -- reduce ---------------------------------------------------------------------------


def test_reduce_free_cancellation():
    assert reduce(parse_word(EDGE, "a a^-1")).letters == ()


def test_reduce_across_commuting_letter():
    assert str(reduce(parse_word(EDGE, "a b a^-1"))) == "b"


def test_reduce_blocked_without_edge():
    w = parse_word(FREE2, "a b a^-1")
    assert reduce(w) == w


def _has_reducible_pair(w):
    letters = w.letters
    g = w.graph
    for i in range(len(letters)):
        vi, si = letters[i]
        for j in range(i + 1, len(letters)):
            vj, sj = letters[j]
            if vj == vi:
                if sj == -si:
                    return True
                break
            if not g.adjacent(vi, vj):
                break
    return False


@settings(max_examples=300, deadline=None)
@given(graph_and_word())
def test_reduce_properties(gw):
    g, w = gw
    r = reduce(w)
    assert len(r) <= len(w)
    assert not _has_reducible_pair(r)
    assert canonical_form(r) == canonical_form(w)


# -- canonical form ----------------------------------------------------------------------


def test_canonical_swaps_commuting_pair():
    assert str(canonical_form(parse_word(EDGE, "b a"))) == "a b"


def test_canonical_fixed_when_no_moves():
    assert str(canonical_form(parse_word(FREE2, "b a"))) == "b a"


def test_canonical_of_trivial_is_empty():
    e = canonical_form(parse_word(EDGE, "a b a^-1 b^-1"))
    assert e.is_identity and str(e) == "1"


@settings(max_examples=300, deadline=None)
@given(graph_and_word())
def test_canonical_idempotent(gw):
    g, w = gw
    c = canonical_form(w).word
    assert canonical_form(c).word == c
    assert is_reduced(c)


@settings(max_examples=300, deadline=None)
@given(graph_and_word(), st.lists(st.integers(0, 10_000), max_size=12))
def test_canonical_constant_on_swap_orbits(gw, positions):
    g, w = gw
    letters = list(w.letters)
    for pos in positions:
        if len(letters) < 2:
            break
        k = pos % (len(letters) - 1)
        (v1, s1), (v2, s2) = letters[k], letters[k + 1]
        if v1 != v2 and g.adjacent(v1, v2):
            letters[k], letters[k + 1] = letters[k + 1], letters[k]
    assert canonical_form(Word(g, letters)) == canonical_form(w)


def _shortlex_min_of_commutation_class(w):
    """BFS oracle over commuting swaps of a reduced form; letter order is
    (vertex index, positive before negative)."""
    g = w.graph

    def key(lets):
        return tuple((g.index(v), 0 if s > 0 else 1) for v, s in lets)

    start = reduce(w).letters
    seen = {start}
    queue = deque([start])
    best = start
    while queue:
        cur = queue.popleft()
        if key(cur) < key(best):
            best = cur
        for k in range(len(cur) - 1):
            (v1, _), (v2, _) = cur[k], cur[k + 1]
            if v1 != v2 and g.adjacent(v1, v2):
                nxt = cur[:k] + (cur[k + 1], cur[k]) + cur[k + 2:]
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return best


def test_canonical_is_shortlex_minimum():
    rng = random.Random(2024)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 4), rng.random())
        w = Word(g, random_word_letters(rng, g, 7))
        assert canonical_form(w).word.letters == _shortlex_min_of_commutation_class(w)


def test_group_element_equality():
    e1 = canonical_form(parse_word(EDGE, "a b"))
    e2 = canonical_form(parse_word(EDGE, "b a"))
    e3 = canonical_form(parse_word(FREE2, "a b"))
    assert e1 == e2 and hash(e1) == hash(e2)
    assert e1 != e3
    assert isinstance(e1, GroupElement)


# -- triviality --------------------------------------------------------------------------


def test_trivial_commutator_of_commuting_generators():
    assert is_trivial(parse_word(EDGE, "a b a^-1 b^-1"))


def test_nontrivial_free_commutator():
    assert not is_trivial(parse_word(FREE2, "a b a^-1 b^-1"))


def test_obstruction_word_over_p4c_is_nontrivial():
    # [(v1)^(v2 v3), v4]: 12 letters, and no reduction applies
    g = path_complement(4)
    v = {i: parse_word(g, f"v{i}") for i in range(1, 5)}
    w = commutator(conjugate(v[1], product(v[2], v[3])), v[4])
    assert len(w) == 12
    assert is_reduced(w)
    assert not is_trivial(w)


def test_is_trivial_equals_empty_reduce():
    rng = random.Random(404)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 4), rng.random())
        w = Word(g, random_word_letters(rng, g, 8))
        assert is_trivial(w) == (len(reduce(w)) == 0)


# -- support ------------------------------------------------------------------------------


def test_support_of_reduced_word():
    assert support(parse_word(FREE2, "a b^-1 a")) == {"a", "b"}


def test_support_of_trivial_word_is_empty():
    assert support(parse_word(EDGE, "a a^-1")) == frozenset()


def test_support_reduces_first():
    assert support(parse_word(EDGE, "a b a^-1")) == {"b"}


@settings(max_examples=200, deadline=None)
@given(graph_and_word())
def test_support_invariant_under_inverse_and_reduce(gw):
    g, w = gw
    s = support(w)
    assert s == support(inverse(w)) == support(reduce(w))
    assert s == set(v for v, _ in canonical_form(w).word.letters)


# -- commutation ---------------------------------------------------------------------------


def test_commutes_with_itself():
    w = parse_word(FREE2, "a b")
    assert commutes(w, w)


def test_commutes_adjacent_generators():
    assert commutes(parse_word(EDGE, "a"), parse_word(EDGE, "b"))
    assert not commutes(parse_word(FREE2, "a"), parse_word(FREE2, "b"))


@settings(max_examples=200, deadline=None)
@given(graph_and_word(max_len=5))
def test_commutes_symmetric(gw):
    g, w1 = gw
    rng = random.Random(len(w1.letters))
    w2 = Word(g, random_word_letters(rng, g, 5))
    assert commutes(w1, w2) == commutes(w2, w1)


def test_clique_commute_check_examples():
    assert clique_commute_check(parse_word(EDGE, "a"), parse_word(EDGE, "b"))
    assert not clique_commute_check(parse_word(FREE2, "a"), parse_word(FREE2, "b"))
    # {a,b} is a clique, c adjacent to a but not to b: union is not a clique
    g = Graph("g", ["a", "b", "c"], [("a", "b"), ("a", "c")])
    assert not clique_commute_check(parse_word(g, "a b"), parse_word(g, "c"))


def test_clique_commute_check_rejects_non_clique_support():
    w = parse_word(FREE2, "a b")
    with pytest.raises(ValueError, match="not clique-shaped"):
        clique_commute_check(w, parse_word(FREE2, "a"))


# -- expression builders --------------------------------------------------------------------


def test_conjugate_definition():
    got = conjugate(parse_word(EDGE, "a"), parse_word(EDGE, "b"))
    assert str(got) == "b^-1 a b"


def test_inverse_reverses_and_flips():
    assert str(inverse(parse_word(EDGE, "a b^-1"))) == "b a^-1"


def test_commutator_definition():
    got = commutator(parse_word(EDGE, "a"), parse_word(EDGE, "b"))
    assert str(got) == "a b a^-1 b^-1"


def test_build_expression_dispatch():
    a, b = parse_word(EDGE, "a"), parse_word(EDGE, "b")
    assert build_expression("conjugate", a, b) == conjugate(a, b)
    assert build_expression("commutator", a, b) == commutator(a, b)
    assert build_expression("inverse", a) == inverse(a)
    assert build_expression("product", a, b, a) == product(a, b, a)
    with pytest.raises(ValueError, match="unknown expression kind"):
        build_expression("square", a)
    with pytest.raises(ValueError):
        build_expression("inverse", a, b)


# -- brute-force oracle -----------------------------------------------------------------------


def test_oracle_on_empty_word():
    assert oracle_is_trivial(Word(EDGE, [])) is True


def test_oracle_on_commutators():
    assert oracle_is_trivial(parse_word(EDGE, "a b a^-1 b^-1")) is True
    assert oracle_is_trivial(parse_word(FREE2, "a b a^-1 b^-1")) is False


def test_oracle_budget_gives_inconclusive():
    w = parse_word(EDGE, "a b a b")
    assert oracle_is_trivial(w, budget=1) is None


def test_kernel_agrees_with_oracle_on_random_words():
    rng = random.Random(1234)
    for _ in range(400):
        g = random_graph(rng, rng.randint(1, 4), rng.random())
        w = Word(g, random_word_letters(rng, g, 8))
        verdict = oracle_is_trivial(w)
        assert verdict is not None
        assert is_trivial(w) == verdict


# -- pure/compiled kernel parity -----------------------------------------------------------------


def test_kernel_parity():
    from raag import _purekernel

    speedups = pytest.importorskip("raag._speedups")
    rng = random.Random(555)
    for _ in range(500):
        g = random_graph(rng, rng.randint(1, 6), rng.random())
        w = Word(g, random_word_letters(rng, g, 14))
        nn = g.nonneighbor_table()
        assert _purekernel.normalize(w.codes(), len(g), nn) == speedups.normalize(
            w.codes(), len(g), nn
        )
