"""Shared builders for the test suite."""

import itertools
import random

import pytest

from raag.graphs import Graph


def names_for(n):
    return [chr(ord("a") + i) for i in range(n)]


def all_labeled_graphs(n):
    """Every labeled graph on n named vertices."""
    verts = names_for(n)
    pairs = list(itertools.combinations(verts, 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
        yield Graph(f"g{n}_{mask}", verts, edges)


def iso_class_representatives(n):
    """One representative per isomorphism class of n-vertex graphs."""
    verts = names_for(n)
    seen = set()
    reps = []
    for g in all_labeled_graphs(n):
        edge_idx = {frozenset((verts.index(u), verts.index(v))) for u, v in g.edges()}
        canon = min(
            tuple(sorted(
                tuple(sorted((perm[a], perm[b]))) for e in edge_idx for a, b in [tuple(e)]
            ))
            for perm in itertools.permutations(range(n))
        )
        if canon not in seen:
            seen.add(canon)
            reps.append(g)
    return reps


def random_graph(rng, n, p, prefix="a"):
    verts = [f"{prefix}{i}" for i in range(1, n + 1)]
    edges = [
        (verts[i], verts[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph("rand", verts, edges)


def random_word_letters(rng, g, max_len):
    length = rng.randint(0, max_len)
    return [(rng.choice(g.vertices), rng.choice((1, -1))) for _ in range(length)]


def cycle_graph(n, prefix="a"):
    verts = [f"{prefix}{i}" for i in range(1, n + 1)]
    edges = [(verts[i], verts[(i + 1) % n]) for i in range(n)]
    return Graph(f"C{n}", verts, edges)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
