"""Finite balls of the extension graph of a finite simple graph.

The extension graph of a graph has one vertex per conjugate of a generator
of the right-angled Artin group, with edges between commuting elements. It
is infinite in general, so this module computes the finite approximation
obtained by bounding the length of the (reduced) conjugating words; the
radius-0 ball is the original graph.

Vertices are canonicalized as group elements, so conjugates that coincide
as elements are merged regardless of which conjugator produced them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from raag.graphs import Graph
from raag.words import GroupElement, Word, canonical_form, commutes, conjugate, is_reduced


@dataclass(frozen=True)
class ExtVertex:
    """A conjugate of a generator: the conjugated generator (base) plus the
    canonical form of the conjugated element (its identity)."""

    base: str
    element: GroupElement

    @property
    def name(self) -> str:
        """Stable printable name: <base>@<canonical letters joined by '.'>."""
        rep = ".".join(v if s > 0 else f"{v}^-1" for v, s in self.element.word.letters)
        return f"{self.base}@{rep}"


def ext_vertex(v: str, conjugator: Word) -> ExtVertex:
    """The extension-graph vertex v^conjugator, canonicalized."""
    g = conjugator.graph
    if v not in g:
        raise ValueError(f"foreign vertex {v!r} for graph {g.name!r}")
    rep = canonical_form(conjugate(Word._make(g, ((v, 1),)), conjugator))
    return ExtVertex(v, rep)


def ext_adjacent(x: ExtVertex, y: ExtVertex) -> bool:
    """Adjacency in the extension graph: distinct and commuting."""
    if x.element.word.graph != y.element.word.graph:
        raise ValueError("extension vertices come from different source graphs")
    if x.element == y.element:
        return False
    return commutes(x.element.word, y.element.word)


def enumerate_reduced_words(g: Graph, max_len: int) -> Iterator[Word]:
    """All reduced words of length <= max_len, in shortlex order (length
    ascending, then letter order)."""
    empty = Word._make(g, ())
    yield empty
    letters = []
    for v in g.vertices:
        letters.append((v, 1))
        letters.append((v, -1))
    level = [empty]
    for _ in range(max_len):
        nxt = []
        for w in level:
            for letter in letters:
                cand = Word._make(g, w.letters + (letter,))
                if is_reduced(cand):
                    nxt.append(cand)
                    yield cand
        level = nxt


@dataclass(frozen=True)
class ExtBall:
    """The ball of the extension graph spanned by conjugates with reduced
    conjugators of length <= radius. Adjacency is commutation; there are no
    self-loops."""

    source: Graph
    radius: int
    vertices: tuple[ExtVertex, ...]
    edges: frozenset[tuple[int, int]]  # index pairs i < j

    def adjacent(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return (min(i, j), max(i, j)) in self.edges


def ext_ball(g: Graph, radius: int) -> ExtBall:
    """Construct the radius-L ball of the extension graph of g.

    Conjugators are enumerated in shortlex order and conjugates are
    deduplicated by canonical representative, so the vertex order is
    deterministic and the radius-0 slice comes first, in g's vertex order.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    verts: dict[tuple, ExtVertex] = {}
    for w in enumerate_reduced_words(g, radius):
        for v in g.vertices:
            x = ext_vertex(v, w)
            key = x.element.word.letters
            if key not in verts:
                verts[key] = x
    vlist = tuple(verts.values())
    edges = set()
    for i in range(len(vlist)):
        for j in range(i + 1, len(vlist)):
            if commutes(vlist[i].element.word, vlist[j].element.word):
                edges.add((i, j))
    return ExtBall(g, radius, vlist, frozenset(edges))


def ball_as_graph(ball: ExtBall) -> Graph:
    """Bridge to the graph layer: a Graph whose vertex names encode
    (base, representative) and whose adjacency equals the ball adjacency.
    Suitable as the target of full_embedding_search or of a homomorphism
    table."""
    names = [x.name for x in ball.vertices]
    edges = [(names[i], names[j]) for i, j in sorted(ball.edges)]
    return Graph(f"{ball.source.name}_ball{ball.radius}", names, edges)
