"""Certified extraction of full embeddings from clique-supported homomorphisms.

A homomorphism between right-angled Artin groups is given as a table
mapping each source generator to a word over the target graph. When every
image's support spans a clique of the target (the *clique-support
condition*) and the source graph is the complement of a linear forest,
the functions here either

* extract a full graph embedding of the source into the support of the
  homomorphism, verified vertex pair by vertex pair, or
* produce a *kernel witness*: an explicit word, nontrivial over the source,
  whose image reduces to the identity, or
* for optional-edge (3-vertex anti-path) components, a *structural
  certificate*: the complement of the image support decomposes into
  complete components, which forces the restricted target group into a
  product of free groups where the component group cannot embed.

Every output is re-checkable from its own data; injectivity of the input
map is never assumed.

Per-component machinery for an anti-path component v_1 .. v_n (consecutive
labels non-adjacent, all other pairs adjacent):

* the *clique chain* C_1..C_n collects the supports of the generator
  images; commuting images force every cross pair at distance > 1 to be
  identical or adjacent;
* a sequence y_i in C_i, mutually distinct with consecutive members
  non-adjacent, immediately yields a full embedding v_i -> y_i;
* when no such sequence exists, the conjugated commutator
  [v_1^(v_2..v_{n-1}), v_n] is a kernel witness. The *reach sets* and the
  *peeling* of the image words re-play the argument behind that fact and
  are run as a self-check of the mechanism.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Union

from raag.graphs import (
    Graph,
    PathLabeling,
    complement,
    full_embedding_search,
    induced_subgraph,
    join_decompose,
    parse_graph,
    recognize_linear_forest_complement,
    verify_full_embedding,
    _components_of,
    _path_order,
)
from raag.words import (
    Word,
    canonical_form,
    commutator,
    commutes,
    conjugate,
    is_trivial,
    parse_word,
    product,
    reduce,
    support,
)


class MechanismError(RuntimeError):
    """An internal guarantee of the extraction machinery failed; indicates
    a corrupted instance or an upstream bug, never a normal outcome."""


# -- homomorphism specifications ---------------------------------------------------


class HomSpec:
    """A homomorphism source -> target given by a generator-image table.

    The table must be total on the source vertices and every image must be
    a word over the target graph. Whether the table actually defines a
    homomorphism (all edge relators commute) is checked by validate_hom,
    not at construction.
    """

    __slots__ = ("source", "target", "images")

    def __init__(self, source: Graph, target: Graph, images: dict[str, Word]):
        for v in source.vertices:
            if v not in images:
                raise ValueError(f"missing image for generator {v!r}")
        for v in images:
            if v not in source:
                raise ValueError(f"image given for non-source vertex {v!r}")
        for v, w in images.items():
            if w.graph != target:
                raise ValueError(f"image of {v!r} is not a word over the target graph")
        self.source = source
        self.target = target
        self.images = dict(images)

    def apply(self, w: Word) -> Word:
        """Image of a source word, by letterwise substitution."""
        if w.graph != self.source:
            raise ValueError("word is not over the source graph")
        letters: list = []
        for v, s in w.letters:
            img = self.images[v]
            letters.extend(img.letters if s > 0 else img.inverse().letters)
        return Word._make(self.target, tuple(letters))

    def restricted(self, component: Graph) -> "HomSpec":
        """Restriction to an induced subgraph of the source."""
        return HomSpec(component, self.target, {v: self.images[v] for v in component.vertices})

    def __repr__(self) -> str:
        return f"HomSpec({self.source.name!r} -> {self.target.name!r}, {len(self.images)} images)"


@dataclass(frozen=True)
class CliqueSupportReport:
    """Whether every generator image has clique-spanning support, with the
    offending (vertex, support) pairs otherwise."""

    holds: bool
    violations: tuple[tuple[str, frozenset[str]], ...]


@dataclass(frozen=True)
class HomReport:
    relator_failures: tuple[tuple[str, str], ...]
    clique_support: CliqueSupportReport
    supp: tuple[str, ...]
    trivial_images: tuple[str, ...]

    @property
    def is_homomorphism(self) -> bool:
        return not self.relator_failures


def validate_hom(h: HomSpec) -> HomReport:
    """Relator check (images of adjacent generators commute), clique-support
    check, union of image supports (in target vertex order), and the list of
    generators mapped to the identity."""
    failures = []
    for u, v in h.source.edges():
        if not commutes(h.images[u], h.images[v]):
            failures.append((u, v))
    supports = {v: support(h.images[v]) for v in h.source.vertices}
    violations = tuple(
        (v, supports[v]) for v in h.source.vertices if not h.target.spans_clique(supports[v])
    )
    union = set().union(*supports.values()) if supports else set()
    supp = tuple(v for v in h.target.vertices if v in union)
    trivial = tuple(v for v in h.source.vertices if not supports[v])
    return HomReport(tuple(failures), CliqueSupportReport(not violations, violations), supp, trivial)


# -- certificates -------------------------------------------------------------------


@dataclass(frozen=True)
class FullEmbedding:
    """A verified full embedding, with a per-vertex note recording which
    support each image vertex was drawn from."""

    mapping: dict[str, str]
    provenance: dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class KernelWitness:
    """A word over the source generators, certified nontrivial in the
    source group and mapped to the identity of the target."""

    word: Word
    nontrivial_in_source: bool
    trivial_image: bool
    component: Optional[tuple[str, ...]] = None
    peel_checked: bool = False

    @property
    def verified(self) -> bool:
        return self.nontrivial_in_source and self.trivial_image


@dataclass(frozen=True)
class StructuralCertificate:
    """Non-injectivity certificate for a 3-vertex anti-path component: no
    full embedding into the support subgraph exists, and the complement of
    that subgraph splits into complete components, so the restricted target
    group is a direct product of free groups."""

    component: tuple[str, ...]
    supp: tuple[str, ...]
    complement_components: tuple[tuple[str, ...], ...]
    all_complete: bool

    @property
    def verified(self) -> bool:
        return self.all_complete


ExtractionOutcome = Union[FullEmbedding, KernelWitness, StructuralCertificate]


# -- abelian factors ----------------------------------------------------------------


def _exponent_matrix(h: HomSpec, columns: tuple[str, ...]) -> list[list[int]]:
    # a vertex outside the support columns necessarily has exponent sum 0,
    # so counting over the raw letters and projecting is exact
    rows = []
    for v in h.source.vertices:
        counts: dict[str, int] = {}
        for name, s in h.images[v].letters:
            counts[name] = counts.get(name, 0) + s
        rows.append([counts.get(c, 0) for c in columns])
    return rows


def _integer_left_nullvector(rows: list[list[int]]) -> Optional[list[int]]:
    """A nonzero integer vector z with z*M = 0, or None if M has full row
    rank. Exact Gaussian elimination over the rationals on the augmented
    matrix [M | I]; deterministic (first pivot, first zero row)."""
    n = len(rows)
    l = len(rows[0]) if rows else 0
    aug = [
        [Fraction(x) for x in rows[r]] + [Fraction(1 if c == r else 0) for c in range(n)]
        for r in range(n)
    ]
    r = 0
    for c in range(l):
        pivot = next((rr for rr in range(r, n) if aug[rr][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        for rr in range(r + 1, n):
            if aug[rr][c] != 0:
                f = aug[rr][c] / aug[r][c]
                aug[rr] = [a - f * b for a, b in zip(aug[rr], aug[r])]
        r += 1
        if r == n:
            break
    if r == n:
        return None
    # row r of the M-part is zero; its I-part records the combination
    vec = aug[r][l:]
    denom = 1
    for x in vec:
        denom = denom * x.denominator // _gcd(denom, x.denominator)
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = _gcd(g, abs(x))
    ints = [x // g for x in ints]
    first = next(x for x in ints if x != 0)
    if first < 0:
        ints = [-x for x in ints]
    return ints


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a if a else 1


def extract_abelian(h: HomSpec) -> Union[FullEmbedding, KernelWitness]:
    """Extraction for a complete source graph (free-abelian source group).

    The image supports all lie in one clique of the target, so the
    homomorphism is a linear map between free-abelian groups; its matrix of
    exponent sums decides everything. Full row rank yields the order-first
    assignment of source vertices to support vertices (a full embedding,
    both sides being cliques); a rank deficit yields an integer kernel
    vector, spelled out as a product of generator powers and verified to be
    a kernel witness.
    """
    src = h.source
    n = len(src)
    for a in range(n):
        for b in range(a + 1, n):
            if not src.adjacent(src.vertices[a], src.vertices[b]):
                raise ValueError("source of extract_abelian must be a complete graph")
    union = set().union(*(support(h.images[v]) for v in src.vertices)) if n else set()
    supp = tuple(v for v in h.target.vertices if v in union)
    if not h.target.spans_clique(supp):
        raise ValueError("image supports are not contained in a clique of the target")
    matrix = _exponent_matrix(h, supp)
    z = _integer_left_nullvector(matrix)
    if z is None:
        mapping = {src.vertices[i]: supp[i] for i in range(n)}
        prov = {v: "support clique of the abelian factor" for v in src.vertices}
        return FullEmbedding(mapping, prov)
    letters = []
    for v, e in zip(src.vertices, z):
        sign = 1 if e > 0 else -1
        letters.extend([(v, sign)] * abs(e))
    word = Word(src, letters)
    nontrivial = not is_trivial(word)
    image_trivial = is_trivial(h.apply(word))
    if not (nontrivial and image_trivial):
        raise MechanismError("abelian kernel vector failed verification")
    return KernelWitness(word, True, True, component=src.vertices)


# -- anti-path components -------------------------------------------------------------


@dataclass(frozen=True)
class CliqueChain:
    """Supports of the images of v_1..v_n, each spanning a clique of the
    target; every cross pair at label distance > 1 is identical or
    adjacent."""

    graph: Graph
    cliques: tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class ReachSets:
    """The inductively defined subsets Y_1..Y_{n-1} of the chain: Y_1 is
    all of C_1, and Y_i collects the vertices of C_i having a distinct
    non-neighbor in Y_{i-1}."""

    sets: tuple[tuple[str, ...], ...]


def _check_labeling(src: Graph, labeling: PathLabeling) -> None:
    order = labeling.order
    if set(order) != set(src.vertices) or len(order) != len(src):
        raise ValueError("labeling does not enumerate the source vertices")
    n = len(order)
    for a in range(n):
        for b in range(a + 1, n):
            adjacent = src.adjacent(order[a], order[b])
            if b - a == 1 and adjacent:
                raise ValueError("labeling is not an anti-path order: consecutive labels adjacent")
            if b - a > 1 and not adjacent:
                raise ValueError("labeling is not an anti-path order: distant labels non-adjacent")


def build_clique_chain(h: HomSpec, labeling: PathLabeling) -> CliqueChain:
    """Collect C_i = supp(image of v_i) and check the cross-adjacency
    forced by commuting clique-supported images: for |i-j| > 1, every
    vertex of C_i is identical to or adjacent to every vertex of C_j."""
    _check_labeling(h.source, labeling)
    gamma = h.target
    cliques = []
    for v in labeling.order:
        supp_v = support(h.images[v])
        if not gamma.spans_clique(supp_v):
            raise ValueError(f"clique-support condition violated at {v!r}")
        cliques.append(tuple(u for u in gamma.vertices if u in supp_v))
    n = len(cliques)
    for i in range(n):
        for j in range(i + 2, n):
            for x in cliques[i]:
                for y in cliques[j]:
                    if x != y and not gamma.adjacent(x, y):
                        raise ValueError(
                            "not a homomorphism on this component: supports of "
                            f"{labeling.order[i]!r} and {labeling.order[j]!r} "
                            f"contain the non-adjacent pair ({x!r}, {y!r})"
                        )
    return CliqueChain(gamma, tuple(cliques))


def sequence_search(chain: CliqueChain) -> Optional[tuple[str, ...]]:
    """Backtracking search for mutually distinct y_i in C_i with y_{i-1}
    non-adjacent to y_i. First solution in vertex insertion order; None
    means no such sequence exists anywhere in the chain."""
    n = len(chain.cliques)
    if n < 2:
        raise ValueError("sequence search needs a chain of length >= 2")
    g = chain.graph
    chosen: list[str] = []
    used: set[str] = set()

    def step(i: int) -> bool:
        if i == n:
            return True
        for y in chain.cliques[i]:
            if y in used:
                continue
            if i > 0 and g.adjacent(chosen[-1], y):
                continue
            chosen.append(y)
            used.add(y)
            if step(i + 1):
                return True
            used.discard(y)
            chosen.pop()
        return False

    if step(0):
        return tuple(chosen)
    return None


def reach_sets(chain: CliqueChain) -> ReachSets:
    """Y_1 = C_1; Y_i = vertices of C_i with a distinct non-neighbor in
    Y_{i-1} (a generator commutes with itself, so equal vertices do not
    count). Sets may be empty. Produces Y_1..Y_{n-1}."""
    g = chain.graph
    sets = [chain.cliques[0]]
    for i in range(1, len(chain.cliques) - 1):
        prev = sets[-1]
        sets.append(
            tuple(
                y for y in chain.cliques[i]
                if any(x != y and not g.adjacent(x, y) for x in prev)
            )
        )
    return ReachSets(tuple(sets))


def check_reach_adjacency(chain: CliqueChain, reach: ReachSets) -> None:
    """When no distinct non-adjacent sequence exists, every vertex of the
    last clique must be identical-or-adjacent to every vertex of every
    reach set. Raises MechanismError otherwise."""
    g = chain.graph
    last = chain.cliques[-1]
    for ys in reach.sets:
        for y in ys:
            for c in last:
                if c != y and not g.adjacent(c, y):
                    raise MechanismError(
                        f"reach-set adjacency failed at pair ({y!r}, {c!r})"
                    )


def _tower(words: list[Word]) -> Word:
    """w_k^-1 ... w_2^-1 w_1 w_2 ... w_k."""
    out = words[0]
    for w in words[1:]:
        out = product(w.inverse(), out, w)
    return out


def peel_words(h: HomSpec, labeling: PathLabeling, reach: ReachSets) -> tuple[Word, ...]:
    """Peel the reduced image words down to their reach sets.

    With W_i = reduce(image of v_i), the peeled word of W_i keeps exactly
    the letters whose vertex lies in Y_i: each discarded letter commutes
    with everything it has to pass, so conjugating by the peeled words
    agrees with conjugating by the originals. That invariant is verified
    here step by step as a canonical-form identity; a failure is an
    internal error, since it cannot happen once no distinct non-adjacent
    sequence exists in the chain.
    """
    order = labeling.order
    originals = [reduce(h.images[v]) for v in order[:-1]]
    peeled: list[Word] = []
    for i, w in enumerate(originals):
        allowed = set(reach.sets[i])
        kept = tuple(let for let in w.letters if let[0] in allowed)
        peeled.append(Word._make(h.target, kept))
        if i >= 1:
            lhs = canonical_form(_tower(peeled))
            rhs = canonical_form(_tower(originals[: i + 1]))
            if lhs != rhs:
                raise MechanismError(
                    f"peeled conjugation tower diverged at stage {i + 1}"
                )
    return tuple(peeled)


def obstruction_commutator(h: HomSpec, labeling: PathLabeling) -> KernelWitness:
    """The kernel witness for an anti-path component with no distinct
    non-adjacent sequence: [v_1, v_2] for n = 2, and the conjugated
    commutator [v_1^(v_2 ... v_{n-1}), v_n] for n >= 4. Both verifications
    (nontrivial over the source, image reduces to the identity) are run
    and recorded; a failure raises, since it contradicts the construction.
    """
    order = labeling.order
    n = len(order)
    gens = {v: Word._make(h.source, ((v, 1),)) for v in order}
    if n == 2:
        word = commutator(gens[order[0]], gens[order[1]])
    elif n >= 4:
        conj = conjugate(gens[order[0]], product(*[gens[v] for v in order[1:-1]]))
        word = commutator(conj, gens[order[-1]])
    else:
        raise ValueError("obstruction commutator is defined for n = 2 and n >= 4")
    if is_trivial(word):
        raise MechanismError("obstruction word is trivial over the source")
    if not is_trivial(h.apply(word)):
        raise MechanismError("obstruction word has a nontrivial image")
    return KernelWitness(word, True, True, component=tuple(order))


def extract_anti_path(
    h: HomSpec, labeling: PathLabeling, self_check: bool = True
) -> Union[FullEmbedding, KernelWitness]:
    """Dichotomy for an anti-path source on n != 3 vertices.

    Either returns a full embedding with each vertex mapped inside the
    support of its own image, or a verified kernel witness. With
    self_check on (default), the witness branch for n >= 4 also re-plays
    the reach-set and peeling argument and verifies the image of the
    conjugated generator against the peeled tower.
    """
    order = labeling.order
    n = len(order)
    if n == 3:
        raise ValueError("use extract_anti_path3 for 3-vertex anti-path components")
    if n == 1:
        _check_labeling(h.source, labeling)
        v = order[0]
        supp_v = support(h.images[v])
        if not supp_v:
            raise ValueError(f"image of {v!r} is trivial; no support vertex to map to")
        target_v = next(u for u in h.target.vertices if u in supp_v)
        return FullEmbedding({v: target_v}, {v: f"support of image of {v}"})
    chain = build_clique_chain(h, labeling)
    seq = sequence_search(chain)
    if seq is not None:
        mapping = dict(zip(order, seq))
        chk = verify_full_embedding(h.source, h.target, mapping)
        if not chk:
            raise MechanismError(f"chain sequence is not a full embedding: {chk.violation}")
        prov = {v: f"support of image of {v}" for v in order}
        return FullEmbedding(mapping, prov)
    peel_checked = False
    if n >= 4 and self_check:
        reach = reach_sets(chain)
        check_reach_adjacency(chain, reach)
        peeled = peel_words(h, labeling, reach)
        _check_witness_factoring(h, labeling, peeled)
        peel_checked = True
    witness = obstruction_commutator(h, labeling)
    return replace(witness, peel_checked=peel_checked)


def _check_witness_factoring(h: HomSpec, labeling: PathLabeling, peeled: tuple[Word, ...]) -> None:
    """The image of v_1^(v_2..v_{n-1}) must equal the peeled conjugation
    tower as a group element, and that element must commute with the image
    of v_n."""
    order = labeling.order
    gens = [Word._make(h.source, ((v, 1),)) for v in order]
    conj_src = conjugate(gens[0], product(*gens[1:-1]))
    lhs = canonical_form(h.apply(conj_src))
    tower = _tower(list(peeled))
    if lhs != canonical_form(tower):
        raise MechanismError("image of the conjugated generator does not match the peeled tower")
    if not commutes(tower, h.images[order[-1]]):
        raise MechanismError("peeled tower does not commute with the last image")


def extract_anti_path3(h: HomSpec) -> Union[FullEmbedding, StructuralCertificate]:
    """Dichotomy for the 3-vertex anti-path (one edge plus an isolated
    vertex): exhaustive search for a full embedding into the induced
    subgraph on the image support; if none exists, that subgraph's
    complement necessarily splits into complete components, which is
    emitted as the structural certificate of non-injectivity."""
    src = h.source
    if len(src) != 3 or _path_order(complement(src)) is None:
        raise ValueError("source of extract_anti_path3 must be a 3-vertex anti-path")
    union = set().union(*(support(h.images[v]) for v in src.vertices))
    supp = tuple(v for v in h.target.vertices if v in union)
    sub = induced_subgraph(h.target, supp)
    mapping = full_embedding_search(src, sub)
    if mapping is not None:
        prov = {v: "support of the component image" for v in src.vertices}
        return FullEmbedding(mapping, prov)
    comp_c = complement(sub)
    comps = _components_of(comp_c)
    names = tuple(tuple(comp_c.vertices[i] for i in comp) for comp in comps)
    for comp in names:
        if not comp_c.spans_clique(comp):
            raise MechanismError(
                "no full embedding found, yet the support complement is not a "
                "union of complete graphs; instance corrupted"
            )
    return StructuralCertificate(src.vertices, supp, names, True)


# -- gluing and the end-to-end pipeline ------------------------------------------------


def glue_join(embeddings: list[FullEmbedding], h: HomSpec) -> FullEmbedding:
    """Merge per-component embeddings into one full embedding of the whole
    join. Verifies directly on the target graph that (i) the component
    images are pairwise disjoint and (ii) vertices from different
    components land on adjacent target vertices; violations are surfaced
    with the offending pair."""
    merged: dict[str, str] = {}
    prov: dict[str, str] = {}
    for emb in embeddings:
        for v in emb.mapping:
            if v in merged:
                raise ValueError(f"component embeddings overlap on source vertex {v!r}")
        merged.update(emb.mapping)
        prov.update(emb.provenance)
    for a in range(len(embeddings)):
        for b in range(a + 1, len(embeddings)):
            ia = embeddings[a].mapping
            ib = embeddings[b].mapping
            overlap = set(ia.values()) & set(ib.values())
            if overlap:
                raise ValueError(
                    f"glue condition (i) violated: components share image vertex {sorted(overlap)[0]!r}"
                )
            for u, xu in ia.items():
                for v, xv in ib.items():
                    if not h.target.adjacent(xu, xv):
                        raise ValueError(
                            f"glue condition (ii) violated: pair ({u!r}, {v!r}) maps to "
                            f"non-adjacent ({xu!r}, {xv!r})"
                        )
    chk = verify_full_embedding(h.source, h.target, merged)
    if not chk:
        raise MechanismError(f"glued map failed verification: {chk.violation}")
    return FullEmbedding(merged, prov)


def extract_full(h: HomSpec, self_check: bool = True) -> ExtractionOutcome:
    """End-to-end extraction.

    Validates the table (homomorphism + clique-support; anything else is
    refused), restricts the target to the induced subgraph on the image
    support, decomposes the source into join factors, extracts per factor
    (merged singleton factors through the abelian route, anti-paths
    through the chain machinery), and glues. The first component failure
    is propagated as that component's witness or certificate, re-verified
    over the full source and target.
    """
    report = validate_hom(h)
    if report.relator_failures:
        u, v = report.relator_failures[0]
        raise ValueError(f"not a homomorphism: images of {u!r} and {v!r} do not commute")
    if not report.clique_support.holds:
        v, supp_v = report.clique_support.violations[0]
        raise ValueError(
            f"clique-support condition fails at {v!r}: support {sorted(supp_v)} is not a clique"
        )
    if report.trivial_images:
        v = report.trivial_images[0]
        word = Word._make(h.source, ((v, 1),))
        witness = KernelWitness(word, not is_trivial(word), is_trivial(h.apply(word)),
                                component=(v,))
        if not witness.verified:
            raise MechanismError("trivial-image witness failed verification")
        return witness
    if recognize_linear_forest_complement(h.source) is None:
        raise ValueError("out of theorem scope: source is not the complement of a linear forest")
    gamma_prime = induced_subgraph(h.target, report.supp, name=h.target.name + "_supp")
    # raw image words may mention letters that cancel in reduction; only the
    # reduced representatives are guaranteed to live inside the support
    hp = HomSpec(
        h.source,
        gamma_prime,
        {v: Word(gamma_prime, reduce(h.images[v]).letters) for v in h.source.vertices},
    )
    decomp = join_decompose(h.source)
    singles = [c for c in decomp.components if c.kind == "singleton"]
    paths = [c for c in decomp.components if c.kind != "singleton"]
    embeddings: list[FullEmbedding] = []
    if singles:
        kvertices = [v for c in singles for v in c.graph.vertices]
        kgraph = induced_subgraph(h.source, kvertices, name=h.source.name + "_abelian")
        out = extract_abelian(hp.restricted(kgraph))
        if isinstance(out, KernelWitness):
            return _lift_witness(out, h)
        embeddings.append(out)
    for comp in paths:
        sub = hp.restricted(comp.graph)
        if len(comp.graph) == 3:
            out3 = extract_anti_path3(sub)
            if isinstance(out3, StructuralCertificate):
                return out3
            embeddings.append(out3)
        else:
            out = extract_anti_path(sub, comp.labeling, self_check=self_check)
            if isinstance(out, KernelWitness):
                return _lift_witness(out, h)
            embeddings.append(out)
    return glue_join(embeddings, hp)


def _lift_witness(witness: KernelWitness, h: HomSpec) -> KernelWitness:
    """Recontextualize a component witness over the full source graph and
    re-verify both of its claims there."""
    word = Word(h.source, witness.word.letters)
    nontrivial = not is_trivial(word)
    image_trivial = is_trivial(h.apply(word))
    if not (nontrivial and image_trivial):
        raise MechanismError("component witness failed verification over the full source")
    return KernelWitness(word, True, True, component=witness.component,
                         peel_checked=witness.peel_checked)


# -- text format --------------------------------------------------------------------


def parse_hom(text: str, base_dir: str = ".") -> HomSpec:
    """Parse the homomorphism file format::

        hom
        source: <graph-file>
        target: <graph-file>
        map <vertex> = <word>
        ...

    Graph file paths are resolved relative to base_dir. Every source
    vertex needs exactly one map line; words use the word syntax of the
    ambient target graph.
    """
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines or lines[0] != "hom":
        raise ValueError("homomorphism file must start with a 'hom' line")
    if len(lines) < 3 or not lines[1].startswith("source:") or not lines[2].startswith("target:"):
        raise ValueError("expected 'source:' and 'target:' lines after the header")
    source_path = os.path.join(base_dir, lines[1][len("source:"):].strip())
    target_path = os.path.join(base_dir, lines[2][len("target:"):].strip())
    with open(source_path, encoding="utf-8") as fh:
        source = parse_graph(fh.read())
    with open(target_path, encoding="utf-8") as fh:
        target = parse_graph(fh.read())
    images: dict[str, Word] = {}
    for ln in lines[3:]:
        if not ln.startswith("map "):
            raise ValueError(f"unexpected line in homomorphism file: {ln!r}")
        body = ln[len("map "):]
        if "=" not in body:
            raise ValueError(f"map line without '=': {ln!r}")
        vert, word_text = body.split("=", 1)
        vert = vert.strip()
        if vert in images:
            raise ValueError(f"duplicate map line for {vert!r}")
        images[vert] = parse_word(target, word_text.strip())
    return HomSpec(source, target, images)
