"""Self-maps of graphs and their Lefschetz fixed-point data.

A graph endomorphism is a vertex map sending edges to edges; that forces it
to be injective on every clique, so it acts simplicially on the clique
complex.  The Lefschetz number is computed two independent ways (traces on
cohomology, signed count of fixed simplices) plus the chain-level trace sum,
and all three must agree.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .complexes import CliqueComplex, Simplex, build_complex
from .cohomology import CochainSpaces, permutation_parity_sign, pullback
from .graphs import Graph, induced_subgraph


class MapError(ValueError):
    pass


class GraphMap:
    """An edge-preserving self-map of a graph, as an image tuple."""

    __slots__ = ("graph", "image", "kind")

    def __init__(self, graph: Graph, image):
        image = tuple(image)
        if len(image) != graph.n:
            raise MapError(
                f"map lists {len(image)} images for a graph on {graph.n} vertices")
        for v, w in enumerate(image):
            if not 0 <= w < graph.n:
                raise MapError(f"image of vertex {v} is {w}, outside 0..{graph.n - 1}")
        for u, v in graph.edges:
            if not graph.adjacent(image[u], image[v]):
                raise MapError(
                    f"edge ({u}, {v}) maps to ({image[u]}, {image[v]}), "
                    "which is not an edge")
        self.graph = graph
        self.image = image
        self.kind = "automorphism" if len(set(image)) == graph.n else "endomorphism"

    @classmethod
    def identity(cls, graph: Graph) -> "GraphMap":
        return cls(graph, range(graph.n))

    def __call__(self, v: int) -> int:
        return self.image[v]

    def is_automorphism(self) -> bool:
        return self.kind == "automorphism"

    def is_identity(self) -> bool:
        return all(w == v for v, w in enumerate(self.image))

    def image_simplex(self, s: Simplex) -> Simplex:
        return tuple(sorted(self.image[v] for v in s))

    def compose(self, inner: "GraphMap") -> "GraphMap":
        """self after inner: vertex v goes to self(inner(v))."""
        if inner.graph != self.graph:
            raise MapError("cannot compose maps of different graphs")
        return GraphMap(self.graph, tuple(self.image[w] for w in inner.image))

    def power(self, m: int) -> "GraphMap":
        if m < 0:
            raise MapError("negative powers are only defined via inverse()")
        out = GraphMap.identity(self.graph)
        for _ in range(m):
            out = self.compose(out)
        return out

    def inverse(self) -> "GraphMap":
        if not self.is_automorphism():
            raise MapError("only automorphisms are invertible")
        inv = [0] * self.graph.n
        for v, w in enumerate(self.image):
            inv[w] = v
        return GraphMap(self.graph, inv)

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition (automorphisms only), ordered by smallest member."""
        if not self.is_automorphism():
            raise MapError("cycle decomposition needs an automorphism")
        seen = [False] * self.graph.n
        out = []
        for start in range(self.graph.n):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            v = self.image[start]
            while v != start:
                seen[v] = True
                cyc.append(v)
                v = self.image[v]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if self.graph.n else 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, GraphMap):
            return NotImplemented
        return self.graph == other.graph and self.image == other.image

    def __hash__(self) -> int:
        return hash((self.graph, self.image))

    def __repr__(self) -> str:
        return f"GraphMap({self.kind}, image={list(self.image)})"


def validate_map(g: Graph, image) -> GraphMap:
    """Build a GraphMap, raising MapError with a reason if image is invalid."""
    return GraphMap(g, image)


def identity_map(g: Graph) -> GraphMap:
    return GraphMap.identity(g)


@dataclass(frozen=True)
class FixedSimplexRecord:
    """A simplex fixed setwise, with the sign data of the restriction."""

    simplex: Simplex
    dim: int
    perm_sign: int  # signature of the permutation the map induces on the simplex
    index: int      # (-1)^dim * perm_sign


def fixed_simplices(cx: CliqueComplex, t: GraphMap) -> list[FixedSimplexRecord]:
    """All simplices x with t(x) == x as a set, with their fixed-point indices."""
    out = []
    for level in cx.by_dim:
        for x in level:
            mapped = [t.image[v] for v in x]
            if tuple(sorted(mapped)) != x:
                continue
            sign = permutation_parity_sign(mapped)
            dim = len(x) - 1
            out.append(FixedSimplexRecord(x, dim, sign, (-1) ** dim * sign))
    return out


def fixed_index_sum(cx: CliqueComplex, t: GraphMap) -> int:
    return sum(rec.index for rec in fixed_simplices(cx, t))


def lefschetz_chain(cx: CliqueComplex, t: GraphMap) -> int:
    """Alternating sum of chain-level pullback traces, sum_k (-1)^k tr(P_k)."""
    total = 0
    for k in range(cx.dim + 1):
        total += (-1) ** k * pullback(cx, t.image, k).trace()
    return total


def lefschetz_cohomological(g: Graph, t: GraphMap,
                            spaces: CochainSpaces | None = None) -> int:
    """Lefschetz number via traces of the maps induced on cohomology.

    The identity map induces the identity on every H^k, so its traces are the
    Betti numbers and no representative solves are needed; every other map
    goes through the full induced-matrix computation.
    """
    if spaces is None:
        spaces = CochainSpaces(build_complex(g))
    if t.is_identity():
        return sum((-1) ** k * spaces.betti(k) for k in range(spaces.dim + 1))
    total = Fraction(0)
    for k in range(spaces.dim + 1):
        if spaces.betti(k):
            total += (-1) ** k * spaces.induced_matrix(t.image, k).trace()
    assert total.denominator == 1, "cohomological trace sum must be an integer"
    return int(total)


@dataclass(frozen=True)
class Attractor:
    """The eventual image subgraph, on which the map becomes an automorphism."""

    graph: Graph
    map: GraphMap
    vertices: tuple[int, ...]  # original labels of the surviving vertices


def attractor(t: GraphMap) -> Attractor:
    """Iterate t until the vertex image stabilizes; restrict to that subgraph."""
    current = frozenset(range(t.graph.n))
    while True:
        nxt = frozenset(t.image[v] for v in current)
        if nxt == current:
            break
        current = nxt
    sub, kept = induced_subgraph(t.graph, current)
    pos = {v: i for i, v in enumerate(kept)}
    restricted = GraphMap(sub, tuple(pos[t.image[v]] for v in kept))
    assert restricted.is_automorphism()
    return Attractor(sub, restricted, tuple(kept))


def is_star_shaped(g: Graph, spaces: CochainSpaces | None = None) -> bool:
    """True when all cohomology above degree 0 vanishes."""
    if spaces is None:
        spaces = CochainSpaces(build_complex(g))
    return all(spaces.betti(k) == 0 for k in range(1, spaces.dim + 1))


@dataclass(frozen=True)
class BrouwerReport:
    applicable: bool          # connected and star-shaped
    lefschetz: int
    fixed_count: int
    witness: Simplex | None   # some fixed simplex, when one exists


def brouwer_check(g: Graph, t: GraphMap,
                  spaces: CochainSpaces | None = None) -> BrouwerReport:
    """Fixed-clique guarantee for connected star-shaped graphs.

    In that case L(t) = 1 for every endomorphism, so the signed fixed-simplex
    count cannot be empty.
    """
    if spaces is None:
        spaces = CochainSpaces(build_complex(g))
    cx = spaces.cx
    connected = g.n > 0 and spaces.betti(0) == 1
    applicable = connected and is_star_shaped(g, spaces)
    fixed = fixed_simplices(cx, t)
    lef = lefschetz_cohomological(g, t, spaces)
    if applicable:
        assert fixed, "a connected star-shaped graph must leave a clique fixed"
    return BrouwerReport(applicable, lef, len(fixed),
                         fixed[0].simplex if fixed else None)


def random_endomorphism(g: Graph, rng: random.Random) -> GraphMap:
    """A uniform-ish random endomorphism found by randomized backtracking.

    Vertices are assigned in a shuffled order; each assignment must keep all
    already-mapped neighbors adjacent.  The identity always exists, so the
    search cannot fail outright.
    """
    order = list(range(g.n))
    rng.shuffle(order)
    image = [-1] * g.n
    full = (1 << g.n) - 1

    def assign(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        allowed = full
        for w in g.neighbors(v):
            if image[w] >= 0:
                allowed &= g.adj[image[w]]
        candidates = [u for u in range(g.n) if allowed >> u & 1]
        rng.shuffle(candidates)
        for u in candidates:
            image[v] = u
            if assign(i + 1):
                return True
        image[v] = -1
        return False

    found = assign(0)
    assert found
    return GraphMap(g, image)
