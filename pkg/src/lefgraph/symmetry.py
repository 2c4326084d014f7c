"""Automorphism groups and what they average.

Covers group enumeration, orbits and stabilizers of simplices, Lefschetz
curvature, the average Lefschetz number, the orbigraph quotient, and a
verifier for the three averaging identities (curvature sum, quotient Euler
characteristic, Burnside count).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import CliqueComplex, Simplex, build_complex
from .cohomology import CochainSpaces
from .dynamics import GraphMap, fixed_simplices, lefschetz_cohomological
from .graphs import Graph
from .reporting import TheoremCheck

DEFAULT_GROUP_CAP = 12


class SymmetryError(ValueError):
    pass


class AutomorphismGroup:
    """All automorphisms of a graph, identity first, sorted by image tuple."""

    __slots__ = ("graph", "elements")

    def __init__(self, graph: Graph, elements: tuple[GraphMap, ...]):
        self.graph = graph
        self.elements = elements

    @property
    def order(self) -> int:
        return len(self.elements)

    def identity(self) -> GraphMap:
        return self.elements[0]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"AutomorphismGroup(order={self.order})"

    def vertex_orbits(self) -> list[tuple[int, ...]]:
        """Vertex orbits, each sorted, ordered by smallest member."""
        seen = [False] * self.graph.n
        orbits = []
        for v in range(self.graph.n):
            if seen[v]:
                continue
            orbit = {t.image[v] for t in self.elements}
            for u in orbit:
                seen[u] = True
            orbits.append(tuple(sorted(orbit)))
        return orbits


def automorphism_group(g: Graph, cap: int = DEFAULT_GROUP_CAP) -> AutomorphismGroup:
    """Enumerate Aut(g) by backtracking over vertices.

    Candidate images must have the same degree and must map every
    already-assigned neighbor to a neighbor (and non-neighbor to
    non-neighbor), which prunes hard enough for desk-scale graphs.
    """
    if g.n > cap:
        raise SymmetryError(
            f"automorphism enumeration capped at {cap} vertices (got {g.n})")
    n = g.n
    degrees = [g.degree(v) for v in range(n)]
    image = [-1] * n
    used = [False] * n
    found: list[tuple[int, ...]] = []

    def extend(v: int):
        if v == n:
            found.append(tuple(image))
            return
        dv = degrees[v]
        for u in range(n):
            if used[u] or degrees[u] != dv:
                continue
            ok = True
            for w in range(v):
                if g.adjacent(v, w) != g.adjacent(u, image[w]):
                    ok = False
                    break
            if ok:
                image[v] = u
                used[u] = True
                extend(v + 1)
                used[u] = False
                image[v] = -1

    extend(0)
    found.sort()
    return AutomorphismGroup(g, tuple(GraphMap(g, im) for im in found))


@dataclass(frozen=True)
class MapOrbit:
    """A periodic orbit of one automorphism: representative, period, members."""

    representative: Simplex
    period: int
    simplices: tuple[Simplex, ...]  # in visit order from the representative


def simplex_orbits_under_map(cx: CliqueComplex, t: GraphMap) -> list[MapOrbit]:
    """Partition all simplices into t-orbits with minimal periods.

    Orbits are ordered by their representative (dimension, then lexicographic);
    the representative is the first simplex of the orbit in that order.
    """
    if not t.is_automorphism():
        raise SymmetryError("periodic orbits need an automorphism")
    orbits = []
    visited = set()
    for level in cx.by_dim:
        for x in level:
            if x in visited:
                continue
            members = [x]
            visited.add(x)
            y = t.image_simplex(x)
            while y != x:
                visited.add(y)
                members.append(y)
                y = t.image_simplex(y)
            orbits.append(MapOrbit(x, len(members), tuple(members)))
    return orbits


def simplex_orbits_under_group(cx: CliqueComplex,
                               group: AutomorphismGroup) -> list[tuple[Simplex, ...]]:
    """Orbits of all simplices under the full group, sorted within and between."""
    orbits = []
    visited = set()
    for level in cx.by_dim:
        for x in level:
            if x in visited:
                continue
            orbit = {t.image_simplex(x) for t in group}
            visited |= orbit
            orbits.append(tuple(sorted(orbit)))
    return orbits


def simplex_orbits(cx: CliqueComplex, maps):
    """Orbit partition under either a single automorphism or a whole group."""
    if isinstance(maps, GraphMap):
        return simplex_orbits_under_map(cx, maps)
    if isinstance(maps, AutomorphismGroup):
        return simplex_orbits_under_group(cx, maps)
    raise SymmetryError("expected a GraphMap or an AutomorphismGroup")


def stabilizer(group: AutomorphismGroup, x: Simplex) -> list[GraphMap]:
    """Elements fixing the simplex setwise, in group order."""
    return [t for t in group if t.image_simplex(x) == x]


@dataclass(frozen=True)
class CurvatureTable:
    """Exact rational curvature per simplex, normalized by the group order."""

    values: dict[Simplex, Fraction]
    group_order: int

    def total(self) -> Fraction:
        return sum(self.values.values(), Fraction(0))

    def orbit_sums(self, orbits: list[tuple[Simplex, ...]]) -> list[Fraction]:
        return [sum((self.values[x] for x in orbit), Fraction(0))
                for orbit in orbits]


def lefschetz_curvature(g: Graph, group: AutomorphismGroup | None = None,
                        cx: CliqueComplex | None = None) -> CurvatureTable:
    """kappa(x) = (1/|A|) * sum of i_T(x) over the stabilizer of x.

    Computed in one sweep: every fixed simplex of every group element
    contributes its index, then everything is divided by the group order.
    """
    if group is None:
        group = automorphism_group(g)
    if cx is None:
        cx = build_complex(g)
    acc: dict[Simplex, int] = {x: 0 for x in cx}
    for t in group:
        for rec in fixed_simplices(cx, t):
            acc[rec.simplex] += rec.index
    order = group.order
    return CurvatureTable(
        {x: Fraction(v, order) for x, v in acc.items()}, order)


def lefschetz_numbers(g: Graph, group: AutomorphismGroup | None = None,
                      spaces: CochainSpaces | None = None) -> list[int]:
    """L(T) for every group element, in group order."""
    if group is None:
        group = automorphism_group(g)
    if spaces is None:
        spaces = CochainSpaces(build_complex(g))
    return [lefschetz_cohomological(g, t, spaces) for t in group]


def lefschetz_multiset(g: Graph, group: AutomorphismGroup | None = None,
                       spaces: CochainSpaces | None = None) -> dict[int, int]:
    """Multiset of L(T) over the group, as value -> multiplicity."""
    counts: dict[int, int] = {}
    for value in lefschetz_numbers(g, group, spaces):
        counts[value] = counts.get(value, 0) + 1
    return dict(sorted(counts.items()))


def average_lefschetz(g: Graph, group: AutomorphismGroup | None = None,
                      spaces: CochainSpaces | None = None) -> int:
    """Mean of L(T) over the automorphism group; asserted to be an integer."""
    values = lefschetz_numbers(g, group, spaces)
    avg = Fraction(sum(values), len(values))
    assert avg.denominator == 1, f"average Lefschetz number {avg} is not an integer"
    return int(avg)


@dataclass(frozen=True)
class Orbigraph:
    """Simple quotient of a graph by its automorphism group."""

    graph: Graph                        # quotient graph on orbit classes
    classes: tuple[tuple[int, ...], ...]  # vertex orbit -> members
    projection: tuple[int, ...]         # original vertex -> class id


def orbigraph(g: Graph, group: AutomorphismGroup | None = None) -> Orbigraph:
    """Quotient on vertex orbits; edges between distinct classes, loops dropped."""
    if group is None:
        group = automorphism_group(g)
    classes = group.vertex_orbits()
    proj = [0] * g.n
    for i, orbit in enumerate(classes):
        for v in orbit:
            proj[v] = i
    edges = {(min(proj[u], proj[v]), max(proj[u], proj[v]))
             for u, v in g.edges if proj[u] != proj[v]}
    return Orbigraph(Graph(len(classes), edges), tuple(classes), tuple(proj))


@dataclass
class AveragingReport:
    """Results of the three averaging identities plus informational findings."""

    checks: list[TheoremCheck]
    findings: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_averaging_theorems(g: Graph, group: AutomorphismGroup | None = None,
                              cx: CliqueComplex | None = None,
                              spaces: CochainSpaces | None = None) -> AveragingReport:
    """Check curvature sum, orbigraph Euler characteristic, and Burnside count.

    Per-orbit curvature sums outside {+1, -1} are reported as findings, not
    failures: the averaged identities are the reliable statements.
    """
    if group is None:
        group = automorphism_group(g)
    if cx is None:
        cx = build_complex(g)
    if spaces is None:
        spaces = CochainSpaces(cx)
    avg = average_lefschetz(g, group, spaces)
    table = lefschetz_curvature(g, group, cx)
    quotient = orbigraph(g, group)
    quotient_chi = build_complex(quotient.graph).euler_characteristic()
    orbits = simplex_orbits_under_group(cx, group)
    fixed_total = sum(len(fixed_simplices(cx, t)) for t in group)
    burnside = Fraction(fixed_total, group.order)
    checks = [
        TheoremCheck("curvature_sum_equals_average_lefschetz",
                     table.total() == avg, table.total(), avg),
        TheoremCheck("average_lefschetz_equals_orbigraph_euler",
                     avg == quotient_chi, avg, quotient_chi),
        TheoremCheck("burnside_orbit_count",
                     burnside == len(orbits), burnside, len(orbits)),
    ]
    findings = []
    for orbit, total in zip(orbits, table.orbit_sums(orbits)):
        if total not in (1, -1):
            findings.append(
                f"curvature sum over orbit of {orbit[0]} is {total}, not +-1")
    return AveragingReport(checks, findings)
