"""Composite theorem-verification suites over a standing corpus of graphs.

Each checker returns TheoremCheck records carrying both compared values, so
callers (CLI, tests) can render pass/fail lines without recomputing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cohomology import CochainSpaces, verify_chain_map
from .complexes import CliqueComplex, build_complex
from .dynamics import (
    GraphMap,
    attractor,
    brouwer_check,
    fixed_index_sum,
    is_star_shaped,
    lefschetz_chain,
    lefschetz_cohomological,
    random_endomorphism,
)
from .graphs import Graph, connected_components, named_graph
from .reporting import TheoremCheck
from .symmetry import AutomorphismGroup, automorphism_group, verify_averaging_theorems
from .zeta import lefschetz_iterates, orbit_census, zeta_det, zeta_product


def named_corpus() -> list[tuple[str, Graph]]:
    """The standing test corpus: complete/cycle/path/star/wheel families plus
    the three fixed graphs."""
    corpus = []
    for k in range(1, 7):
        corpus.append((f"K_{k}", named_graph("complete", k)))
    for k in range(3, 9):
        corpus.append((f"C_{k}", named_graph("cycle", k)))
    for k in range(1, 9):
        corpus.append((f"P_{k}", named_graph("path", k)))
    for k in range(1, 7):
        corpus.append((f"star_{k}", named_graph("star", k)))
    for k in range(4, 7):
        corpus.append((f"W_{k}", named_graph("wheel", k)))
    corpus.append(("octahedron", named_graph("octahedron")))
    corpus.append(("petersen", named_graph("petersen")))
    corpus.append(("two_triangles_shared_edge",
                   named_graph("two_triangles_shared_edge")))
    return corpus


def structural_checks(g: Graph, cx: CliqueComplex | None = None,
                      spaces: CochainSpaces | None = None) -> list[TheoremCheck]:
    """d∘d = 0, Euler-Poincare, and b_0 = component count."""
    if cx is None:
        cx = build_complex(g)
    if spaces is None:
        spaces = CochainSpaces(cx)
    checks = []
    dd_ok = all((spaces.coboundary(k + 1) * spaces.coboundary(k)).is_zero()
                for k in range(cx.dim))
    checks.append(TheoremCheck("d_squared_zero", dd_ok, "d(k+1)*d(k)", "0"))
    chi_f = cx.euler_characteristic()
    chi_b = sum((-1) ** k * b for k, b in enumerate(spaces.betti_numbers()))
    checks.append(TheoremCheck("euler_poincare", chi_f == chi_b, chi_f, chi_b))
    b0 = spaces.betti(0)
    ncomp = len(connected_components(g))
    checks.append(TheoremCheck("betti0_equals_components", b0 == ncomp, b0, ncomp))
    return checks


def lefschetz_checks(g: Graph, t: GraphMap, cx: CliqueComplex | None = None,
                     spaces: CochainSpaces | None = None) -> list[TheoremCheck]:
    """Three-way Lefschetz agreement plus the chain-map identity for one map."""
    if cx is None:
        cx = build_complex(g)
    if spaces is None:
        spaces = CochainSpaces(cx)
    coh = lefschetz_cohomological(g, t, spaces)
    idx = fixed_index_sum(cx, t)
    chain = lefschetz_chain(cx, t)
    return [
        TheoremCheck("chain_map_commutes", verify_chain_map(cx, t.image),
                     "d*P", "P*d"),
        TheoremCheck("lefschetz_cohomological_equals_index_sum",
                     coh == idx, coh, idx),
        TheoremCheck("lefschetz_index_sum_equals_chain_trace",
                     idx == chain, idx, chain),
    ]


def attractor_checks(g: Graph, t: GraphMap, cx: CliqueComplex | None = None,
                     spaces: CochainSpaces | None = None) -> list[TheoremCheck]:
    """L is unchanged when an endomorphism is restricted to its attractor."""
    if spaces is None:
        spaces = CochainSpaces(build_complex(g))
    core = attractor(t)
    l_full = lefschetz_cohomological(g, t, spaces)
    l_core = lefschetz_cohomological(core.graph, core.map)
    return [TheoremCheck("lefschetz_invariant_on_attractor",
                         l_full == l_core, l_full, l_core)]


def zeta_checks(g: Graph, t: GraphMap, cx: CliqueComplex | None = None,
                spaces: CochainSpaces | None = None,
                series_order: int | None = None) -> list[TheoremCheck]:
    """Determinant = orbit product, and log-derivative series consistency."""
    if cx is None:
        cx = build_complex(g)
    if spaces is None:
        spaces = CochainSpaces(cx)
    z_det = zeta_det(g, t, spaces)
    z_prod = zeta_product(orbit_census(cx, t))
    if series_order is None:
        series_order = 2 * t.order()
    expected = lefschetz_iterates(cx, t, series_order)
    actual = z_prod.log_derivative_series(series_order)
    return [
        TheoremCheck("zeta_det_equals_product",
                     z_det == z_prod, z_det.text(), z_prod.text()),
        TheoremCheck("zeta_series_consistent", actual == expected,
                     actual, expected),
    ]


@dataclass
class CorpusReport:
    """Outcome of a verification sweep: totals plus the failing checks."""

    graphs: int = 0
    maps: int = 0
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)

    def absorb(self, label: str, new_checks: list[TheoremCheck]):
        self.checks += len(new_checks)
        for c in new_checks:
            if not c.passed:
                self.failures.append(f"{label}: {c.describe()}")

    @property
    def passed(self) -> bool:
        return not self.failures


def run_corpus_suite(endomorphisms_per_graph: int = 25,
                     seed: int = 0) -> CorpusReport:
    """Full invariant sweep over the named corpus.

    Per graph: structural checks; per automorphism: Lefschetz three-way and
    zeta three-way; per sampled endomorphism: Lefschetz three-way, attractor
    invariance, and the Brouwer guarantee where applicable; plus the
    averaging-theorem report.
    """
    report = CorpusReport()
    rng = random.Random(seed)
    for name, g in named_corpus():
        report.graphs += 1
        cx = build_complex(g)
        spaces = CochainSpaces(cx)
        report.absorb(name, structural_checks(g, cx, spaces))
        group = automorphism_group(g)
        for t in group:
            report.maps += 1
            report.absorb(f"{name} aut {t.image}", lefschetz_checks(g, t, cx, spaces))
            report.absorb(f"{name} aut {t.image}", zeta_checks(g, t, cx, spaces))
        averaging = verify_averaging_theorems(g, group, cx, spaces)
        report.absorb(name, averaging.checks)
        report.findings.extend(f"{name}: {f}" for f in averaging.findings)
        applicable = g.n > 0 and spaces.betti(0) == 1 and is_star_shaped(g, spaces)
        for _ in range(endomorphisms_per_graph):
            t = random_endomorphism(g, rng)
            report.maps += 1
            report.absorb(f"{name} endo {t.image}",
                          lefschetz_checks(g, t, cx, spaces))
            report.absorb(f"{name} endo {t.image}",
                          attractor_checks(g, t, cx, spaces))
            if applicable:
                br = brouwer_check(g, t, spaces)
                report.absorb(f"{name} endo {t.image}", [
                    TheoremCheck("brouwer_fixed_clique_exists",
                                 br.fixed_count > 0, br.fixed_count, "> 0")])
    return report
