"""Expected Lefschetz numbers over random-graph spaces.

The exhaustive mode averages the average Lefschetz number L(G) over every
labeled graph on n vertices, exact rational arithmetic throughout.  The
sampling mode exists for larger n and never replaces the exhaustive runs.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .complexes import build_complex
from .cohomology import CochainSpaces
from .graphs import Graph, all_graphs, graph_count, random_graph
from .symmetry import automorphism_group, average_lefschetz

MAX_EXHAUSTIVE_EXPECTATION = 6


def graph_average_lefschetz(g: Graph) -> int:
    """L(G) for a single graph, building everything fresh."""
    cx = build_complex(g)
    spaces = CochainSpaces(cx)
    return average_lefschetz(g, automorphism_group(g), spaces)


def expectation_exhaustive(n: int, cap: int = MAX_EXHAUSTIVE_EXPECTATION) -> Fraction:
    """E_n[L]: mean of L(G) over all 2^(n(n-1)/2) labeled graphs."""
    if n > cap:
        raise ValueError(
            f"exhaustive expectation capped at {cap} vertices (got {n}); "
            "raise the cap explicitly to go further")
    total = 0
    for g in all_graphs(n):
        total += graph_average_lefschetz(g)
    return Fraction(total, graph_count(n))


def expectation_sampled(n: int, edge_probability: Fraction, samples: int,
                        seed: int) -> Fraction:
    """Empirical mean of L(G) over seeded Erdos-Renyi samples, exact rational."""
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = random.Random(seed)
    total = 0
    for _ in range(samples):
        g = random_graph(n, edge_probability, rng)
        total += graph_average_lefschetz(g)
    return Fraction(total, samples)
