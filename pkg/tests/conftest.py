"""Shared fixtures: the worked-example posets/graphs and brute-force oracles.

The oracles here are deliberately independent of the library's search paths:
stable sets and cliques are found by scanning all vertex subsets, purity by
listing maximal chains, and enumeration counts by filtering full value boxes.
"""

from __future__ import annotations

import itertools
import random
from pathlib import Path

import pytest

from ctrlab import Poset, build_poset, chain, comparability_graph, disjoint_union

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def double_bypass() -> Poset:
    """Nine-element poset: a five-element chain a5 < ... < a1 with a two-step
    bypass b2 < b1 over its top half and another c2 < c1 over its bottom
    half.  Its Hibi ring has a = -8, b = -6 and is the running CTR example."""
    return build_poset(
        ["a1", "a2", "a3", "a4", "a5", "b1", "b2", "c1", "c2"],
        [
            ("a2", "a1"), ("a3", "a2"), ("a4", "a3"), ("a5", "a4"),
            ("b1", "a1"), ("b2", "b1"), ("a3", "b2"),
            ("c1", "a3"), ("c2", "c1"), ("a5", "c2"),
        ],
    )


@pytest.fixture(scope="session")
def double_peak() -> Poset:
    """Seven-element poset x1 < y1; x1 < y2 < x2; x3 < x2; x3 < y3 < y4.
    Its comparability graph has maximal-clique sizes 3 and 2 (gap 1)."""
    return build_poset(
        ["y1", "x1", "y2", "x2", "x3", "y3", "y4"],
        [("x1", "y1"), ("x1", "y2"), ("y2", "x2"), ("x3", "x2"), ("x3", "y3"), ("y3", "y4")],
    )


@pytest.fixture(scope="session")
def double_peak_graph(double_peak):
    return comparability_graph(double_peak)


@pytest.fixture(scope="session")
def chain5() -> Poset:
    return chain(5)


@pytest.fixture(scope="session")
def chain7() -> Poset:
    return chain(7, prefix="y")


@pytest.fixture(scope="session")
def union57(chain5, chain7) -> Poset:
    return disjoint_union(chain5, chain7)


# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------


def brute_force_stable_sets(n_vertices: int, edges: list[tuple[int, int]]) -> list[frozenset[int]]:
    """All stable sets by scanning the full power set."""
    out = []
    for r in range(n_vertices + 1):
        for combo in itertools.combinations(range(n_vertices), r):
            s = set(combo)
            if all(not (a in s and b in s) for a, b in edges):
                out.append(frozenset(s))
    return out


def brute_force_maximal_cliques(vertices, edges) -> set[frozenset]:
    """All maximal cliques by scanning the full power set (|V| <= 12)."""
    vset = list(vertices)
    eset = {frozenset(e) for e in edges}

    def is_clique(sub):
        return all(frozenset((a, b)) in eset for a, b in itertools.combinations(sub, 2))

    cliques = [
        frozenset(sub)
        for r in range(1, len(vset) + 1)
        for sub in itertools.combinations(vset, r)
        if is_clique(sub)
    ]
    return {c for c in cliques if not any(c < d for d in cliques)}


def maximal_chain_lengths(poset: Poset) -> set[int]:
    """Lengths (element counts) of all maximal chains of the poset."""
    above = {x: [y for (a, y) in poset.covers if a == x] for x in poset.elements}
    lengths = set()

    def walk(x, depth):
        if not above[x]:
            lengths.add(depth)
            return
        for y in above[x]:
            walk(y, depth + 1)

    for x in poset.minimal():
        walk(x, 1)
    if not poset.elements:
        lengths.add(0)
    return lengths


def is_pure(poset: Poset) -> bool:
    """All maximal chains have equal length (graded poset)."""
    return len(maximal_chain_lengths(poset)) <= 1


def random_poset(rng: random.Random, size: int, density: float = 0.4) -> Poset:
    """Random labeled poset: orient a random edge set along a fixed order."""
    elems = [f"e{i}" for i in range(size)]
    rels = [
        (elems[i], elems[j])
        for i in range(size)
        for j in range(i + 1, size)
        if rng.random() < density
    ]
    return build_poset(elems, rels)
