"""Perfect graphs, maximal cliques, and their stable-set-polytope systems.

For a perfect graph the stable set polytope is cut out by the maximal clique
inequalities alone, so the shifted system demands ``mu(x) >= n`` on every
vertex and ``mu+(K) + n <= mu(-inf)`` per maximal clique K.  The certified
way to obtain a perfect graph here is as the comparability graph of a poset;
raw graph input is accepted but flagged assumed-perfect in reports
(perfectness is not verified algorithmically).

The classification surface implements the necessary gap condition on
maximal-clique sizes: with k and k' the largest and smallest maximal-clique
sizes, k = k' is Gorenstein, k - k' >= 2 is never CTR (explicit power
witness), and k - k' = 1 is inconclusive — an optional bounded deep scan
looks for a radical-not-trace monomial, since the gap condition is not
sufficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .lattice import (
    DecompositionWitness,
    LatticePoint,
    ShiftedSystem,
    check_membership,
    decompose,
    enumerate_points,
    radical_power_search,
)
from .posets import Poset
from .verdicts import (
    Bounds,
    CliqueGapCertificate,
    GorensteinWitness,
    RadicalWitness,
    Verdict,
    VerdictKind,
)


class GraphError(Exception):
    pass


@dataclass(frozen=True)
class Graph:
    """A finite simple graph; edges are stored canonically (each pair in
    vertex order, the list sorted).  ``certified_perfect`` records whether
    the graph was produced by a construction that guarantees perfectness."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    certified_perfect: bool = field(default=False, compare=False)

    def neighbors(self, x: str) -> frozenset[str]:
        out = set()
        for a, b in self.edges:
            if a == x:
                out.add(b)
            elif b == x:
                out.add(a)
        return frozenset(out)


def build_graph(
    vertices: Iterable[str],
    edges: Iterable[tuple[str, str]],
    *,
    certified_perfect: bool = False,
) -> Graph:
    verts = tuple(vertices)
    index = {}
    for v in verts:
        if v in index:
            raise GraphError(f"duplicate vertex {v!r}")
        index[v] = len(index)
    canon = []
    seen = set()
    for a, b in edges:
        if a not in index:
            raise GraphError(f"unknown vertex {a!r}")
        if b not in index:
            raise GraphError(f"unknown vertex {b!r}")
        if a == b:
            raise GraphError(f"loop at vertex {a!r}")
        e = (a, b) if index[a] < index[b] else (b, a)
        if e in seen:
            raise GraphError(f"duplicate edge {e}")
        seen.add(e)
        canon.append(e)
    canon.sort(key=lambda e: (index[e[0]], index[e[1]]))
    return Graph(verts, tuple(canon), certified_perfect)


def comparability_graph(poset: Poset) -> Graph:
    """Graph joining every strictly comparable pair of poset elements
    (transitive closure, not just covers); always perfect."""
    edges = []
    for i, x in enumerate(poset.elements):
        for y in poset.elements[i + 1 :]:
            if poset.less(x, y) or poset.less(y, x):
                edges.append((x, y))
    return build_graph(poset.elements, edges, certified_perfect=True)


@dataclass(frozen=True)
class CliqueStats:
    """The complete list of maximal cliques plus the extreme sizes
    k = max |K| and k' = min |K|."""

    k: int
    k_prime: int
    cliques: tuple[tuple[str, ...], ...]


def maximal_cliques(graph: Graph) -> CliqueStats:
    """All maximal cliques via pivoting branch-and-bound enumeration
    (deterministic: candidates are visited in vertex order and the output is
    sorted)."""
    index = {v: i for i, v in enumerate(graph.vertices)}
    adj: dict[str, frozenset[str]] = {v: graph.neighbors(v) for v in graph.vertices}
    found: list[tuple[str, ...]] = []

    def expand(clique: frozenset[str], cand: frozenset[str], excl: frozenset[str]) -> None:
        if not cand and not excl:
            found.append(tuple(sorted(clique, key=index.__getitem__)))
            return
        pivot, best = None, -1
        for u in sorted(cand | excl, key=index.__getitem__):
            score = len(cand & adj[u])
            if score > best:
                pivot, best = u, score
        for v in sorted(cand - adj[pivot], key=index.__getitem__):
            expand(clique | {v}, cand & adj[v], excl & adj[v])
            cand = cand - {v}
            excl = excl | {v}

    if graph.vertices:
        expand(frozenset(), frozenset(graph.vertices), frozenset())
    found.sort(key=lambda c: tuple(index[v] for v in c))
    sizes = [len(c) for c in found]
    return CliqueStats(
        k=max(sizes, default=0), k_prime=min(sizes, default=0), cliques=tuple(found)
    )


def perfect_system(graph: Graph, stats: Optional[CliqueStats] = None) -> ShiftedSystem:
    """Shifted system of the stable set polytope in its maximal-clique
    description.  The caller is responsible for perfectness of the graph;
    comparability-built graphs are certified."""
    if stats is None:
        stats = maximal_cliques(graph)
    return ShiftedSystem.build(
        ground=graph.vertices,
        lower_bound_targets=graph.vertices,
        cover_constraints=(),
        sum_constraints=[(c, Fraction(1)) for c in stats.cliques],
    )


@dataclass(frozen=True)
class DeepScanResult:
    witness: Optional[RadicalWitness]
    candidates: int
    nondecomposable: int


def deep_scan(
    graph: Graph,
    degree_bound: int = 2,
    power_bound: Optional[int] = None,
    *,
    use_oracle: bool = False,
) -> DeepScanResult:
    """Search the shift-0 members up to ``degree_bound`` for a monomial that
    fails to decompose but has a decomposable power <= ``power_bound``
    (default: the vertex count).  First witness in canonical order wins."""
    if power_bound is None:
        power_bound = max(len(graph.vertices), 2)
    system = perfect_system(graph)
    candidates = 0
    nondecomposable = 0
    for d in range(1, degree_bound + 1):
        for mu in enumerate_points(system, 0, d):
            candidates += 1
            if decompose(system, mu, use_oracle=use_oracle, validate=False) is not None:
                continue
            nondecomposable += 1
            power = radical_power_search(system, mu, power_bound, use_oracle=use_oracle)
            if power is not None and power.power >= 2:
                witness = RadicalWitness(mu, power=power.power, decomposition=power)
                return DeepScanResult(witness, candidates, nondecomposable)
    return DeepScanResult(None, candidates, nondecomposable)


def necessary_condition(
    graph: Graph,
    k_max: Optional[int] = None,
    *,
    deep_scan_degree_bound: Optional[int] = None,
    use_oracle: bool = False,
) -> Verdict:
    """Clique-gap classification of the Ehrhart ring of the stable set
    polytope of a perfect graph.

    k = k' is Gorenstein (cross-checked by decomposing the zero monomial).
    k - k' >= 2 is NotCtr: the degree-1 unit monomial cannot split, while
    the explicit pair (eta = 1 everywhere at degree k+1, zeta = -1
    everywhere at degree -k'-1) decomposes its (k-k')-th power.  k - k' = 1
    is inconclusive; pass ``deep_scan_degree_bound`` to run the bounded
    radical-vs-trace scan, which can upgrade the verdict to NotCtr.
    """
    stats = maximal_cliques(graph)
    if k_max is None:
        k_max = len(graph.vertices) + 2
    system = perfect_system(graph, stats)
    gap = stats.k - stats.k_prime

    if gap == 0:
        unit = decompose(system, LatticePoint.zero(system.ground), use_oracle=use_oracle)
        if unit is None:
            raise RuntimeError("inconsistency: unit decomposition failed with k = k'")
        return Verdict(VerdictKind.GORENSTEIN, GorensteinWitness(unit))

    if gap >= 2:
        mu = LatticePoint.zero(system.ground, degree=1)
        eta = LatticePoint.of({v: 1 for v in graph.vertices}, stats.k + 1)
        zeta = LatticePoint.of({v: -1 for v in graph.vertices}, -stats.k_prime - 1)
        witness = DecompositionWitness(eta, zeta, power=gap)
        if not (check_membership(system, 1, eta) and check_membership(system, -1, zeta)):
            raise RuntimeError("inconsistency: explicit power pair failed membership")
        if decompose(system, mu, use_oracle=use_oracle) is not None:
            raise RuntimeError("inconsistency: unit-degree monomial decomposed with gap >= 2")
        return Verdict(
            VerdictKind.NOT_CTR,
            RadicalWitness(mu, power=gap, decomposition=witness),
        )

    if deep_scan_degree_bound is not None:
        scan = deep_scan(graph, deep_scan_degree_bound, k_max, use_oracle=use_oracle)
        if scan.witness is not None:
            return Verdict(
                VerdictKind.NOT_CTR,
                scan.witness,
                bounds=Bounds(degree=deep_scan_degree_bound, power=k_max),
            )
        return Verdict(
            VerdictKind.INCONCLUSIVE_AT_BOUND,
            CliqueGapCertificate(
                stats.k,
                stats.k_prime,
                stats.cliques,
                scan_candidates=scan.candidates,
                scan_nondecomposable=scan.nondecomposable,
            ),
            at_bound=True,
            bounds=Bounds(degree=deep_scan_degree_bound, power=k_max),
        )
    return Verdict(
        VerdictKind.INCONCLUSIVE_AT_BOUND,
        CliqueGapCertificate(stats.k, stats.k_prime, stats.cliques),
        at_bound=True,
        bounds=Bounds(),
    )
