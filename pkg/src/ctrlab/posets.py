"""Finite posets, order-polytope systems, and Hibi-ring invariants.

A poset is stored by its elements (in declaration order, which fixes the
coordinate order of derived constraint systems) and its cover relation,
always kept transitively reduced.  The order-polytope system of a poset P
attaches the degree coordinate below every minimal element and demands

    nu(x) >= n                for maximal x,
    nu(x) >= nu(y) + n        whenever y covers x (including the degree
                              coordinate under the minimal elements),

so that the shift-n member sets are the graded pieces of the n-th power of
the canonical module of the Hibi ring of P.  On top of the generic engine
this module provides the a- and b-invariants, generator-degree scans (level
and anticanonical-level detection), a bounded classification scan, disjoint
unions (= Segre products of the rings), and the hypothesis report for the
Segre-product criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .lattice import (
    DEGREE,
    LatticePoint,
    ShiftedSystem,
    check_membership,
    decompose,
    enumerate_points,
    min_feasible_degree,
    radical_power_search,
)
from .verdicts import (
    Bounds,
    GorensteinWitness,
    RadicalWitness,
    ScanCertificate,
    TriState,
    Verdict,
    VerdictKind,
)


class PosetError(Exception):
    """Base class for poset construction errors."""


class PosetCycleError(PosetError):
    def __init__(self, cycle: Sequence[str]):
        self.cycle = tuple(cycle)
        super().__init__("relation contains a cycle: " + " < ".join(self.cycle))


class UnknownElementError(PosetError):
    def __init__(self, element: str):
        self.element = element
        super().__init__(f"unknown element {element!r}")


@dataclass(frozen=True)
class Poset:
    """A finite poset: ordered element ids plus the transitively reduced
    cover relation, ``(x, y)`` meaning y covers x."""

    elements: tuple[str, ...]
    covers: tuple[tuple[str, str], ...]

    @cached_property
    def _above(self) -> dict[str, frozenset[str]]:
        """Strict upper sets: x -> {y : x < y}."""
        up: dict[str, set[str]] = {x: set() for x in self.elements}
        for x, y in self.covers:
            up[x].add(y)
        order = _topo_order(self.elements, self.covers)
        for x in reversed(order):
            acc: set[str] = set()
            for y in up[x]:
                acc.add(y)
                acc |= up[y]
            up[x] = acc
        return {x: frozenset(up[x]) for x in self.elements}

    def less(self, x: str, y: str) -> bool:
        return y in self._above[x]

    def maximal(self) -> tuple[str, ...]:
        covered = {x for x, _ in self.covers}
        return tuple(e for e in self.elements if e not in covered)

    def minimal(self) -> tuple[str, ...]:
        covering = {y for _, y in self.covers}
        return tuple(e for e in self.elements if e not in covering)


def _topo_order(elements: Sequence[str], covers: Sequence[tuple[str, str]]) -> list[str]:
    """Linear extension (smaller elements first); assumes acyclicity."""
    below_count = {e: 0 for e in elements}
    above: dict[str, list[str]] = {e: [] for e in elements}
    for x, y in covers:
        below_count[y] += 1
        above[x].append(y)
    queue = [e for e in elements if below_count[e] == 0]
    out: list[str] = []
    while queue:
        x = queue.pop(0)
        out.append(x)
        for y in above[x]:
            below_count[y] -= 1
            if below_count[y] == 0:
                queue.append(y)
    return out


def build_poset(
    elements: Iterable[str], relations: Iterable[tuple[str, str]]
) -> Poset:
    """Build a poset from strict relations ``x < y``.

    The stored cover relation is the transitive reduction of the input, so
    redundant relations are dropped and the constructor is idempotent on
    already-reduced input.  Cycles raise :class:`PosetCycleError` naming a
    cycle; undeclared ids raise :class:`UnknownElementError`.
    """
    elems = tuple(elements)
    seen = set()
    for e in elems:
        if e in seen:
            raise PosetError(f"duplicate element {e!r}")
        seen.add(e)
    adj: dict[str, set[str]] = {e: set() for e in elems}
    for x, y in relations:
        if x not in seen:
            raise UnknownElementError(x)
        if y not in seen:
            raise UnknownElementError(y)
        if x == y:
            raise PosetCycleError([x, x])
        adj[x].add(y)

    cycle = _find_cycle(elems, adj)
    if cycle is not None:
        raise PosetCycleError(cycle)

    closure: dict[str, set[str]] = {e: set() for e in elems}
    for x in reversed(_topo_order(elems, [(a, b) for a in elems for b in adj[a]])):
        for y in adj[x]:
            closure[x].add(y)
            closure[x] |= closure[y]

    index = {e: i for i, e in enumerate(elems)}
    covers = []
    for x in elems:
        for y in sorted(closure[x], key=index.__getitem__):
            if not any(y in closure[z] for z in closure[x]):
                covers.append((x, y))
    covers.sort(key=lambda c: (index[c[0]], index[c[1]]))
    return Poset(elems, tuple(covers))


def _find_cycle(elements, adj) -> Optional[list[str]]:
    WHITE, GREY, BLACK = 0, 1, 2
    color = {e: WHITE for e in elements}
    parent: dict[str, Optional[str]] = {}

    for root in elements:
        if color[root] != WHITE:
            continue
        stack = [(root, iter(sorted(adj[root])))]
        color[root] = GREY
        parent[root] = None
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if color[nxt] == GREY:
                    cycle = [nxt, node]
                    cur = parent[node]
                    while cur is not None and cycle[-1] != nxt:
                        cycle.append(cur)
                        cur = parent[cur]
                    if cycle[-1] != nxt:
                        cycle.append(nxt)
                    cycle.reverse()
                    return cycle
                if color[nxt] == WHITE:
                    color[nxt] = GREY
                    parent[nxt] = node
                    stack.append((nxt, iter(sorted(adj[nxt]))))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                stack.pop()
    return None


def chain(length: int, prefix: str = "x") -> Poset:
    """The chain poset x1 < x2 < ... (length elements)."""
    elems = [f"{prefix}{i}" for i in range(1, length + 1)]
    rels = [(elems[i], elems[i + 1]) for i in range(length - 1)]
    return build_poset(elems, rels)


def antichain(size: int, prefix: str = "x") -> Poset:
    return build_poset([f"{prefix}{i}" for i in range(1, size + 1)], [])


def order_polytope_system(poset: Poset) -> ShiftedSystem:
    """The shifted system of the order polytope of ``poset``.

    Lower-bound targets are the maximal elements; covers are those of the
    poset with the degree coordinate attached below every minimal element.
    No sum constraints.
    """
    covers: list[tuple[Optional[str], str]] = list(poset.covers)
    for y in poset.minimal():
        covers.append((DEGREE, y))
    return ShiftedSystem.build(
        ground=poset.elements,
        lower_bound_targets=poset.maximal(),
        cover_constraints=covers,
        sum_constraints=(),
    )


def a_invariant(poset: Poset) -> int:
    """Negative of the minimal degree in the shift-(+1) member set."""
    return -min_feasible_degree(order_polytope_system(poset), 1)


def b_invariant(poset: Poset) -> int:
    """Minimal degree in the shift-(-1) member set."""
    return min_feasible_degree(order_polytope_system(poset), -1)


@dataclass(frozen=True)
class GeneratorDegreeScan:
    """Generator degrees found inside a bounded window.

    ``complete_at_window`` records that the listed degrees are exhaustive
    within ``window`` only; degrees beyond the window are not examined
    (semidecision).
    """

    degrees: tuple[int, ...]
    window: tuple[int, int]
    complete_at_window: bool = True


def generator_degrees(poset: Poset, shift: int, degree_window: int) -> GeneratorDegreeScan:
    """Degrees carrying a module generator at the given shift.

    A member nu of degree d is a generator when it is not ``nu' + rho`` for
    a member nu' at the same shift and a nonzero shift-0 member rho.  Scans
    degrees from the minimal feasible one through ``degree_window`` above it.
    """
    if shift not in (1, -1):
        raise ValueError("shift must be +1 or -1")
    if degree_window < 1:
        raise ValueError("degree_window must be >= 1")
    system = order_polytope_system(poset)
    d0 = min_feasible_degree(system, shift)
    ring_slices = {
        e: enumerate_points(system, 0, e) for e in range(1, degree_window + 1)
    }
    found = []
    for d in range(d0, d0 + degree_window + 1):
        has_generator = False
        for nu in enumerate_points(system, shift, d):
            if all(
                not check_membership(system, shift, nu - rho)
                for e in range(1, d - d0 + 1)
                for rho in ring_slices[e]
            ):
                has_generator = True
                break
        if has_generator:
            found.append(d)
    return GeneratorDegreeScan(tuple(found), (d0, d0 + degree_window))


def hibi_ctr_scan(
    poset: Poset,
    degree_bound: int,
    k_max: int,
    *,
    use_oracle: bool = False,
) -> Verdict:
    """Bounded classification of the Hibi ring of ``poset``.

    Gorenstein when the zero monomial decomposes.  Otherwise every shift-0
    member up to ``degree_bound`` is tested: a member that fails the
    decomposition search but whose k-th multiple decomposes for some
    2 <= k <= ``k_max`` is a radical-not-trace witness (NotCtr).  If the
    scan finds none the ring is reported CTR-not-Gorenstein *at the scanned
    bound* — a semidecision, stated as such.
    """
    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    system = order_polytope_system(poset)
    zero = LatticePoint.zero(system.ground)
    unit = decompose(system, zero, use_oracle=use_oracle)
    if unit is not None:
        return Verdict(VerdictKind.GORENSTEIN, GorensteinWitness(unit))

    candidates = 0
    decomposed = 0
    for d in range(1, degree_bound + 1):
        for mu in enumerate_points(system, 0, d):
            candidates += 1
            if decompose(system, mu, use_oracle=use_oracle, validate=False) is not None:
                decomposed += 1
                continue
            power = radical_power_search(system, mu, k_max, use_oracle=use_oracle)
            if power is not None and power.power >= 2:
                return Verdict(
                    VerdictKind.NOT_CTR,
                    RadicalWitness(mu, power=power.power, decomposition=power),
                    bounds=Bounds(degree=degree_bound, power=k_max),
                )
    return Verdict(
        VerdictKind.CTR_NOT_GORENSTEIN,
        ScanCertificate(
            degree_bound=degree_bound,
            power_bound=k_max,
            candidates=candidates,
            decomposed=decomposed,
        ),
        at_bound=True,
        bounds=Bounds(degree=degree_bound, power=k_max),
    )


def disjoint_union(p: Poset, q: Poset) -> Poset:
    """Disjoint union of posets; clashing ids from ``q`` are auto-renamed by
    suffixing ``_u1``, ``_u2``, ... (the union's Hibi ring is the Segre
    product of the factors' rings)."""
    taken = set(p.elements)
    rename: dict[str, str] = {}
    for e in q.elements:
        name = e
        i = 0
        while name in taken:
            i += 1
            name = f"{e}_u{i}"
        rename[e] = name
        taken.add(name)
    q_elems = tuple(rename[e] for e in q.elements)
    q_covers = tuple((rename[x], rename[y]) for x, y in q.covers)
    return Poset(p.elements + q_elems, p.covers + q_covers)


@dataclass(frozen=True)
class SegreFactorRecord:
    a: int
    b: int
    level: TriState
    anticanonical_level: TriState
    dim_lower_bound: int


@dataclass(frozen=True)
class SegreReport:
    """Hypothesis report for the Segre-product CTR criterion.

    ``hypothesis_ok`` is True only when the factors are pre-sorted so that
    factor 1 attains the minimal a and maximal b, every factor has dimension
    >= 2 and negative a-invariant, and the level flags are affirmative.
    Reducedness and the existence of a linear regular element hold
    automatically for Hibi rings over a field and are listed as assumed.
    """

    factors: tuple[SegreFactorRecord, ...]
    hypothesis_ok: bool
    predicted_a: int
    predicted_b: int
    reorder_hint: Optional[str] = None
    generator_window: int = 3
    assumed_hypotheses: tuple[str, ...] = ("reduced", "linear_regular_element")


def segre_condition_report(
    factors: Sequence[Poset], *, degree_window: int = 3
) -> SegreReport:
    """Evaluate the decidable hypotheses of the Segre-product criterion."""
    if len(factors) < 2:
        raise ValueError("need at least 2 factors")
    records = []
    for poset in factors:
        lv = generator_degrees(poset, 1, degree_window)
        acl = generator_degrees(poset, -1, degree_window)
        records.append(
            SegreFactorRecord(
                a=a_invariant(poset),
                b=b_invariant(poset),
                level=TriState.YES if len(lv.degrees) == 1 else TriState.NO,
                anticanonical_level=TriState.YES if len(acl.degrees) == 1 else TriState.NO,
                dim_lower_bound=len(poset.elements) + 1,
            )
        )
    a1, b1 = records[0].a, records[0].b
    a_min = min(r.a for r in records)
    b_max = max(r.b for r in records)
    hint = None
    ordered = a1 == a_min and b1 == b_max
    if not ordered:
        best = [
            i
            for i, r in enumerate(records)
            if r.a == a_min and r.b == b_max
        ]
        if best:
            hint = f"place factor {best[0] + 1} first (minimal a and maximal b)"
        else:
            hint = "no factor attains both the minimal a and the maximal b; no ordering satisfies the hypothesis"
    per_factor_ok = all(
        r.dim_lower_bound >= 2
        and r.a < 0
        and r.level is TriState.YES
        and r.anticanonical_level is TriState.YES
        for r in records
    )
    return SegreReport(
        factors=tuple(records),
        hypothesis_ok=ordered and per_factor_ok,
        predicted_a=a1,
        predicted_b=b1,
        reorder_hint=hint,
        generator_window=degree_window,
    )
