"""Poset construction, Hibi-ring invariants, scans, unions, Segre reports."""

from __future__ import annotations

import itertools
import random

import pytest

from ctrlab import (
    LatticePoint,
    PosetCycleError,
    TriState,
    UnknownElementError,
    VerdictKind,
    a_invariant,
    antichain,
    b_invariant,
    build_poset,
    chain,
    check_membership,
    decompose,
    disjoint_union,
    enumerate_points,
    generator_degrees,
    hibi_ctr_scan,
    min_feasible_degree,
    order_polytope_system,
    segre_condition_report,
)

from conftest import is_pure, maximal_chain_lengths, random_poset


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def test_build_poset_drops_redundant_relation():
    p = build_poset(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])
    assert p.covers == (("a", "b"), ("b", "c"))


def test_build_poset_double_peak_shape(double_peak):
    assert len(double_peak.elements) == 7
    assert len(double_peak.covers) == 6
    assert set(double_peak.maximal()) == {"y1", "x2", "y4"}
    assert set(double_peak.minimal()) == {"x1", "x3"}


def test_build_poset_cycle_error():
    with pytest.raises(PosetCycleError) as exc:
        build_poset(["a", "b"], [("a", "b"), ("b", "a")])
    assert "a" in exc.value.cycle and "b" in exc.value.cycle


def test_build_poset_unknown_element():
    with pytest.raises(UnknownElementError):
        build_poset(["a"], [("a", "b")])


def test_transitive_reduction_is_involutive():
    rng = random.Random(7)
    for _ in range(20):
        p = random_poset(rng, rng.randint(2, 6))
        full = [
            (x, y)
            for x in p.elements
            for y in p.elements
            if p.less(x, y)
        ]
        again = build_poset(p.elements, full)
        assert again == p
        assert build_poset(p.elements, p.covers) == p


# ---------------------------------------------------------------------------
# systems and invariants
# ---------------------------------------------------------------------------


def test_single_element_system_shape():
    s = order_polytope_system(build_poset(["x"], []))
    assert s.cover_constraints == ((None, "x"),)
    assert s.lower_bound_targets == frozenset({"x"})
    assert not s.sum_constraints


def test_invariants_of_running_examples(double_bypass, chain5, chain7):
    assert a_invariant(double_bypass) == -8
    assert b_invariant(double_bypass) == -6
    assert a_invariant(chain5) == -6
    assert b_invariant(chain5) == -6
    assert a_invariant(chain7) == -8
    assert b_invariant(chain7) == -8
    assert b_invariant(build_poset(["x"], [])) == -2


def test_a_invariant_equals_longest_chain_for_chains():
    # longest chain counted in elements, with the degree element included
    for k in (1, 2, 5, 7):
        p = chain(k)
        longest = max(maximal_chain_lengths(p)) + 1
        assert a_invariant(p) == -longest == -(k + 1)


def test_generator_degrees(double_bypass, chain5):
    up = generator_degrees(double_bypass, 1, 3)
    assert up.degrees == (8,) and up.window == (8, 11) and up.complete_at_window
    down = generator_degrees(double_bypass, -1, 3)
    assert down.degrees == (-6,) and down.window == (-6, -3)
    assert generator_degrees(chain5, 1, 2).degrees == (6,)


# ---------------------------------------------------------------------------
# classification scans
# ---------------------------------------------------------------------------


def test_hibi_scan_chain_is_gorenstein(chain5):
    v = hibi_ctr_scan(chain5, 2, 4)
    assert v.kind is VerdictKind.GORENSTEIN and not v.is_semidecision


def test_hibi_scan_double_bypass_at_bound(double_bypass):
    v = hibi_ctr_scan(double_bypass, 2, 4)
    assert v.kind is VerdictKind.CTR_NOT_GORENSTEIN
    assert v.is_semidecision and v.bounds.degree == 2 and v.bounds.power == 4
    assert v.witness.candidates > 0


def test_hibi_scan_union_not_ctr(union57):
    v = hibi_ctr_scan(union57, 2, 4)
    assert v.kind is VerdictKind.NOT_CTR
    assert v.witness.mu.degree == 1
    assert v.witness.power == 2


def test_gorenstein_iff_unit_decomposes_iff_pure():
    rng = random.Random(99)
    posets = []
    for size in (1, 2, 3, 4):
        for combo in _all_labeled_posets(size):
            posets.append(combo)
    for _ in range(60):
        posets.append(random_poset(rng, rng.randint(5, 6)))
    for p in posets:
        system = order_polytope_system(p)
        unit = decompose(system, LatticePoint.zero(system.ground))
        assert (unit is not None) == is_pure(p)
        symmetric = a_invariant(p) == b_invariant(p) and _stair_witness_ok(p)
        assert (unit is not None) == symmetric


def _all_labeled_posets(size):
    """Every labeled poset on `size` elements, via all DAG edge subsets."""
    elems = [f"e{i}" for i in range(size)]
    pairs = [(elems[i], elems[j]) for i in range(size) for j in range(i + 1, size)]
    seen = set()
    for r in range(len(pairs) + 1):
        for rels in itertools.combinations(pairs, r):
            p = build_poset(elems, rels)
            if p.covers not in seen:
                seen.add(p.covers)
                yield p


def _stair_witness_ok(p):
    """The pointwise-minimal shift-(+1) member, negated, is a shift-(-1)
    member exactly when the poset is graded."""
    system = order_polytope_system(p)
    d = min_feasible_degree(system, 1)
    for eta in enumerate_points(system, 1, d):
        if check_membership(system, -1, eta.scale(-1)):
            return True
    return False


def test_scan_verdict_matches_purity_on_small_sample():
    rng = random.Random(5)
    for _ in range(12):
        p = random_poset(rng, rng.randint(2, 5))
        v = hibi_ctr_scan(p, 1, 2)
        assert (v.kind is VerdictKind.GORENSTEIN) == is_pure(p)


# ---------------------------------------------------------------------------
# disjoint unions
# ---------------------------------------------------------------------------


def test_disjoint_union_examples(chain5, chain7):
    u = disjoint_union(chain5, chain7)
    assert len(u.elements) == 12
    assert a_invariant(u) == -8
    assert disjoint_union(build_poset([], []), chain5) == chain5


def test_disjoint_union_renames_clashes(chain5):
    u = disjoint_union(chain5, chain(3))
    assert len(set(u.elements)) == 8
    assert "x1_u1" in u.elements


def test_disjoint_union_min_degree_is_componentwise_max():
    rng = random.Random(13)
    for _ in range(20):
        p = random_poset(rng, rng.randint(1, 4))
        q = random_poset(rng, rng.randint(1, 4))
        u = disjoint_union(p, q)
        du = min_feasible_degree(order_polytope_system(u), 1)
        dp = min_feasible_degree(order_polytope_system(p), 1)
        dq = min_feasible_degree(order_polytope_system(q), 1)
        assert du == max(dp, dq)


# ---------------------------------------------------------------------------
# the worked nine-element example: explicit shift-(-1) companion
# ---------------------------------------------------------------------------


def test_explicit_companion_formula_validates(double_bypass):
    """For radical members nu (those with nu(a1) < nu(a3) < nu(a5)) the
    closed-form companion zeta and eta = nu - zeta land in the shift -1/+1
    sets; the general search subsumes this construction."""
    system = order_polytope_system(double_bypass)
    checked = 0
    for nu in enumerate_points(system, 0, 2):
        if not (nu.value("a1") < nu.value("a3") < nu.value("a5")):
            continue
        i1 = {f"b{i}" for i in (1, 2) if nu.value(f"b{i}") > nu.value("a1")}
        i2 = {f"c{i}" for i in (1, 2) if nu.value(f"c{i}") > nu.value("a3")}
        zeta_vals = {}
        for i in range(1, 6):
            zeta_vals[f"a{i}"] = -i
        for i in (1, 2):
            zeta_vals[f"b{i}"] = -i - 1 + (1 if f"b{i}" in i1 else 0)
            zeta_vals[f"c{i}"] = -i - 3 + (1 if f"c{i}" in i2 else 0)
        zeta = LatticePoint.of(zeta_vals, -6)
        eta = nu - zeta
        assert check_membership(system, -1, zeta)
        assert check_membership(system, 1, eta)
        assert decompose(system, nu, validate=False) is not None
        checked += 1
    assert checked > 0


# ---------------------------------------------------------------------------
# Segre reports
# ---------------------------------------------------------------------------


def test_segre_report_three_factors(double_bypass, chain5, chain7):
    rep = segre_condition_report([double_bypass, chain5, chain7])
    assert rep.hypothesis_ok
    assert rep.predicted_a == -8 and rep.predicted_b == -6
    assert all(r.level is TriState.YES for r in rep.factors)
    assert all(r.anticanonical_level is TriState.YES for r in rep.factors)
    assert all(r.dim_lower_bound >= 2 for r in rep.factors)


def test_segre_report_two_chains_fails_ordering(chain5, chain7):
    rep = segre_condition_report([chain5, chain7])
    assert not rep.hypothesis_ok
    assert rep.reorder_hint is not None
    # the reversed order fails too: the minimal-a factor has the minimal b
    rep2 = segre_condition_report([chain7, chain5])
    assert not rep2.hypothesis_ok


def test_segre_report_equal_chains(chain5):
    rep = segre_condition_report([chain5, chain(5, prefix="z")])
    assert rep.hypothesis_ok
    assert rep.predicted_a == -6 and rep.predicted_b == -6


def test_segre_report_needs_two_factors(chain5):
    with pytest.raises(ValueError):
        segre_condition_report([chain5])
