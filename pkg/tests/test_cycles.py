"""Cycle-graph systems, minimal primes, verdicts, and the forced-values
chain behind the odd-cycle witness."""

from __future__ import annotations

from fractions import Fraction

import pytest

from ctrlab import (
    validate_witness,
    CycleError,
    LatticePoint,
    MembershipError,
    VerdictKind,
    check_membership,
    cycle_ctr_verdict,
    cycle_system,
    decompose,
    enumerate_points,
    forced_value_ranges,
    minimal_prime_member,
    non_ctr_witness,
    radical_members,
    radical_power_search,
    search_degree_window,
)


def _chi(n, support, degree=1):
    return LatticePoint.of(
        {f"v{i}": (1 if i in support else 0) for i in range(n)}, degree
    )


# ---------------------------------------------------------------------------
# system construction
# ---------------------------------------------------------------------------


def test_cycle_system_seven_has_edges_plus_cycle():
    s = cycle_system(7)
    sizes = sorted(len(c.subset) for c in s.sum_constraints)
    assert sizes == [2] * 7 + [7]
    cycle = next(c for c in s.sum_constraints if len(c.subset) == 7)
    assert cycle.coefficient == Fraction(3)


def test_cycle_system_even_has_no_cycle_constraint():
    s = cycle_system(4)
    assert sorted(len(c.subset) for c in s.sum_constraints) == [2] * 4


def test_cycle_system_triangle_single_clique():
    s = cycle_system(3)
    assert len(s.sum_constraints) == 1
    assert s.sum_constraints[0].subset == frozenset({"v0", "v1", "v2"})


def test_cycle_system_rejects_short():
    with pytest.raises(CycleError):
        cycle_system(2)


# ---------------------------------------------------------------------------
# minimal primes
# ---------------------------------------------------------------------------


def test_prime_membership_examples():
    mu9 = non_ctr_witness(4)
    assert all(minimal_prime_member(9, i, mu9) for i in range(9))
    assert not minimal_prime_member(7, 0, _chi(7, {1, 3, 5}))
    assert minimal_prime_member(9, 0, _chi(9, {0}))


def test_prime_membership_preconditions():
    with pytest.raises(CycleError):
        minimal_prime_member(6, 0, LatticePoint.zero([f"v{i}" for i in range(6)], 1))
    with pytest.raises(MembershipError):
        minimal_prime_member(7, 0, _chi(7, {0, 1}))  # adjacent pair: not stable


# ---------------------------------------------------------------------------
# the explicit witness
# ---------------------------------------------------------------------------


def test_witness_support_and_membership():
    mu = non_ctr_witness(4)
    assert mu == _chi(9, {2, 4, 6})
    mu5 = non_ctr_witness(5)
    assert mu5 == _chi(11, {2, 4, 6, 8})
    assert mu5.total() == 4  # ell - 1
    with pytest.raises(CycleError):
        non_ctr_witness(3)


@pytest.mark.parametrize("ell,smallest_power", [(4, 2), (5, 3)])
def test_witness_is_radical_but_not_trace(ell, smallest_power):
    # smallest powers checked by hand: for ell = 5 both candidate degree
    # splits of 2*mu violate the odd-cycle inequality on the negative side
    n = 2 * ell + 1
    s = cycle_system(n)
    mu = non_ctr_witness(ell)
    assert check_membership(s, 0, mu)
    assert decompose(s, mu) is None
    assert decompose(s, mu, use_oracle=True) is None
    assert all(minimal_prime_member(n, i, mu) for i in range(n))
    power = radical_power_search(s, mu, 4)
    assert power is not None and power.power == smallest_power
    assert validate_witness(s, mu, power)


def test_forced_values_chain_for_nine_cycle():
    """Any feasible splitting of the witness must put the eta-degree at 3
    and eta identically 1 on the vertices; the propagator derives exactly
    that before failing."""
    s = cycle_system(9)
    mu = non_ctr_witness(4)
    assert search_degree_window(s, mu) == (3, 3)
    ranges, feasible = forced_value_ranges(s, mu, 3)
    assert not feasible
    assert all(hi == 1 for _, hi in ranges.values())
    assert all(lo >= 1 for lo, _ in ranges.values())


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n,kind", [
    (3, VerdictKind.GORENSTEIN),
    (4, VerdictKind.GORENSTEIN),
    (5, VerdictKind.GORENSTEIN),
    (6, VerdictKind.GORENSTEIN),
    (7, VerdictKind.CTR_NOT_GORENSTEIN),
    (8, VerdictKind.GORENSTEIN),
    (9, VerdictKind.NOT_CTR),
    (11, VerdictKind.NOT_CTR),
])
def test_cycle_verdicts(n, kind):
    v = cycle_ctr_verdict(n)
    assert v.kind is kind


def test_seven_cycle_certificate_counts():
    v = cycle_ctr_verdict(7, degree_bound=2)
    assert v.witness.candidates == v.witness.decomposed > 0
    assert v.bounds.degree == 2
    assert not v.is_semidecision


def test_nine_cycle_witness_in_report():
    v = cycle_ctr_verdict(9)
    assert v.witness.mu == non_ctr_witness(4)
    assert v.witness.prime_indices == tuple(range(9))


# ---------------------------------------------------------------------------
# trace vs radical on bounded scans
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", [7, 9, 11])
def test_trace_members_lie_in_every_prime(n):
    s = cycle_system(n)
    for d in (1, 2):
        for mu in enumerate_points(s, 0, d):
            if decompose(s, mu, validate=False) is not None:
                assert all(minimal_prime_member(n, i, mu) for i in range(n))


def test_seven_cycle_trace_equals_radical_at_bound():
    s = cycle_system(7)
    for d in (1, 2):
        members = {mu.values for mu in radical_members(7, d)}
        for mu in enumerate_points(s, 0, d):
            decomposes = decompose(s, mu, validate=False) is not None
            assert decomposes == (mu.values in members)
