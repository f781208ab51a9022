"""Schubert-index combinatorics: lattice laws, block/gap decompositions,
face ideals, witness pairs, and verdicts."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ctrlab import (
    DegenerateIndexError,
    SchubertError,
    SchubertIndex,
    VerdictKind,
    all_indices,
    block_decomposition,
    determinantal_ctr,
    face_indices,
    index_sets,
    join_meet,
    omega_member,
    schubert_verdict,
    theta_member,
    witness_pair,
)


def idx(m, n, *entries):
    return SchubertIndex.of(m, n, entries)


# ---------------------------------------------------------------------------
# indices and lattice structure
# ---------------------------------------------------------------------------


def test_index_validation():
    with pytest.raises(SchubertError):
        idx(2, 5, 4, 2)
    with pytest.raises(SchubertError):
        idx(2, 5, 1, 6)
    with pytest.raises(SchubertError):
        idx(3, 5, 1, 2)


def test_join_meet_examples():
    j, m = join_meet(idx(2, 5, 1, 4), idx(2, 5, 2, 3))
    assert j.entries == (2, 4) and m.entries == (1, 3)
    g = idx(3, 7, 2, 3, 6)
    assert join_meet(g, g) == (g, g)
    j2, m2 = join_meet(idx(3, 7, 2, 3, 7), idx(3, 7, 3, 4, 6))
    assert j2.entries == (3, 4, 7) and m2.entries == (2, 3, 6)


def test_join_meet_shape_mismatch():
    with pytest.raises(SchubertError):
        join_meet(idx(2, 5, 1, 2), idx(2, 6, 1, 2))


_indices_3x7 = st.builds(
    lambda c: SchubertIndex(3, 7, tuple(sorted(c))),
    st.sets(st.integers(1, 7), min_size=3, max_size=3),
)


@given(_indices_3x7, _indices_3x7, _indices_3x7)
@settings(max_examples=150, deadline=None)
def test_lattice_laws(a, b, c):
    def j(x, y):
        return join_meet(x, y)[0]

    def m(x, y):
        return join_meet(x, y)[1]

    assert j(a, b) == j(b, a) and m(a, b) == m(b, a)
    assert j(a, j(b, c)) == j(j(a, b), c)
    assert m(a, m(b, c)) == m(m(a, b), c)
    assert j(a, m(a, b)) == a and m(a, j(a, b)) == a  # absorption
    assert m(a, j(b, c)) == j(m(a, b), m(a, c))  # distributivity


# ---------------------------------------------------------------------------
# block decompositions
# ---------------------------------------------------------------------------


def test_blocks_single_run():
    d = block_decomposition(idx(3, 5, 1, 2, 3))
    assert d.blocks == ((1, 2, 3), ())
    assert d.gaps == ((4, 5),)
    assert d.t == 0 and d.kappa == (5,)


def test_blocks_running_example():
    d = block_decomposition(idx(3, 7, 2, 3, 6))
    assert d.blocks == ((2, 3), (6,), ())
    assert d.gaps == ((4, 5), (7,))
    assert d.cut_indices == (0, 2, 3)
    assert d.kappa == (5, 4) and d.kappa_max == 5 and d.kappa_min == 4


def test_blocks_two_singletons():
    d = block_decomposition(idx(2, 7, 1, 5))
    assert d.kappa == (6, 4)
    assert d.gaps == ((2, 3, 4), (6, 7))


def test_blocks_trailing_block_nonempty():
    d = block_decomposition(idx(3, 7, 2, 3, 7))
    assert d.blocks == ((2, 3), (7,))
    assert d.t == 0 and d.kappa == (5,)


def test_degenerate_index_raises():
    with pytest.raises(DegenerateIndexError):
        block_decomposition(idx(2, 5, 4, 5))


def test_kappa_two_pass_oracle_and_partition():
    """Closed-formula kappa against a prefix/suffix walking recomputation,
    plus the partition fact: blocks and gaps tile [a_1, n]."""
    for m in (1, 2, 3):
        for n in range(m, 9):
            for g in all_indices(m, n):
                if g.is_degenerate():
                    continue
                d = block_decomposition(g)
                prefix = list(itertools.accumulate(len(b) for b in d.blocks))
                suffix = list(
                    reversed(list(itertools.accumulate(len(c) for c in reversed(d.gaps))))
                )
                two_pass = tuple(prefix[i] + suffix[i] for i in range(d.t + 1))
                assert d.kappa == two_pass
                covered = sorted(
                    itertools.chain(*(b for b in d.blocks), *(c for c in d.gaps))
                )
                assert covered == list(range(g.entries[0], g.n + 1))


# ---------------------------------------------------------------------------
# face ideals
# ---------------------------------------------------------------------------


def test_face_indices_running_example():
    zetas, sigmas = face_indices(idx(3, 7, 2, 3, 6))
    assert [z.entries for z in zetas] == [(2, 4, 6), (2, 3, 7)]
    assert [s.entries for s in sigmas] == [(2, 6, 7)]


def test_membership_predicates():
    g = idx(3, 7, 2, 3, 6)
    assert omega_member(g, 0, idx(3, 7, 2, 3, 7))
    assert not omega_member(g, 0, idx(3, 7, 2, 4, 7))
    assert theta_member(g, 1, idx(3, 7, 3, 4, 7))
    assert not theta_member(g, 1, idx(3, 7, 2, 6, 7))


def test_face_ideals_are_downward_closed():
    probes = [idx(2, 6, 1, 3), idx(2, 6, 2, 4), idx(3, 7, 2, 3, 6), idx(3, 6, 1, 3, 5)]
    for g in probes:
        d = block_decomposition(g)
        above = [h for h in all_indices(g.m, g.n) if g.leq(h)]
        for i in range(d.t + 1):
            members = {h.entries for h in above if omega_member(g, i, h)}
            for h in above:
                for h2 in above:
                    if h.leq(h2) and h2.entries in members:
                        assert h.entries in members
        for i in range(1, d.t + 1):
            members = {h.entries for h in above if theta_member(g, i, h)}
            for h in above:
                for h2 in above:
                    if h.leq(h2) and h2.entries in members:
                        assert h.entries in members


# ---------------------------------------------------------------------------
# witness pairs
# ---------------------------------------------------------------------------


def test_witness_pair_examples():
    g = idx(3, 7, 2, 3, 6)
    xi, xi_p = witness_pair(g, idx(3, 7, 3, 4, 7))
    assert xi.entries == (2, 3, 7) and xi_p.entries == (3, 4, 6)
    xi, xi_p = witness_pair(g, g)
    assert xi == g and xi_p == g
    g2 = idx(2, 5, 1, 4)
    xi, xi_p = witness_pair(g2, idx(2, 5, 2, 5))
    assert xi.entries == (1, 5) and xi_p.entries == (2, 4)


def test_witness_pair_errors():
    with pytest.raises(SchubertError):
        witness_pair(idx(2, 7, 1, 5), idx(2, 7, 2, 6))  # kappa gap 2
    g = idx(3, 7, 2, 3, 6)
    with pytest.raises(SchubertError):
        witness_pair(g, idx(3, 7, 1, 3, 6))  # beta not above gamma
    with pytest.raises(SchubertError) as exc:
        witness_pair(g, idx(3, 7, 2, 6, 7))  # fails the face membership
    assert "face membership" in str(exc.value)


def _admissible_betas(g):
    d = block_decomposition(g)
    _, _, enter_max, enter_min = index_sets(d)
    needed = sorted(set(enter_max) | set(enter_min))
    for beta in all_indices(g.m, g.n):
        if g.leq(beta) and all(theta_member(g, i, beta) for i in needed):
            yield beta


def test_witness_pair_properties_small_grid():
    for m in (1, 2, 3):
        for n in range(m, 7):
            for g in all_indices(m, n):
                if g.is_degenerate():
                    continue
                d = block_decomposition(g)
                if d.gap != 1:
                    continue
                i1, i2, _, _ = index_sets(d)
                for beta in _admissible_betas(g):
                    xi, xi_p = witness_pair(g, beta)
                    j, mt = join_meet(xi, xi_p)
                    assert mt == g and j == beta
                    assert all(omega_member(g, i, xi) for i in i1)
                    assert all(omega_member(g, i, xi_p) for i in i2)


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------


def test_verdict_identity_indices_gorenstein():
    for n in range(2, 9):
        for m in range(1, n):
            v = schubert_verdict(SchubertIndex.of(m, n, range(1, m + 1)))
            assert v.kind is VerdictKind.GORENSTEIN


def test_verdict_running_example_certificate():
    v = schubert_verdict(idx(3, 7, 2, 3, 6))
    assert v.kind is VerdictKind.CTR_NOT_GORENSTEIN
    w = v.witness
    assert w.kappa == (5, 4)
    assert w.max_indices == (0,) and w.min_indices == (1,)
    assert w.enter_max == () and w.enter_min == (1,)
    assert w.sigmas == ((2, 6, 7),)


def test_verdict_gap_two():
    v = schubert_verdict(idx(2, 7, 1, 5))
    assert v.kind is VerdictKind.NOT_CTR
    assert v.witness.kappa == (6, 4)
    assert v.witness.trace_degree == 2 and v.witness.power == 2


def test_verdict_degenerate_is_polynomial_ring():
    v = schubert_verdict(idx(2, 5, 4, 5))
    assert v.kind is VerdictKind.GORENSTEIN and v.witness.degenerate


def test_determinantal_examples():
    assert determinantal_ctr(3, 3, 2).kind is VerdictKind.GORENSTEIN
    assert determinantal_ctr(2, 3, 2).kind is VerdictKind.CTR_NOT_GORENSTEIN
    assert determinantal_ctr(2, 5, 2).kind is VerdictKind.NOT_CTR
    v = determinantal_ctr(2, 5, 2)
    assert v.witness.minor_size == 1 and v.witness.power == 3
    with pytest.raises(SchubertError):
        determinantal_ctr(2, 3, 1)
    with pytest.raises(SchubertError):
        determinantal_ctr(3, 2, 2)
