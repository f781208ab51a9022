"""Schubert indices: block/gap combinatorics and the kappa-vector criterion.

An index is a strictly increasing tuple ``[a_1, ..., a_m]`` with entries in
``[1, n]``; the set of all of them is a distributive lattice under the
componentwise order, with componentwise max/min as join and meet.

The index decomposes into *blocks* (maximal runs of consecutive entries) and
*gaps* (the integers strictly between successive blocks).  The trailing
block is the run ending exactly at n and is stored explicitly even when
empty, so the counting below is uniform; the sentinels k(0) = 0 and
``a_{m+1} = n + 1`` are explicit fields.  With ``beta_0..beta_{t+1}`` the
blocks and ``chi_0..chi_t`` the gaps, the kappa vector is::

    kappa_i = |beta_0| + ... + |beta_i| + |chi_i| + ... + |chi_t|

and the classification is by the gap ``kappa_max - kappa_min``: 0 is
Gorenstein, 1 is CTR (the canonical trace is an intersection of the face
primes singled out by the entry/exit pattern of the extreme kappa values),
and >= 2 is never CTR (the trace is generated in degree equal to the gap, so
the top monomial is a radical-not-trace witness whose gap-th power lies in
the trace).

Entries are 1-based throughout, matching the classical column indexing of
minors of a generic matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .verdicts import (
    DeterminantalCertificate,
    SchubertCertificate,
    Verdict,
    VerdictKind,
)


class SchubertError(Exception):
    pass


class DegenerateIndexError(SchubertError):
    """The index [n-m+1, ..., n]; its coordinate ring is a polynomial ring
    with one variable and has no block decomposition."""


@dataclass(frozen=True)
class SchubertIndex:
    m: int
    n: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if not (1 <= self.m <= self.n):
            raise SchubertError(f"need 1 <= m <= n, got m={self.m}, n={self.n}")
        if len(self.entries) != self.m:
            raise SchubertError(
                f"expected {self.m} entries, got {len(self.entries)}"
            )
        prev = 0
        for a in self.entries:
            if a <= prev:
                raise SchubertError(
                    f"entries must be strictly increasing, got {list(self.entries)}"
                )
            prev = a
        if self.entries and self.entries[-1] > self.n:
            raise SchubertError(
                f"entries must lie in [1, {self.n}], got {list(self.entries)}"
            )

    @staticmethod
    def of(m: int, n: int, entries: Iterable[int]) -> "SchubertIndex":
        return SchubertIndex(m, n, tuple(entries))

    def same_shape(self, other: "SchubertIndex") -> bool:
        return self.m == other.m and self.n == other.n

    def leq(self, other: "SchubertIndex") -> bool:
        """Componentwise order (defined for equal shapes)."""
        if not self.same_shape(other):
            raise SchubertError("shape mismatch")
        return all(a <= b for a, b in zip(self.entries, other.entries))

    def is_degenerate(self) -> bool:
        return self.entries == tuple(range(self.n - self.m + 1, self.n + 1))


def all_indices(m: int, n: int) -> Iterator[SchubertIndex]:
    for combo in itertools.combinations(range(1, n + 1), m):
        yield SchubertIndex(m, n, combo)


def join_meet(d: SchubertIndex, e: SchubertIndex) -> tuple[SchubertIndex, SchubertIndex]:
    """Componentwise (max, min); both results are valid indices."""
    if not d.same_shape(e):
        raise SchubertError("shape mismatch")
    join = tuple(max(a, b) for a, b in zip(d.entries, e.entries))
    meet = tuple(min(a, b) for a, b in zip(d.entries, e.entries))
    return SchubertIndex(d.m, d.n, join), SchubertIndex(d.m, d.n, meet)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks, gaps and the kappa vector of an index.

    ``blocks`` lists beta_0 .. beta_{t+1} (the last possibly empty),
    ``gaps`` lists chi_0 .. chi_t, ``cut_indices`` lists k(0) = 0 through
    k(t+1) (1-based entry positions ending each body block), and
    ``entry_sentinel`` is the conventional a_{m+1} = n + 1.
    """

    blocks: tuple[tuple[int, ...], ...]
    gaps: tuple[tuple[int, ...], ...]
    cut_indices: tuple[int, ...]
    t: int
    kappa: tuple[int, ...]
    kappa_max: int
    kappa_min: int
    entry_sentinel: int

    @property
    def gap(self) -> int:
        return self.kappa_max - self.kappa_min


def block_decomposition(g: SchubertIndex) -> BlockDecomposition:
    if g.is_degenerate():
        raise DegenerateIndexError(
            "degenerate index: the coordinate ring is a polynomial ring with 1 variable"
        )
    a = g.entries
    runs: list[list[int]] = [[a[0]]]
    for v in a[1:]:
        if v == runs[-1][-1] + 1:
            runs[-1].append(v)
        else:
            runs.append([v])
    if a[-1] == g.n:
        tail = tuple(runs[-1])
        body = runs[:-1]
    else:
        tail = ()
        body = runs
    # degenerate indices are excluded above, so at least one body block exists
    t = len(body) - 1
    blocks = tuple(tuple(r) for r in body) + (tail,)
    cut_indices = [0]
    for r in body:
        cut_indices.append(cut_indices[-1] + len(r))
    sentinel = g.n + 1
    gaps = []
    for i in range(t + 1):
        last = body[i][-1]
        pos = cut_indices[i + 1]  # 1-based position of that entry
        nxt = a[pos] if pos < g.m else sentinel
        gaps.append(tuple(range(last + 1, nxt)))
    block_sizes = [len(b) for b in blocks]
    gap_sizes = [len(c) for c in gaps]
    kappa = tuple(
        sum(block_sizes[: i + 1]) + sum(gap_sizes[i:]) for i in range(t + 1)
    )
    return BlockDecomposition(
        blocks=blocks,
        gaps=tuple(gaps),
        cut_indices=tuple(cut_indices),
        t=t,
        kappa=kappa,
        kappa_max=max(kappa),
        kappa_min=min(kappa),
        entry_sentinel=sentinel,
    )


def index_sets(dec: BlockDecomposition) -> tuple[tuple[int, ...], ...]:
    """(max positions, min positions, entries-into-max, entries-into-min).

    The last two collect the i with kappa_i extremal and kappa_{i-1} at the
    opposite extreme; they index the face primes cutting out the trace when
    the kappa gap is 1.
    """
    i1 = tuple(i for i, k in enumerate(dec.kappa) if k == dec.kappa_max)
    i2 = tuple(i for i, k in enumerate(dec.kappa) if k == dec.kappa_min)
    enter_max = tuple(i for i in i1 if i - 1 in i2)
    enter_min = tuple(i for i in i2 if i - 1 in i1)
    return i1, i2, enter_max, enter_min


def face_indices(g: SchubertIndex) -> tuple[tuple[SchubertIndex, ...], tuple[SchubertIndex, ...]]:
    """The first-order face indices of g.

    ``zetas[i]`` (0 <= i <= t) bumps the last entry of block beta_i by one;
    ``sigmas[i]`` (1 <= i <= t, returned 0-based as sigmas[i-1]) removes the
    last entry of beta_{i-1} and appends one past the end of beta_i.
    """
    dec = block_decomposition(g)
    a = g.entries
    zetas = []
    for i in range(dec.t + 1):
        pos = dec.cut_indices[i + 1]  # 1-based position of last entry of beta_i
        entries = list(a)
        entries[pos - 1] += 1
        zetas.append(SchubertIndex(g.m, g.n, tuple(entries)))
    sigmas = []
    for i in range(1, dec.t + 1):
        drop = dec.cut_indices[i]  # last entry of beta_{i-1}
        add = a[dec.cut_indices[i + 1] - 1] + 1  # one past last entry of beta_i
        entries = [v for j, v in enumerate(a, start=1) if j != drop]
        entries.append(add)
        entries.sort()
        sigmas.append(SchubertIndex(g.m, g.n, tuple(entries)))
    return tuple(zetas), tuple(sigmas)


def omega_member(g: SchubertIndex, i: int, delta: SchubertIndex) -> bool:
    """Membership of delta in the i-th first-kind face ideal of g:
    the k(i+1)-th entry of delta equals that of g (0 <= i <= t)."""
    dec = block_decomposition(g)
    if not delta.same_shape(g) or not g.leq(delta):
        raise SchubertError("delta must dominate g in the same shape")
    if not 0 <= i <= dec.t:
        raise SchubertError(f"face index {i} out of range 0..{dec.t}")
    pos = dec.cut_indices[i + 1]
    return delta.entries[pos - 1] == g.entries[pos - 1]


def theta_member(g: SchubertIndex, i: int, delta: SchubertIndex) -> bool:
    """Membership of delta in the i-th second-kind face ideal of g:
    the k(i)-th entry of delta stays below the first entry of block i
    (1 <= i <= t)."""
    dec = block_decomposition(g)
    if not delta.same_shape(g) or not g.leq(delta):
        raise SchubertError("delta must dominate g in the same shape")
    if not 1 <= i <= dec.t:
        raise SchubertError(f"face index {i} out of range 1..{dec.t}")
    pos = dec.cut_indices[i]
    return delta.entries[pos - 1] < g.entries[pos]  # entry at position k(i)+1


def witness_pair(
    g: SchubertIndex, beta: SchubertIndex
) -> tuple[SchubertIndex, SchubertIndex]:
    """The product pair certifying trace membership of ``beta`` over ``g``
    when the kappa gap is 1.

    Requires beta >= g lying in every second-kind face ideal indexed by the
    kappa entry/exit positions.  The pair picks the g-entry on max-blocks
    and the beta-entry on min-blocks (and vice versa); its meet is g and its
    join is beta, with the stated first-kind memberships.
    """
    dec = block_decomposition(g)
    if dec.gap != 1:
        raise SchubertError(f"witness pair requires kappa gap 1, got {dec.gap}")
    if not beta.same_shape(g):
        raise SchubertError("shape mismatch")
    if not g.leq(beta):
        raise SchubertError("beta must dominate g componentwise")
    i1, i2, enter_max, enter_min = index_sets(dec)
    for i in sorted(set(enter_max) | set(enter_min)):
        if not theta_member(g, i, beta):
            raise SchubertError(
                f"beta violates the second-kind face membership at index {i}"
            )
    h1 = {
        j
        for i in i1
        for j in range(dec.cut_indices[i] + 1, dec.cut_indices[i + 1] + 1)
    }
    h2 = {
        j
        for i in i2
        for j in range(dec.cut_indices[i] + 1, dec.cut_indices[i + 1] + 1)
    }
    a, b = g.entries, beta.entries
    c = [a[j - 1] if j in h1 else b[j - 1] for j in range(1, g.m + 1)]
    c_prime = [a[j - 1] if j in h2 else b[j - 1] for j in range(1, g.m + 1)]
    # positions past the body blocks (trailing block) keep the g-entry; there
    # a and beta agree, so both branches above already did the right thing
    for j in range(dec.cut_indices[-1] + 1, g.m + 1):
        c[j - 1] = a[j - 1]
        c_prime[j - 1] = a[j - 1]
    xi = SchubertIndex(g.m, g.n, tuple(c))
    xi_prime = SchubertIndex(g.m, g.n, tuple(c_prime))
    return xi, xi_prime


def schubert_verdict(g: SchubertIndex) -> Verdict:
    """Classification by the kappa gap; the certificate carries the kappa
    vector and, for gap 1, the index sets and defining face indices of the
    primes intersecting to the trace."""
    if g.is_degenerate():
        return Verdict(
            VerdictKind.GORENSTEIN,
            SchubertCertificate(entries=g.entries, degenerate=True),
        )
    dec = block_decomposition(g)
    i1, i2, enter_max, enter_min = index_sets(dec)
    base = dict(
        entries=g.entries,
        kappa=dec.kappa,
        kappa_max=dec.kappa_max,
        kappa_min=dec.kappa_min,
        max_indices=i1,
        min_indices=i2,
        enter_max=enter_max,
        enter_min=enter_min,
    )
    if dec.gap == 0:
        return Verdict(VerdictKind.GORENSTEIN, SchubertCertificate(**base))
    if dec.gap == 1:
        _, sigmas = face_indices(g)
        chosen = tuple(
            sigmas[i - 1].entries for i in sorted(set(enter_max) | set(enter_min))
        )
        return Verdict(
            VerdictKind.CTR_NOT_GORENSTEIN,
            SchubertCertificate(**base, sigmas=chosen),
        )
    return Verdict(
        VerdictKind.NOT_CTR,
        SchubertCertificate(**base, trace_degree=dec.gap, power=dec.gap),
    )


def determinantal_ctr(m: int, n: int, t: int) -> Verdict:
    """Classification of the generic determinantal ring cut out by the
    t-minors of an m x n matrix (2 <= t <= m <= n): the canonical trace is
    the (n-m)-th power of the ideal of (t-1)-minors, so the ring is
    Gorenstein iff n = m and CTR iff n - m <= 1."""
    if not (2 <= t <= m <= n):
        raise SchubertError(f"need 2 <= t <= m <= n, got t={t}, m={m}, n={n}")
    certificate = DeterminantalCertificate(minor_size=t - 1, power=n - m)
    if n == m:
        return Verdict(VerdictKind.GORENSTEIN, certificate)
    if n - m == 1:
        return Verdict(VerdictKind.CTR_NOT_GORENSTEIN, certificate)
    return Verdict(VerdictKind.NOT_CTR, certificate)
