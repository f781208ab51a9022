"""Verdicts and machine-checkable certificates.

Every classification routine in this package returns a :class:`Verdict`:
one of Gorenstein / CtrNotGorenstein / NotCtr / InconclusiveAtBound, always
carrying a witness object that can be re-validated independently — a
decomposition pair, a non-decomposable monomial together with its radical
evidence, a kappa-vector certificate, or a bounded-scan summary.

Verdicts whose claim is only certified up to stated degree/power bounds set
``at_bound`` and carry those bounds; callers must treat them as honest
semidecisions rather than proofs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .lattice import DecompositionWitness, LatticePoint


class VerdictKind(str, Enum):
    GORENSTEIN = "Gorenstein"
    CTR_NOT_GORENSTEIN = "CtrNotGorenstein"
    NOT_CTR = "NotCtr"
    INCONCLUSIVE_AT_BOUND = "InconclusiveAtBound"


class TriState(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Bounds:
    """Degree/power bounds a bounded verdict was certified at."""

    degree: Optional[int] = None
    power: Optional[int] = None


@dataclass(frozen=True)
class GorensteinWitness:
    """Unit membership of the trace: the zero monomial decomposes."""

    decomposition: DecompositionWitness


@dataclass(frozen=True)
class RadicalWitness:
    """A monomial in the radical of the trace but not in the trace itself.

    ``mu`` fails the decomposition search (re-checkable); radical membership
    is evidenced either by a power decomposition (``power * mu`` splits) or
    by membership in every minimal prime of the radical (``prime_indices``).
    """

    mu: LatticePoint
    power: Optional[int] = None
    decomposition: Optional[DecompositionWitness] = None
    prime_indices: tuple[int, ...] = ()


@dataclass(frozen=True)
class ScanCertificate:
    """Summary of an exhaustive bounded scan that found no radical witness."""

    degree_bound: int
    power_bound: Optional[int]
    candidates: int
    decomposed: int
    gorenstein_excluded: bool = True


@dataclass(frozen=True)
class SchubertCertificate:
    """Kappa-vector certificate for a Schubert verdict.

    For a kappa gap of 1 the trace is the intersection of the face primes
    indexed by ``enter_max`` and ``enter_min`` (their defining indices are in
    ``sigmas``); for a gap >= 2 the trace is generated in degree
    ``trace_degree`` and the gap-th power of the top monomial witnesses
    radical membership.
    """

    entries: tuple[int, ...]
    degenerate: bool = False
    kappa: tuple[int, ...] = ()
    kappa_max: Optional[int] = None
    kappa_min: Optional[int] = None
    max_indices: tuple[int, ...] = ()
    min_indices: tuple[int, ...] = ()
    enter_max: tuple[int, ...] = ()
    enter_min: tuple[int, ...] = ()
    sigmas: tuple[tuple[int, ...], ...] = ()
    trace_degree: Optional[int] = None
    power: Optional[int] = None


@dataclass(frozen=True)
class DeterminantalCertificate:
    """Trace description for a generic determinantal ring: the stated power
    of the ideal of next-lower-order minors."""

    minor_size: int
    power: int


@dataclass(frozen=True)
class CliqueGapCertificate:
    """Maximal-clique statistics backing a perfect-graph verdict."""

    k: int
    k_prime: int
    cliques: tuple[tuple[str, ...], ...]
    scan_candidates: Optional[int] = None
    scan_nondecomposable: Optional[int] = None


Witness = object


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    witness: Witness
    at_bound: bool = False
    bounds: Optional[Bounds] = None

    @property
    def is_semidecision(self) -> bool:
        return self.at_bound or self.kind is VerdictKind.INCONCLUSIVE_AT_BOUND
