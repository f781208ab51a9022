"""Shifted families of integer lattice-point constraint systems.

A :class:`ShiftedSystem` describes, for every integer shift ``n``, the set
``S(n)`` of integer vectors ``nu`` on a finite ground set ``X`` together with
a distinguished grading coordinate (the *degree*, written ``nu(-inf)``),
subject to three constraint families::

    nu(x) >= n                      for x in lower_bound_targets
    nu(x) >= nu(y) + n              for (x, y) in cover_constraints
    nu+(S) + n <= c * nu(-inf)      for (S, c) in sum_constraints

where ``nu+(S)`` is the sum of ``nu`` over ``S`` and ``c`` is a positive
rational.  Cover constraints may name the degree coordinate in the lower
position (pair ``(None, y)`` meaning ``nu(-inf) >= nu(y) + n``); the degree
never appears in the upper position.

The shift-0 set is a monoid of exponent vectors: its degree-1 members are
exactly the lattice points of the underlying polytope (an order polytope for
cover-only systems, a clique/odd-cycle polytope for sum-only systems).  The
shifted sets are modules over it, ``S(n) + S(0) <= S(n)``, and the central
question answered here is *trace membership*: whether a shift-0 member ``mu``
splits as ``mu = eta + zeta`` with ``eta in S(1)`` and ``zeta in S(-1)``.

All arithmetic is exact: values are arbitrary-precision integers and the
rational sum coefficients are evaluated by cross-multiplication.  There are
no tolerances anywhere.

Systems with an empty ground set are legal; only the degree coordinate
remains and membership is, by convention, ``nu(-inf) >= 0`` at every shift.

Everything in this module is a pure function of immutable inputs and is safe
to call concurrently.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

ElementId = str

#: Marker for the degree coordinate in cover constraints.
DEGREE = None


class LatticeError(Exception):
    """Base class for constraint-system errors."""


class DomainMismatchError(LatticeError):
    """A point's domain differs from the ground set it is evaluated against."""

    def __init__(self, missing: Iterable[ElementId], extra: Iterable[ElementId]):
        self.missing = tuple(sorted(missing))
        self.extra = tuple(sorted(extra))
        super().__init__(
            "point domain does not match system ground: "
            f"missing={list(self.missing)} extra={list(self.extra)}"
        )


class MembershipError(LatticeError):
    """A membership precondition failed; carries the violated constraint."""

    def __init__(self, shift: int, violation: str):
        self.shift = shift
        self.violation = violation
        super().__init__(f"point is not a member at shift {shift}: {violation}")


class UnboundedEnumerationError(LatticeError):
    """The requested search space is infinite."""


class InvalidSystemError(LatticeError):
    """The system violates a structural assumption (cyclic covers, ...)."""


def _ceil_div(a: int, b: int) -> int:
    # b > 0 always (sum coefficients are positive)
    return -((-a) // b)


def _floor_div(a: int, b: int) -> int:
    return a // b


@dataclass(frozen=True)
class LatticePoint:
    """An integer vector on a ground set plus a grading degree.

    ``values`` is stored canonically as an id-sorted tuple of pairs so that
    equality and hashing are structural.  Addition, subtraction and scaling
    act componentwise, degree included, and require equal domains.
    """

    values: tuple[tuple[ElementId, int], ...]
    degree: int

    @staticmethod
    def of(values: Mapping[ElementId, int], degree: int) -> "LatticePoint":
        return LatticePoint(tuple(sorted(values.items())), degree)

    @staticmethod
    def zero(ground: Iterable[ElementId], degree: int = 0) -> "LatticePoint":
        return LatticePoint(tuple(sorted((x, 0) for x in ground)), degree)

    def as_dict(self) -> dict[ElementId, int]:
        return dict(self.values)

    def value(self, x: ElementId) -> int:
        for key, v in self.values:
            if key == x:
                return v
        raise KeyError(x)

    def domain(self) -> frozenset[ElementId]:
        return frozenset(key for key, _ in self.values)

    def total(self) -> int:
        """Sum of the values over the whole ground set (degree excluded)."""
        return sum(v for _, v in self.values)

    def _require_same_domain(self, other: "LatticePoint") -> None:
        a, b = self.domain(), other.domain()
        if a != b:
            raise DomainMismatchError(missing=a - b, extra=b - a)

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        self._require_same_domain(other)
        ov = other.as_dict()
        return LatticePoint(
            tuple((k, v + ov[k]) for k, v in self.values), self.degree + other.degree
        )

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        self._require_same_domain(other)
        ov = other.as_dict()
        return LatticePoint(
            tuple((k, v - ov[k]) for k, v in self.values), self.degree - other.degree
        )

    def scale(self, k: int) -> "LatticePoint":
        return LatticePoint(tuple((key, k * v) for key, v in self.values), k * self.degree)

    def __rmul__(self, k: int) -> "LatticePoint":
        return self.scale(k)

    def is_zero(self) -> bool:
        return self.degree == 0 and all(v == 0 for _, v in self.values)


@dataclass(frozen=True)
class SumConstraint:
    """``nu+(subset) + n <= coefficient * nu(-inf)`` at shift ``n``."""

    subset: frozenset[ElementId]
    coefficient: Fraction

    def __post_init__(self):
        if not self.subset:
            raise InvalidSystemError("sum constraint over an empty subset")
        if self.coefficient <= 0:
            raise InvalidSystemError("sum constraint coefficient must be positive")


Cover = tuple[Optional[ElementId], ElementId]


@dataclass(frozen=True)
class ShiftedSystem:
    """A shift-indexed family of lattice-point sets; see the module docstring.

    ``ground`` fixes the coordinate order used for lexicographic enumeration
    and for the determinism guarantees of the search operations.
    """

    ground: tuple[ElementId, ...]
    lower_bound_targets: frozenset[ElementId]
    cover_constraints: tuple[Cover, ...]
    sum_constraints: tuple[SumConstraint, ...]

    def __post_init__(self):
        seen = set()
        for x in self.ground:
            if x in seen:
                raise InvalidSystemError(f"duplicate ground element {x!r}")
            seen.add(x)
        for x in self.lower_bound_targets:
            if x not in seen:
                raise InvalidSystemError(f"lower-bound target {x!r} not in ground")
        for lo, up in self.cover_constraints:
            if up is DEGREE:
                raise InvalidSystemError(
                    "the degree coordinate may not appear in the upper position "
                    "of a cover constraint"
                )
            if lo is not DEGREE and lo not in seen:
                raise InvalidSystemError(f"cover endpoint {lo!r} not in ground")
            if up not in seen:
                raise InvalidSystemError(f"cover endpoint {up!r} not in ground")
        for sc in self.sum_constraints:
            for x in sc.subset:
                if x not in seen:
                    raise InvalidSystemError(f"sum constraint element {x!r} not in ground")

    @staticmethod
    def build(
        ground: Sequence[ElementId],
        lower_bound_targets: Iterable[ElementId] = (),
        cover_constraints: Iterable[Cover] = (),
        sum_constraints: Iterable[tuple[Iterable[ElementId], Union[int, Fraction]]] = (),
    ) -> "ShiftedSystem":
        return ShiftedSystem(
            ground=tuple(ground),
            lower_bound_targets=frozenset(lower_bound_targets),
            cover_constraints=tuple(cover_constraints),
            sum_constraints=tuple(
                SumConstraint(frozenset(subset), Fraction(coeff))
                for subset, coeff in sum_constraints
            ),
        )


@dataclass(frozen=True)
class DecompositionWitness:
    """A certified splitting ``eta + zeta = power * mu`` with
    ``eta in S(1)`` and ``zeta in S(-1)``."""

    eta: LatticePoint
    zeta: LatticePoint
    power: int = 1


# ---------------------------------------------------------------------------
# compiled view: plain index arrays for the inner loops
# ---------------------------------------------------------------------------


class _Compiled:
    __slots__ = (
        "ground", "index", "targets", "covers", "deg_covers", "sums", "system",
        "lb_memo",
    )

    def __init__(self, system: ShiftedSystem):
        self.lb_memo: dict[int, list[Optional[int]]] = {}
        self.system = system
        self.ground = system.ground
        self.index = {x: i for i, x in enumerate(system.ground)}
        self.targets = tuple(sorted(self.index[x] for x in system.lower_bound_targets))
        covers = []
        deg_covers = []
        for lo, up in system.cover_constraints:
            if lo is DEGREE:
                deg_covers.append(self.index[up])
            else:
                covers.append((self.index[lo], self.index[up]))
        self.covers = tuple(covers)
        self.deg_covers = tuple(deg_covers)  # nu(-inf) >= nu[i] + n
        self.sums = tuple(
            (
                tuple(sorted(self.index[x] for x in sc.subset)),
                sc.coefficient.numerator,
                sc.coefficient.denominator,
            )
            for sc in system.sum_constraints
        )


@functools.lru_cache(maxsize=512)
def _compile(system: ShiftedSystem) -> _Compiled:
    return _Compiled(system)


def _member_vec(comp: _Compiled, shift: int, vec: Sequence[int], degree: int) -> bool:
    """Boolean membership on raw vectors; the hot path of the searches."""
    if not comp.ground:
        return degree >= 0
    for i in comp.targets:
        if vec[i] < shift:
            return False
    for lo, up in comp.covers:
        if vec[lo] < vec[up] + shift:
            return False
    for up in comp.deg_covers:
        if degree < vec[up] + shift:
            return False
    for members, p, q in comp.sums:
        total = 0
        for i in members:
            total += vec[i]
        if q * (total + shift) > p * degree:
            return False
    return True


def _vec(comp: _Compiled, point: LatticePoint) -> list[int]:
    dom = point.domain()
    ground = frozenset(comp.ground)
    if dom != ground:
        raise DomainMismatchError(missing=ground - dom, extra=dom - ground)
    d = point.as_dict()
    return [d[x] for x in comp.ground]


def _violation_vec(comp: _Compiled, shift: int, vec: Sequence[int], degree: int) -> Optional[str]:
    """Description of the first violated constraint, or None."""
    if not comp.ground:
        if degree < 0:
            return f"degree {degree} < 0 (empty ground convention)"
        return None
    for i in comp.targets:
        if vec[i] < shift:
            return f"lower bound: value({comp.ground[i]}) = {vec[i]} < {shift}"
    for lo, up in comp.covers:
        if vec[lo] < vec[up] + shift:
            return (
                f"cover: value({comp.ground[lo]}) = {vec[lo]} < "
                f"value({comp.ground[up]}) + {shift} = {vec[up] + shift}"
            )
    for up in comp.deg_covers:
        if degree < vec[up] + shift:
            return (
                f"cover: degree = {degree} < "
                f"value({comp.ground[up]}) + {shift} = {vec[up] + shift}"
            )
    for members, p, q in comp.sums:
        total = sum(vec[i] for i in members)
        if q * (total + shift) > p * degree:
            names = ",".join(comp.ground[i] for i in members)
            return (
                f"sum: ({names}) total {total} + {shift} exceeds "
                f"{Fraction(p, q)} * degree {degree}"
            )
    return None


def violated_constraint(system: ShiftedSystem, shift: int, point: LatticePoint) -> Optional[str]:
    """Return a description of a violated constraint, or None for members."""
    comp = _compile(system)
    return _violation_vec(comp, shift, _vec(comp, point), point.degree)


def check_membership(system: ShiftedSystem, shift: int, point: LatticePoint) -> bool:
    """Exact membership test of ``point`` in ``S(shift)``."""
    comp = _compile(system)
    return _member_vec(comp, shift, _vec(comp, point), point.degree)


def require_membership(system: ShiftedSystem, shift: int, point: LatticePoint) -> None:
    bad = violated_constraint(system, shift, point)
    if bad is not None:
        raise MembershipError(shift, bad)


# ---------------------------------------------------------------------------
# lower-bound propagation along covers (degree-independent)
# ---------------------------------------------------------------------------


def _value_lower_bounds(comp: _Compiled, shift: int) -> list[Optional[int]]:
    """Pointwise-minimal values over ``S(shift)``, ignoring the degree.

    ``None`` marks a coordinate with no finite lower bound.  Propagation is
    Bellman-Ford style over the cover constraints; a cover cycle that keeps
    raising bounds (possible only for positive shift) is rejected.
    """
    memo = comp.lb_memo.get(shift)
    if memo is not None:
        return memo
    n = len(comp.ground)
    lb: list[Optional[int]] = [None] * n
    for i in comp.targets:
        lb[i] = shift
    for _ in range(n):
        changed = False
        for lo, up in comp.covers:
            if lb[up] is not None:
                cand = lb[up] + shift
                if lb[lo] is None or cand > lb[lo]:
                    lb[lo] = cand
                    changed = True
        if not changed:
            break
    else:
        for lo, up in comp.covers:
            if lb[up] is not None and (lb[lo] is None or lb[up] + shift > lb[lo]):
                raise InvalidSystemError("cover constraints contain a cycle")
    comp.lb_memo[shift] = lb
    return lb


def min_feasible_degree(system: ShiftedSystem, shift: int) -> int:
    """Minimum of ``nu(-inf)`` over all members of ``S(shift)``.

    Computed by longest-chain propagation over the cover constraints combined
    with the ceiling bounds of the sum constraints; the propagated
    pointwise-minimal point attains the returned degree, so the value is
    exact.
    """
    comp = _compile(system)
    if not comp.ground:
        return 0
    lb = _value_lower_bounds(comp, shift)

    def need(i: int) -> int:
        v = lb[i]
        if v is None:
            raise UnboundedEnumerationError(
                f"element {comp.ground[i]!r} has no value lower bound at shift {shift}"
            )
        return v

    bounds = []
    for up in comp.deg_covers:
        bounds.append(need(up) + shift)
    for members, p, q in comp.sums:
        total = sum(need(i) for i in members)
        bounds.append(_ceil_div(q * (total + shift), p))
    if not bounds:
        raise UnboundedEnumerationError("no constraint bounds the degree from below")
    return max(bounds)


# ---------------------------------------------------------------------------
# bounded enumeration
# ---------------------------------------------------------------------------


def enumerate_points(system: ShiftedSystem, shift: int, degree: int) -> list[LatticePoint]:
    """All members of ``S(shift)`` at exactly the given degree, in
    lexicographic order of the value vector (ground order).

    Raises :class:`UnboundedEnumerationError` when some coordinate has no
    finite box at this degree (the member set would be infinite).
    """
    comp = _compile(system)
    n = len(comp.ground)
    if n == 0:
        return [LatticePoint((), degree)] if degree >= 0 else []

    lb = _value_lower_bounds(comp, shift)
    for i, v in enumerate(lb):
        if v is None:
            raise UnboundedEnumerationError(
                f"unbounded enumeration: element {comp.ground[i]!r} has no lower bound"
            )

    ub: list[Optional[int]] = [None] * n
    for up in comp.deg_covers:
        cand = degree - shift
        if ub[up] is None or cand < ub[up]:
            ub[up] = cand
    for _ in range(n):
        changed = False
        for lo, up in comp.covers:
            if ub[lo] is not None:
                cand = ub[lo] - shift
                if ub[up] is None or cand < ub[up]:
                    ub[up] = cand
                    changed = True
        if not changed:
            break
    for members, p, q in comp.sums:
        rest = {i: sum(lb[j] for j in members if j != i) for i in members}
        for i in members:
            cand = _floor_div(p * degree - q * (shift + rest[i]), q)
            if ub[i] is None or cand < ub[i]:
                ub[i] = cand
    for i, v in enumerate(ub):
        if v is None:
            raise UnboundedEnumerationError(
                f"unbounded enumeration: element {comp.ground[i]!r} has no upper "
                f"bound at degree {degree}"
            )

    covers_lower_of = [[] for _ in range(n)]  # partner already assigned, bounds below
    covers_upper_of = [[] for _ in range(n)]
    for lo, up in comp.covers:
        if lo == up:
            continue  # degenerate self-cover; the leaf check decides
        if up < lo:
            covers_lower_of[lo].append(up)  # vec[lo] >= vec[up] + shift, up known first
        else:
            covers_upper_of[up].append(lo)  # vec[up] <= vec[lo] - shift, lo known first
    sums_of = [[] for _ in range(n)]
    for members, p, q in comp.sums:
        for i in members:
            sums_of[i].append((members, p, q))

    out: list[LatticePoint] = []
    vals = [0] * n

    def extend(i: int) -> None:
        if i == n:
            if _member_vec(comp, shift, vals, degree):
                out.append(LatticePoint.of(dict(zip(comp.ground, vals)), degree))
            return
        lo_i, hi_i = lb[i], ub[i]
        for up in covers_lower_of[i]:
            lo_i = max(lo_i, vals[up] + shift)
        for lo in covers_upper_of[i]:
            hi_i = min(hi_i, vals[lo] - shift)
        for members, p, q in sums_of[i]:
            partial = 0
            rest_min = 0
            for j in members:
                if j == i:
                    continue
                if j < i:
                    partial += vals[j]
                else:
                    rest_min += lb[j]
            hi_i = min(hi_i, _floor_div(p * degree - q * (shift + partial + rest_min), q))
        for v in range(lo_i, hi_i + 1):
            vals[i] = v
            extend(i + 1)

    extend(0)
    return out


# ---------------------------------------------------------------------------
# trace-membership search: mu = eta + zeta
# ---------------------------------------------------------------------------


def search_box(system: ShiftedSystem, mu: LatticePoint) -> dict[ElementId, tuple[int, int]]:
    """Per-element value box for the ``eta`` side of a decomposition of mu.

    ``eta(x)`` must be at least the pointwise minimum of ``S(1)`` and at most
    ``mu(x)`` minus the pointwise minimum of ``S(-1)``; for clique systems
    this is exactly ``[1, mu(x)+1]``.  An empty box proves there is no
    decomposition.
    """
    comp = _compile(system)
    mu_vec = _vec(comp, mu)
    lo, hi = _search_box_vec(comp, mu_vec)
    return {x: (lo[i], hi[i]) for i, x in enumerate(comp.ground)}


def _search_box_vec(comp: _Compiled, mu_vec: Sequence[int]) -> tuple[list[int], list[int]]:
    lb1 = _value_lower_bounds(comp, 1)
    lbm1 = _value_lower_bounds(comp, -1)
    lo, hi = [], []
    for i in range(len(comp.ground)):
        if lb1[i] is None or lbm1[i] is None:
            raise UnboundedEnumerationError(
                f"decomposition box unbounded for element {comp.ground[i]!r}"
            )
        lo.append(lb1[i])
        hi.append(mu_vec[i] - lbm1[i])
    return lo, hi


def _eta_degree_window(
    comp: _Compiled, mu_deg: int, eta_vals: Sequence[int], zeta_vals: Sequence[int]
) -> tuple[int, int]:
    """Feasible interval for ``eta(-inf)`` given full value vectors.

    The lower end collects the shift-(+1) constraints on eta, the upper end
    the shift-(-1) constraints on zeta (via ``zeta(-inf) = mu(-inf) - d``).
    When no constraint touches the degree the conventional floor 0 applies.
    """
    lo_parts = [eta_vals[up] + 1 for up in comp.deg_covers]
    zlo_parts = [zeta_vals[up] - 1 for up in comp.deg_covers]
    for members, p, q in comp.sums:
        lo_parts.append(_ceil_div(q * (sum(eta_vals[i] for i in members) + 1), p))
        zlo_parts.append(_ceil_div(q * (sum(zeta_vals[i] for i in members) - 1), p))
    lo = max(lo_parts) if lo_parts else 0
    zlo = max(zlo_parts) if zlo_parts else 0
    return lo, mu_deg - zlo


def search_degree_window(system: ShiftedSystem, mu: LatticePoint) -> tuple[int, int]:
    """Necessary interval for ``eta(-inf)`` over the whole search box.

    Derived by evaluating the degree bounds of both shifts at the box
    extremes; every feasible decomposition has its eta-degree inside the
    returned (possibly empty) interval.
    """
    comp = _compile(system)
    mu_vec = _vec(comp, mu)
    lo, hi = _search_box_vec(comp, mu_vec)
    zeta_min = [mu_vec[i] - hi[i] for i in range(len(lo))]  # = lbm1
    return _eta_degree_window(comp, mu.degree, lo, zeta_min)


def forced_value_ranges(
    system: ShiftedSystem, mu: LatticePoint, degree: int
) -> tuple[dict[ElementId, tuple[int, int]], bool]:
    """Fixpoint interval narrowing for eta at a fixed eta-degree.

    Repeatedly tightens each coordinate's interval against the cover and sum
    constraints of both shifts until stable or empty.  Returns the narrowed
    ranges (an entry may be empty, ``lo > hi``) and a feasibility flag; a
    False flag is a proof that no decomposition with this eta-degree exists.
    """
    comp = _compile(system)
    mu_vec = _vec(comp, mu)
    lo, hi = _search_box_vec(comp, mu_vec)
    n = len(comp.ground)
    dz = mu.degree - degree
    for up in comp.deg_covers:
        hi[up] = min(hi[up], degree - 1)
        lo[up] = max(lo[up], mu_vec[up] - dz - 1)

    feasible = True
    changed = True

    def narrow(i: int, new_lo: int, new_hi: int) -> bool:
        nonlocal changed, feasible
        if new_lo > lo[i] or new_hi < hi[i]:
            lo[i] = max(lo[i], new_lo)
            hi[i] = min(hi[i], new_hi)
            changed = True
            if lo[i] > hi[i]:
                feasible = False  # freeze at the first contradiction
        return feasible

    while changed and feasible:
        changed = False
        for x, y in comp.covers:
            # eta(x) >= eta(y)+1, zeta(x) >= zeta(y)-1
            if not narrow(x, lo[y] + 1, mu_vec[x] - mu_vec[y] + hi[y] + 1):
                break
            if not narrow(y, mu_vec[y] - mu_vec[x] + lo[x] - 1, hi[x] - 1):
                break
        for members, p, q in comp.sums:
            if not feasible:
                break
            lo_sum = sum(lo[i] for i in members)
            for i in members:
                new_hi = _floor_div(p * degree - q * (1 + lo_sum - lo[i]), q)
                zrest = sum(mu_vec[j] - hi[j] for j in members if j != i)
                new_lo = mu_vec[i] - _floor_div(p * dz - q * (zrest - 1), q)
                if not narrow(i, new_lo, new_hi):
                    break
    if feasible and n > 0:
        # all ranges nonempty; a fully forced assignment must still pass both shifts
        if all(lo[i] == hi[i] for i in range(n)):
            zeta = [mu_vec[i] - lo[i] for i in range(n)]
            feasible = _member_vec(comp, 1, lo, degree) and _member_vec(
                comp, -1, zeta, dz
            )
    ranges = {x: (lo[i], hi[i]) for i, x in enumerate(comp.ground)}
    return ranges, feasible


def decompose(
    system: ShiftedSystem,
    mu: LatticePoint,
    *,
    use_oracle: bool = False,
    validate: bool = True,
) -> Optional[DecompositionWitness]:
    """Search for ``eta in S(1)``, ``zeta in S(-1)`` with ``eta + zeta = mu``.

    ``mu`` must be a shift-0 member (checked unless ``validate`` is False;
    violations raise :class:`MembershipError` carrying the failed
    constraint).  The search is exhaustive over the finite value box of
    :func:`search_box`, with ``eta(-inf)`` ranging over the interval forced
    by the degree constraints of both shifts.  The witness returned is the
    lexicographically smallest feasible eta (value vector in ground order,
    then degree), so the result is deterministic.

    ``use_oracle`` switches to the plain full-box enumeration oracle, which
    decides each candidate by two direct membership checks; it visits
    candidates in the same canonical order and therefore returns the same
    witness.  Returns None when no decomposition exists.
    """
    if validate:
        require_membership(system, 0, mu)
    comp = _compile(system)
    n = len(comp.ground)
    if n == 0:
        return DecompositionWitness(LatticePoint((), 0), LatticePoint((), mu.degree))
    mu_vec = _vec(comp, mu)
    box_lo, box_hi = _search_box_vec(comp, mu_vec)
    if any(box_lo[i] > box_hi[i] for i in range(n)):
        return None
    zeta_min = [mu_vec[i] - box_hi[i] for i in range(n)]
    d_lo, d_hi = _eta_degree_window(comp, mu.degree, box_lo, zeta_min)
    if d_lo > d_hi:
        return None

    if use_oracle:
        found = _decompose_oracle(comp, mu_vec, mu.degree, box_lo, box_hi, d_lo, d_hi)
    else:
        found = _decompose_dfs(comp, mu_vec, mu.degree, box_lo, box_hi, d_lo, d_hi)
    if found is None:
        return None
    eta_vals, d = found
    eta = LatticePoint.of(dict(zip(comp.ground, eta_vals)), d)
    zeta = mu - eta
    return DecompositionWitness(eta, zeta)


def _decompose_oracle(comp, mu_vec, mu_deg, box_lo, box_hi, d_lo, d_hi):
    """Plain full-box enumeration: try every candidate in canonical order."""
    n = len(comp.ground)
    for eta_vals in itertools.product(*(range(box_lo[i], box_hi[i] + 1) for i in range(n))):
        zeta_vals = [mu_vec[i] - eta_vals[i] for i in range(n)]
        for d in range(d_lo, d_hi + 1):
            if _member_vec(comp, 1, eta_vals, d) and _member_vec(
                comp, -1, zeta_vals, mu_deg - d
            ):
                return list(eta_vals), d
    return None


def _decompose_dfs(comp, mu_vec, mu_deg, box_lo, box_hi, d_lo, d_hi):
    """Depth-first assignment in ground order with interval pruning."""
    n = len(comp.ground)

    covers_lower_of = [[] for _ in range(n)]
    covers_upper_of = [[] for _ in range(n)]
    for lo, up in comp.covers:
        if lo == up:
            continue  # degenerate self-cover; the leaf check decides
        if up < lo:
            covers_lower_of[lo].append(up)
        else:
            covers_upper_of[up].append(lo)

    # fold the degree-window extremes into the per-element boxes via -inf covers
    box_lo = list(box_lo)
    box_hi = list(box_hi)
    for up in comp.deg_covers:
        box_hi[up] = min(box_hi[up], d_hi - 1)
        box_lo[up] = max(box_lo[up], mu_vec[up] - (mu_deg - d_lo) - 1)

    eta = [0] * n

    def prefix_window(k: int) -> tuple[int, int]:
        """Optimistic degree window after the first k coordinates are set."""

        def eta_at_least(i: int) -> int:
            return eta[i] if i < k else box_lo[i]

        def zeta_at_least(i: int) -> int:
            return (mu_vec[i] - eta[i]) if i < k else (mu_vec[i] - box_hi[i])

        lo_parts = [eta_at_least(up) + 1 for up in comp.deg_covers]
        zlo_parts = [zeta_at_least(up) - 1 for up in comp.deg_covers]
        for members, p, q in comp.sums:
            lo_parts.append(_ceil_div(q * (sum(eta_at_least(i) for i in members) + 1), p))
            zlo_parts.append(_ceil_div(q * (sum(zeta_at_least(i) for i in members) - 1), p))
        lo = max(lo_parts) if lo_parts else 0
        zlo = max(zlo_parts) if zlo_parts else 0
        return lo, mu_deg - zlo

    def extend(i: int):
        if i == n:
            lo, hi = prefix_window(n)
            lo, hi = max(lo, d_lo), min(hi, d_hi)
            if lo > hi:
                return None
            zeta_vals = [mu_vec[j] - eta[j] for j in range(n)]
            if not _member_vec(comp, 1, eta, lo):
                return None
            if not _member_vec(comp, -1, zeta_vals, mu_deg - lo):
                return None
            return list(eta), lo
        lo_i, hi_i = box_lo[i], box_hi[i]
        for up in covers_lower_of[i]:
            # eta(i) >= eta(up)+1; zeta(i) >= zeta(up)-1
            lo_i = max(lo_i, eta[up] + 1)
            hi_i = min(hi_i, mu_vec[i] - mu_vec[up] + eta[up] + 1)
        for lo_p in covers_upper_of[i]:
            hi_i = min(hi_i, eta[lo_p] - 1)
            lo_i = max(lo_i, mu_vec[i] - mu_vec[lo_p] + eta[lo_p] - 1)
        for v in range(lo_i, hi_i + 1):
            eta[i] = v
            wlo, whi = prefix_window(i + 1)
            if max(wlo, d_lo) <= min(whi, d_hi):
                res = extend(i + 1)
                if res is not None:
                    return res
        return None

    return extend(0)


def validate_witness(
    system: ShiftedSystem, mu: LatticePoint, witness: DecompositionWitness
) -> bool:
    """Re-validate a decomposition witness from scratch."""
    if witness.power < 1:
        return False
    if witness.eta + witness.zeta != witness.power * mu:
        return False
    return check_membership(system, 1, witness.eta) and check_membership(
        system, -1, witness.zeta
    )


def radical_power_search(
    system: ShiftedSystem,
    mu: LatticePoint,
    k_max: int,
    *,
    use_oracle: bool = False,
) -> Optional[DecompositionWitness]:
    """Smallest ``k <= k_max`` such that ``k * mu`` decomposes, with witness.

    A success certifies that the monomial of ``mu`` lies in the radical of
    the trace; None only means no power up to ``k_max`` worked, so callers
    must report the bound (semidecision).
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    require_membership(system, 0, mu)
    for k in range(1, k_max + 1):
        # k*mu is a shift-0 member whenever mu is: all constraints are
        # homogeneous at shift 0, so re-validation is skipped.
        w = decompose(system, mu.scale(k), use_oracle=use_oracle, validate=False)
        if w is not None:
            return DecompositionWitness(w.eta, w.zeta, power=k)
    return None
