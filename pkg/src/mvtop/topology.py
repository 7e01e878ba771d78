"""MV-topologies on finite carriers: generation from subbases and decidable predicates.

Topologies are stored extensionally (the full family of opens), so every
predicate is a finite scan.  Generation is a fixpoint closure guarded by a
configurable size cap.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import covers as _covers
from .core import Carrier, Chain, FuzzyFamily, FuzzySet
from .errors import InputError, ResourceLimitError

DEFAULT_MAX_OPENS = 20_000


@dataclass(frozen=True)
class Topology:
    """A carrier together with the explicit family of its open fuzzy sets."""

    carrier: Carrier
    chain: Chain
    opens: FuzzyFamily

    def __post_init__(self):
        if self.opens.carrier != self.carrier or self.opens.chain != self.chain:
            raise InputError("opens must live on the topology's carrier and chain")

    @classmethod
    def from_opens(
        cls, carrier: Carrier, chain: Chain, opens: Iterable[FuzzySet], *, validate: bool = True
    ) -> "Topology":
        family = FuzzyFamily.of(carrier, chain, opens)
        if validate and not is_topology(family):
            raise InputError("family is not closed under the topology operations")
        return cls(carrier, chain, family)

    @property
    def zero(self) -> FuzzySet:
        return FuzzySet.zero(self.carrier, self.chain)

    @property
    def one(self) -> FuzzySet:
        return FuzzySet.one(self.carrier, self.chain)


def indiscrete(carrier: Carrier, chain: Chain) -> Topology:
    zero = FuzzySet.zero(carrier, chain)
    one = FuzzySet.one(carrier, chain)
    return Topology(carrier, chain, FuzzyFamily.of(carrier, chain, (zero, one)))


def crisp_discrete(carrier: Carrier, chain: Chain) -> Topology:
    """All crisp subsets, i.e. the classical discrete topology embedded at values {0, n}."""
    n = chain.n
    members = []
    for mask in range(1 << carrier.size):
        members.append(
            FuzzySet(carrier, chain, tuple(n if mask >> i & 1 else 0 for i in range(carrier.size)))
        )
    return Topology(carrier, chain, FuzzyFamily.of(carrier, chain, members))


def _closure(
    start: FuzzyFamily,
    ops: Sequence[Callable[[FuzzySet, FuzzySet], FuzzySet]],
    max_size: int,
    what: str,
) -> FuzzyFamily:
    """Least superset of start closed under the given commutative binary ops."""
    seen: dict[tuple[int, ...], FuzzySet] = {m.values: m for m in start}
    processed: list[FuzzySet] = []
    pending = deque(start.members)
    while pending:
        x = pending.popleft()
        processed.append(x)
        for y in processed:
            for op in ops:
                z = op(x, y)
                if z.values not in seen:
                    seen[z.values] = z
                    if len(seen) > max_size:
                        raise ResourceLimitError(
                            f"{what} closure exceeded the size cap",
                            limit=max_size,
                            reached=len(seen),
                        )
                    pending.append(z)
    return FuzzyFamily.of(start.carrier, start.chain, seen.values())


def base_from_subbase(subbase: FuzzyFamily, *, max_size: int = DEFAULT_MAX_OPENS) -> FuzzyFamily:
    """Least family containing the subbase and closed under oplus, odot, and meet."""
    ops = (FuzzySet.oplus, FuzzySet.odot, FuzzySet.meet)
    return _closure(subbase, ops, max_size, "base")


def generate_from_subbase(subbase: FuzzyFamily, *, max_size: int = DEFAULT_MAX_OPENS) -> Topology:
    """The least topology containing the subbase.

    The base closure is computed first; all joins of its subfamilies are then
    obtained as the binary-join closure (the family is finite).  Joins
    distribute over the base operations pointwise, so no further alternation
    is needed.
    """
    carrier, chain = subbase.carrier, subbase.chain
    base = base_from_subbase(subbase, max_size=max_size)
    seeded = base.with_members((FuzzySet.zero(carrier, chain), FuzzySet.one(carrier, chain)))
    opens = _closure(seeded, (FuzzySet.join,), max_size, "topology")
    return Topology(carrier, chain, opens)


def topology_violation(family: FuzzyFamily) -> str | None:
    """The first failed closure condition, described, or None when the family
    satisfies all of them."""
    present = {m.values for m in family.members}
    zero = FuzzySet.zero(family.carrier, family.chain)
    one = FuzzySet.one(family.carrier, family.chain)
    if zero.values not in present:
        return "the zero set is missing"
    if one.values not in present:
        return "the unit set is missing"
    labels = (("oplus", FuzzySet.oplus), ("odot", FuzzySet.odot), ("meet", FuzzySet.meet),
              ("join", FuzzySet.join))
    members = family.members
    for i, a in enumerate(members):
        for b in members[i:]:
            for name, op in labels:
                out = op(a, b)
                if out.values not in present:
                    # binary joins decide closure under joins of arbitrary subfamilies
                    return (
                        f"not closed under {name}: {list(a.values)} with {list(b.values)} "
                        f"gives {list(out.values)}"
                    )
    return None


def is_topology(family: FuzzyFamily) -> bool:
    """Check the defining closure conditions directly on the finite family."""
    return topology_violation(family) is None


def is_base(candidate: FuzzyFamily, topology: Topology) -> bool:
    """True iff the candidate is a subfamily of the opens and every open is a
    join of the candidate members below it."""
    opens = set(topology.opens.members)
    if any(m not in opens for m in candidate.members):
        return False
    for o in topology.opens.members:
        acc = FuzzySet.zero(topology.carrier, topology.chain)
        for theta in candidate.members:
            if theta.leq(o):
                acc = acc.join(theta)
        if acc != o:
            return False
    return True


def is_subbase(
    candidate: FuzzyFamily, topology: Topology, *, max_size: int = DEFAULT_MAX_OPENS
) -> bool:
    opens = set(topology.opens.members)
    if any(m not in opens for m in candidate.members):
        return False
    return generate_from_subbase(candidate, max_size=max_size).opens == topology.opens


def is_large_subbase(family: FuzzyFamily) -> bool:
    """True iff the family contains every scalar multiple of each member.

    Multiples stabilize at the crisp support once the multiplicity reaches the
    chain resolution, so only multiplicities up to n need checking.
    """
    present = {m.values for m in family.members}
    n = family.chain.n
    for m in family.members:
        for k in range(2, n + 1):
            if m.scaled(k).values not in present:
                return False
    return True


def closed_sets(topology: Topology) -> FuzzyFamily:
    return FuzzyFamily.of(
        topology.carrier, topology.chain, (o.complement() for o in topology.opens)
    )


def clopens(topology: Topology) -> FuzzyFamily:
    closed = {c.values for c in closed_sets(topology).members}
    return FuzzyFamily.of(
        topology.carrier,
        topology.chain,
        (o for o in topology.opens if o.values in closed),
    )


def is_zero_dimensional(topology: Topology) -> bool:
    """True iff the clopen sets form a base of the topology."""
    return is_base(clopens(topology), topology)


def is_stone(topology: Topology) -> bool:
    """Compact, Hausdorff, and zero-dimensional."""
    return (
        _covers.is_compact(topology)
        and is_hausdorff(topology)
        and is_zero_dimensional(topology)
    )


@dataclass(frozen=True)
class SeparationReport:
    """Outcome of the Hausdorff check: per-pair witnesses or the failing pair."""

    hausdorff: bool
    witnesses: tuple[tuple[tuple[int, int], tuple[FuzzySet, FuzzySet]], ...] = ()
    failing_pair: tuple[int, int] | None = None


def check_hausdorff(topology: Topology) -> SeparationReport:
    """Search, per pair of distinct points, a pair of opens with full value at
    the respective point and pointwise-disjoint; the first witness pair in
    canonical order is reported."""
    n = topology.chain.n
    opens = topology.opens.members
    witnesses = []
    for x in range(topology.carrier.size):
        for y in range(x + 1, topology.carrier.size):
            found = None
            for ox in opens:
                if ox.values[x] != n:
                    continue
                for oy in opens:
                    if oy.values[y] != n:
                        continue
                    if ox.meet(oy).is_zero:
                        found = (ox, oy)
                        break
                if found:
                    break
            if found is None:
                return SeparationReport(False, tuple(witnesses), (x, y))
            witnesses.append(((x, y), found))
    return SeparationReport(True, tuple(witnesses), None)


def is_hausdorff(topology: Topology) -> bool:
    return check_hausdorff(topology).hausdorff


# -- metric-induced topologies -------------------------------------------------


@dataclass(frozen=True)
class FuzzyPoint:
    """A single-point fuzzy set, recorded as its support index and positive value."""

    support: int
    value: int


@dataclass(frozen=True)
class MetricInstance:
    """A finite metric on a carrier, with exact rational distances."""

    carrier: Carrier
    chain: Chain
    dist: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        k = self.carrier.size
        if len(self.dist) != k or any(len(row) != k for row in self.dist):
            raise InputError("distance matrix shape does not match the carrier")
        for i in range(k):
            if self.dist[i][i] != 0:
                raise InputError("distance matrix must have a zero diagonal")
            for j in range(k):
                d = self.dist[i][j]
                if d < 0:
                    raise InputError("distances must be nonnegative")
                if d != self.dist[j][i]:
                    raise InputError("distance matrix must be symmetric")
        for i in range(k):
            for j in range(k):
                for l in range(k):
                    if self.dist[i][l] > self.dist[i][j] + self.dist[j][l]:
                        raise InputError(
                            f"triangle inequality fails at points {i}, {j}, {l}"
                        )

    @classmethod
    def from_rows(
        cls, carrier: Carrier, chain: Chain, rows: Sequence[Sequence[Fraction | int]]
    ) -> "MetricInstance":
        return cls(carrier, chain, tuple(tuple(Fraction(d) for d in row) for row in rows))

    @property
    def diameter(self) -> Fraction:
        return max((d for row in self.dist for d in row), default=Fraction(0))


def open_ball(metric: MetricInstance, center: FuzzyPoint, radius: Fraction) -> FuzzySet:
    """The ball takes the center's value inside the radius and 0 at distance >= radius."""
    metric.chain.check(center.value)
    if center.value < 1:
        raise InputError("a fuzzy point must carry a positive value")
    if not 0 <= center.support < metric.carrier.size:
        raise InputError(f"{center.support!r} is not a valid point index")
    r = Fraction(radius)
    if r <= 0:
        raise InputError("ball radius must be positive")
    row = metric.dist[center.support]
    return FuzzySet(
        metric.carrier,
        metric.chain,
        tuple(center.value if row[y] < r else 0 for y in range(metric.carrier.size)),
    )


def default_centers(metric: MetricInstance) -> tuple[FuzzyPoint, ...]:
    """Every fuzzy point: each carrier point at each positive chain value."""
    return tuple(
        FuzzyPoint(x, v)
        for x in range(metric.carrier.size)
        for v in range(1, metric.chain.n + 1)
    )

def default_radii(metric: MetricInstance) -> tuple[Fraction, ...]:
    """The distinct positive pairwise distances plus one value past the diameter.

    Only finitely many balls are distinct, and these radii realize all of them.
    """
    positive = {d for row in metric.dist for d in row if d > 0}
    return tuple(sorted(positive | {metric.diameter + 1}))


def metric_ball_family(
    metric: MetricInstance,
    centers: Sequence[FuzzyPoint] | None = None,
    radii: Sequence[Fraction] | None = None,
) -> FuzzyFamily:
    if centers is None:
        centers = default_centers(metric)
    if radii is None:
        radii = default_radii(metric)
    balls = [open_ball(metric, c, r) for c in centers for r in radii]
    return FuzzyFamily.of(metric.carrier, metric.chain, balls)


def metric_induced(
    metric: MetricInstance,
    centers: Sequence[FuzzyPoint] | None = None,
    radii: Sequence[Fraction] | None = None,
    *,
    max_size: int = DEFAULT_MAX_OPENS,
) -> Topology:
    """The topology generated by the open balls of the metric."""
    return generate_from_subbase(metric_ball_family(metric, centers, radii), max_size=max_size)
