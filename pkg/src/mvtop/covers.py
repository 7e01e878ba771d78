"""Covers, additive covers, compactness, exact cover solvers, and term machinery.

Additive covers are finite multisets of fuzzy sets whose truncated sum is the
unit set.  Over a finite chain a multiplicity beyond the chain resolution n
never helps (scalar multiples saturate), which bounds every search to
multiplicity vectors in 0..n and is the key solver decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from .core import FuzzyFamily, FuzzySet, is_ideal, mv_preimage
from .errors import InputError, PreconditionError, ResourceLimitError

if TYPE_CHECKING:  # pragma: no cover - type-only imports, avoids an import cycle
    from .product import ProductSpace
    from .topology import Topology

DEFAULT_MAX_NODES = 1_000_000


@dataclass(frozen=True)
class CoverCertificate:
    """A multiset of fuzzy sets, as (member, multiplicity) entries in canonical order."""

    entries: tuple[tuple[FuzzySet, int], ...]

    def __post_init__(self):
        if not self.entries:
            raise InputError("a certificate needs at least one entry")
        first = self.entries[0][0]
        seen = set()
        for member, mult in self.entries:
            if member.carrier != first.carrier or member.chain != first.chain:
                raise InputError("certificate entries live on different carriers or chains")
            if not isinstance(mult, int) or isinstance(mult, bool) or mult < 1:
                raise InputError(f"multiplicity must be an integer >= 1, got {mult!r}")
            if member.values in seen:
                raise InputError("certificate entries must have distinct members")
            seen.add(member.values)
        object.__setattr__(
            self, "entries", tuple(sorted(self.entries, key=lambda e: e[0].values))
        )

    @property
    def carrier(self):
        return self.entries[0][0].carrier

    @property
    def chain(self):
        return self.entries[0][0].chain

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.entries)

    def combined(self) -> FuzzySet:
        """Truncated sum of all entries with their multiplicities."""
        n = self.chain.n
        acc = [0] * self.carrier.size
        for member, mult in self.entries:
            for i, v in enumerate(member.values):
                acc[i] += mult * v
        return FuzzySet(self.carrier, self.chain, tuple(min(n, a) for a in acc))


def is_cover(family: FuzzyFamily) -> bool:
    """True iff the join of the family is the unit set."""
    return family.join().is_one


def is_additive_cover(certificate: CoverCertificate) -> bool:
    return certificate.combined().is_one


def has_additive_subcover(family: FuzzyFamily) -> bool:
    """Finite-model criterion: a certificate exists iff the supports cover the carrier."""
    covered: set[int] = set()
    for m in family.members:
        covered |= m.support()
    return len(covered) == family.carrier.size


def find_additive_subcover(
    family: FuzzyFamily, *, minimize: bool = True
) -> CoverCertificate | None:
    """A certificate drawn from the family, or None when none exists.

    Built greedily point by point (largest value first, canonical order on
    ties), then multiplicities are lowered entry by entry while the sum stays
    at the unit set.
    """
    if not has_additive_subcover(family):
        return None
    n = family.chain.n
    members = family.members
    size = family.carrier.size
    mults: dict[int, int] = {}

    def raw_sum() -> list[int]:
        acc = [0] * size
        for idx, mult in mults.items():
            for i, v in enumerate(members[idx].values):
                acc[i] += mult * v
        return acc

    for x in range(size):
        if raw_sum()[x] >= n:
            continue
        best = max(
            (idx for idx in range(len(members)) if members[idx].values[x] > 0),
            key=lambda idx: (members[idx].values[x], -idx),
        )
        needed = -(-n // members[best].values[x])  # ceil division
        mults[best] = max(mults.get(best, 0), needed)

    if minimize:
        for idx in sorted(mults):
            current = mults[idx]
            for lower in range(0, current):
                trial = dict(mults)
                if lower == 0:
                    del trial[idx]
                else:
                    trial[idx] = lower
                acc = [0] * size
                for i2, mult in trial.items():
                    for i, v in enumerate(members[i2].values):
                        acc[i] += mult * v
                if all(a >= n for a in acc):
                    if lower == 0:
                        del mults[idx]
                    else:
                        mults[idx] = lower
                    break

    certificate = CoverCertificate(
        tuple((members[idx], mult) for idx, mult in sorted(mults.items()))
    )
    assert is_additive_cover(certificate)
    return certificate


def is_compact(topology: "Topology") -> bool:
    """Decide compactness via the finite-model criterion.

    Every open cover attains the top value at each point, so its supports
    cover the carrier and the criterion yields an additive subcover; every
    finite space over a finite chain is therefore compact.  The brute-force
    cross-check lives in the oracles module.
    """
    return has_additive_subcover(topology.opens)


def is_strongly_compact(topology: "Topology") -> bool:
    """Every open cover of a finite space is itself a finite subcover."""
    return is_cover(topology.opens)


# -- exact solvers ---------------------------------------------------------------


@dataclass(frozen=True)
class AdditiveCoverSearch:
    certificate: CoverCertificate | None
    nodes: int


def minimal_additive_cover_search(
    family: FuzzyFamily, *, max_nodes: int = DEFAULT_MAX_NODES
) -> AdditiveCoverSearch:
    """Minimize total multiplicity subject to reaching the top value everywhere.

    Depth-first branch and bound over the members in canonical order, trying
    multiplicities in increasing order, pruned by an admissible per-point
    bound; the greedy certificate supplies the initial upper bound.  The first
    optimum found is then exactly the canonical tie-break: least total, then
    lexicographically least multiplicity vector.
    """
    members = family.members
    k = len(members)
    n = family.chain.n
    size = family.carrier.size
    if not has_additive_subcover(family):
        return AdditiveCoverSearch(None, 0)

    greedy = find_additive_subcover(family)
    assert greedy is not None
    # suffix_max[idx][x]: largest value at x among members[idx:]
    suffix_max = [[0] * size for _ in range(k + 1)]
    for idx in range(k - 1, -1, -1):
        for x in range(size):
            suffix_max[idx][x] = max(suffix_max[idx + 1][x], members[idx].values[x])

    best_vector: list[int] | None = None
    bound = greedy.total_multiplicity + 1
    nodes = 0
    residual_start = [n] * size

    def lower_bound(idx: int, residual: Sequence[int]) -> int | None:
        worst = 0
        row = suffix_max[idx]
        for x in range(size):
            r = residual[x]
            if r > 0:
                m = row[x]
                if m == 0:
                    return None
                need = -(-r // m)
                if need > worst:
                    worst = need
        return worst

    def descend(idx: int, total: int, residual: list[int], chosen: list[int]) -> None:
        nonlocal nodes, bound, best_vector
        nodes += 1
        if nodes > max_nodes:
            raise ResourceLimitError(
                "additive-cover search exceeded the node cap",
                limit=max_nodes,
                reached=nodes,
            )
        lb = lower_bound(idx, residual)
        if lb is None or total + lb >= bound:
            return
        if lb == 0:
            # the all-zero continuation is the lexicographically least completion
            best_vector = chosen + [0] * (k - idx)
            bound = total
            return
        if idx == k:
            return
        vals = members[idx].values
        for m in range(0, n + 1):
            nxt = [r - m * v for r, v in zip(residual, vals)] if m else residual
            descend(idx + 1, total + m, list(nxt), chosen + [m])

    descend(0, 0, residual_start, [])
    assert best_vector is not None
    certificate = CoverCertificate(
        tuple((members[i], m) for i, m in enumerate(best_vector) if m > 0)
    )
    assert is_additive_cover(certificate)
    return AdditiveCoverSearch(certificate, nodes)


def minimal_additive_cover(
    family: FuzzyFamily, *, max_nodes: int = DEFAULT_MAX_NODES
) -> CoverCertificate | None:
    return minimal_additive_cover_search(family, max_nodes=max_nodes).certificate


@dataclass(frozen=True)
class SubcoverSearch:
    subcover: FuzzyFamily | None
    nodes: int


def minimal_subcover_search(
    family: FuzzyFamily, *, max_nodes: int = DEFAULT_MAX_NODES
) -> SubcoverSearch:
    """Smallest subfamily whose join is the unit set.

    A subfamily covers iff every point sees the top value in some member, so
    this is exact set cover over the full-value sets.  Include-first DFS in
    canonical order returns, among the minimum-size covers, the one whose
    member index tuple is lexicographically least.
    """
    members = family.members
    k = len(members)
    n = family.chain.n
    size = family.carrier.size
    full_sets = [frozenset(x for x in range(size) if m.values[x] == n) for m in members]
    if set().union(*full_sets, set()) != set(range(size)):
        return SubcoverSearch(None, 0)

    # greedy upper bound: most new points covered, canonical order on ties
    uncovered = set(range(size))
    greedy_size = 0
    while uncovered:
        best = max(range(k), key=lambda i: (len(full_sets[i] & uncovered), -i))
        uncovered -= full_sets[best]
        greedy_size += 1

    suffix_best = [0] * (k + 1)
    for idx in range(k - 1, -1, -1):
        suffix_best[idx] = max(suffix_best[idx + 1], len(full_sets[idx]))

    best_choice: tuple[int, ...] | None = None
    bound = greedy_size + 1
    nodes = 0

    def coverable(idx: int, missing: frozenset[int]) -> bool:
        rest = set()
        for i in range(idx, k):
            rest |= full_sets[i]
        return missing <= rest

    def descend(idx: int, chosen: tuple[int, ...], missing: frozenset[int]) -> None:
        nonlocal nodes, bound, best_choice
        nodes += 1
        if nodes > max_nodes:
            raise ResourceLimitError(
                "subcover search exceeded the node cap", limit=max_nodes, reached=nodes
            )
        if not missing:
            best_choice = chosen
            bound = len(chosen)
            return
        if idx == k or not coverable(idx, missing):
            return
        lb = -(-len(missing) // max(suffix_best[idx], 1))
        if len(chosen) + lb >= bound:
            return
        descend(idx + 1, chosen + (idx,), missing - full_sets[idx])
        descend(idx + 1, chosen, missing)

    descend(0, (), frozenset(range(size)))
    assert best_choice is not None
    subfamily = FuzzyFamily.of(
        family.carrier, family.chain, (members[i] for i in best_choice)
    )
    assert is_cover(subfamily)
    return SubcoverSearch(subfamily, nodes)


def minimal_subcover(
    family: FuzzyFamily, *, max_nodes: int = DEFAULT_MAX_NODES
) -> FuzzyFamily | None:
    return minimal_subcover_search(family, max_nodes=max_nodes).subcover


# -- subbasic covers of product spaces ---------------------------------------------


@dataclass(frozen=True)
class ProductSubcover:
    """An additive cover of a product carrier drawn from one factor's opens."""

    factor_index: int
    certificate: CoverCertificate


def product_subbasic_subcover(
    space: "ProductSpace", entries: Sequence[tuple[int, FuzzySet]]
) -> ProductSubcover:
    """Constructive extraction of an additive cover from a subbasic cover.

    Scans the factors in order for one whose listed opens have supports
    covering that factor; for each of its points takes the canonically first
    open positive there with the least multiplicity reaching the top value,
    and pulls the compressed multiset back along the projection.  When no
    factor qualifies the input was not a cover, and the witness point with all
    listed opens vanishing is reported.
    """
    factors = space.factors
    per_factor: list[list[FuzzySet]] = [[] for _ in factors]
    for i, alpha in entries:
        if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < len(factors):
            raise InputError(f"{i!r} is not a valid factor index")
        if alpha not in factors[i].opens:
            raise InputError("each listed set must be an open of its factor")
        per_factor[i].append(alpha)

    n = space.chain.n
    chosen_factor = None
    for j, factor in enumerate(factors):
        covered: set[int] = set()
        for alpha in per_factor[j]:
            covered |= alpha.support()
        if len(covered) == factor.carrier.size:
            chosen_factor = j
            break

    if chosen_factor is None:
        coords = []
        for j, factor in enumerate(factors):
            covered = set()
            for alpha in per_factor[j]:
                covered |= alpha.support()
            missing = min(set(range(factor.carrier.size)) - covered)
            coords.append(factor.carrier.label(missing))
        witness = "(" + ",".join(coords) + ")"
        raise PreconditionError(
            f"the listed sets do not cover the product: every listed open vanishes at {witness}"
        )

    j = chosen_factor
    factor = factors[j]
    listed = sorted(set(per_factor[j]), key=lambda a: a.values)
    mults: dict[FuzzySet, int] = {}
    for x in range(factor.carrier.size):
        pick = next(a for a in listed if a.values[x] > 0)
        needed = -(-n // pick.values[x])
        mults[pick] = max(mults.get(pick, 0), needed)

    projection = space.projections[j]
    certificate = CoverCertificate(
        tuple((mv_preimage(projection, a), m) for a, m in mults.items())
    )
    assert is_additive_cover(certificate)
    return ProductSubcover(j, certificate)


# -- terms over {oplus, odot, meet} -------------------------------------------------

OPLUS = "oplus"
ODOT = "odot"
MEET = "meet"
VAR = "var"
_BINARY = (OPLUS, ODOT, MEET)


@dataclass(frozen=True)
class Term:
    """An expression tree with binary oplus/odot/meet nodes and variable leaves."""

    op: str
    index: int | None = None
    left: "Term | None" = None
    right: "Term | None" = None

    def __post_init__(self):
        if self.op == VAR:
            if self.index is None or self.index < 0 or self.left or self.right:
                raise InputError("a variable leaf needs a nonnegative index and no children")
        elif self.op in _BINARY:
            if self.left is None or self.right is None or self.index is not None:
                raise InputError(f"a {self.op} node needs exactly two children")
        else:
            raise InputError(f"unknown term operation {self.op!r}")

    @classmethod
    def var(cls, index: int) -> "Term":
        return cls(VAR, index=index)

    @classmethod
    def oplus(cls, left: "Term", right: "Term") -> "Term":
        return cls(OPLUS, left=left, right=right)

    @classmethod
    def odot(cls, left: "Term", right: "Term") -> "Term":
        return cls(ODOT, left=left, right=right)

    @classmethod
    def meet(cls, left: "Term", right: "Term") -> "Term":
        return cls(MEET, left=left, right=right)

    @property
    def length(self) -> int:
        if self.op == VAR:
            return 1
        return 1 + self.left.length + self.right.length

    @property
    def arity(self) -> int:
        if self.op == VAR:
            return self.index + 1
        return max(self.left.arity, self.right.arity)

    def render(self) -> str:
        if self.op == VAR:
            return f"x{self.index}"
        return f"({self.left.render()} {self.op} {self.right.render()})"


def eval_term(term: Term, args: Sequence[FuzzySet]) -> FuzzySet:
    """Evaluate the term with the pointwise chain operations."""
    if term.arity > len(args):
        raise InputError(
            f"term uses {term.arity} variables but only {len(args)} arguments were given"
        )
    first = args[0]
    for a in args[1:]:
        first._same_space(a)

    def walk(node: Term) -> FuzzySet:
        if node.op == VAR:
            return args[node.index]
        lhs, rhs = walk(node.left), walk(node.right)
        if node.op == OPLUS:
            return lhs.oplus(rhs)
        if node.op == ODOT:
            return lhs.odot(rhs)
        return lhs.meet(rhs)

    return walk(term)


def term_witness(
    term: Term, args: Sequence[FuzzySet], point: int, family: FuzzyFamily
) -> int:
    """Descend the term to a variable that is in the family and positive at the point.

    At an oplus node both subterm values lie in the ideal (downward closure),
    so the descent follows a side positive at the point; at odot/meet nodes
    both sides are positive there and the descent follows a side whose value
    is in the family, preferring the left one.  A multiplicative node where
    neither side lies in the family is outside this operation's domain: that
    decomposition property belongs to maximal covers, not to every ideal.
    """
    if not is_ideal(family):
        raise PreconditionError("the family is not an ideal")
    value = eval_term(term, args)
    if not 0 <= point < value.carrier.size:
        raise InputError(f"{point!r} is not a valid point index")
    if value not in family:
        raise PreconditionError("the term value is not a member of the ideal")
    if value.values[point] == 0:
        raise PreconditionError("the term value vanishes at the given point")

    node = term
    while node.op != VAR:
        left_value = eval_term(node.left, args)
        right_value = eval_term(node.right, args)
        if node.op == OPLUS:
            node = node.left if left_value.values[point] > 0 else node.right
        else:
            if left_value in family:
                node = node.left
            elif right_value in family:
                node = node.right
            else:
                raise PreconditionError(
                    f"neither side of a {node.op} node lies in the ideal; "
                    "the descent needs the maximal-cover decomposition property"
                )
    j = node.index
    assert args[j] in family and args[j].values[point] > 0
    return j
