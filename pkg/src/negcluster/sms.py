"""Simple minded systems, extension closures, and torsion pairs.

A w-simple minded system is a set of rank-many admissible diagonals that
pairwise neither cross nor share endpoints.  Its extension closure is an
abelian subcategory whose simple objects are exactly the given diagonals;
we compute the indecomposables of the closure as a fixpoint, together
with a filtration record and composition-factor multiset per object.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .arquiver import enumerate_indecomposables
from .errors import NotSmsError, ParameterError, UnsupportedWeightError
from .homs import hom_dim, hom_dim_neg1, middle_term
from .polygon import (
    CategoryParams,
    Diagonal,
    crosses,
    is_admissible,
    is_normalized,
    require_admissible,
    shares_endpoint,
)


@dataclass(frozen=True)
class SimpleMindedSystem:
    simples: tuple[Diagonal, ...]
    params: CategoryParams

    def __iter__(self):
        return iter(self.simples)

    def __len__(self):
        return len(self.simples)


@dataclass
class ClosureResult:
    """Indecomposables of the extension closure of a seed collection.

    ``records`` stores, for each member found as the middle term of an
    extension with indecomposable middle, the pair (sub, quotient); seed
    members and members only reachable through decomposable middles have
    no record.  ``factors`` maps members to their composition-factor
    multiset over the seed where that multiset could be derived.
    """

    seed: tuple[Diagonal, ...]
    params: CategoryParams
    members: tuple[Diagonal, ...]
    records: dict[Diagonal, Optional[tuple[Diagonal, Diagonal]]]
    factors: dict[Diagonal, Counter]

    def depth(self, member: Diagonal) -> Optional[int]:
        """Filtration length of a member (seed objects have depth 1)."""
        f = self.factors.get(member)
        return None if f is None else sum(f.values())


def sms_violation(
    simples: Iterable[Diagonal], params: CategoryParams
) -> Optional[str]:
    """First reason the collection fails to be a simple minded system, if any."""
    diagonals = list(simples)
    if len(set(diagonals)) != len(diagonals):
        return "repeated diagonal"
    if len(diagonals) != params.rank:
        return f"expected {params.rank} diagonals, got {len(diagonals)}"
    for d in diagonals:
        if not is_normalized(d, params):
            return f"diagonal {tuple(d)} is not normalized for N={params.polygon_size}"
        if not is_admissible(d, params):
            return f"diagonal {tuple(d)} is not admissible"
    for d1, d2 in combinations(diagonals, 2):
        if shares_endpoint(d1, d2):
            return f"diagonals {tuple(d1)} and {tuple(d2)} share an endpoint"
        if crosses(d1, d2):
            return f"diagonals {tuple(d1)} and {tuple(d2)} cross"
    return None


def is_sms(simples: Iterable[Diagonal], params: CategoryParams) -> bool:
    return sms_violation(simples, params) is None


def make_sms(simples: Iterable[Diagonal], params: CategoryParams) -> SimpleMindedSystem:
    ordered = tuple(sorted(simples))
    for d in ordered:
        require_admissible(d, params)
    violation = sms_violation(ordered, params)
    if violation is not None:
        raise NotSmsError(violation, system=[list(d) for d in ordered])
    return SimpleMindedSystem(ordered, params)


def enumerate_sms(params: CategoryParams) -> list[SimpleMindedSystem]:
    """All simple minded systems, by backtracking with compatibility pruning."""
    objects = enumerate_indecomposables(params)
    systems: list[SimpleMindedSystem] = []
    chosen: list[Diagonal] = []

    def compatible(d: Diagonal) -> bool:
        return all(
            not shares_endpoint(d, c) and not crosses(d, c) for c in chosen
        )

    def extend(start: int) -> None:
        if len(chosen) == params.rank:
            systems.append(SimpleMindedSystem(tuple(chosen), params))
            return
        for i in range(start, len(objects)):
            if compatible(objects[i]):
                chosen.append(objects[i])
                extend(i + 1)
                chosen.pop()

    extend(0)
    return systems


def check_orthogonality(
    diagonals: Iterable[Diagonal], params: CategoryParams
) -> bool:
    """Endomorphisms are one-dimensional, cross Homs and negative shifts vanish.

    Checks dim Hom(s_i, s_j) = delta_ij and dim Hom(s_i, S^l s_j) = 0 for
    l in {-w+1, ..., -1}, over exactly the diagonals given.
    """
    if params.weight < 2:
        raise UnsupportedWeightError(
            "orthogonality verification requires weight >= 2",
            weight=params.weight,
        )
    diagonals = list(diagonals)
    for x in diagonals:
        for y in diagonals:
            expected = 1 if x == y else 0
            if hom_dim(x, 0, y, params) != expected:
                return False
            for shift in range(-params.weight + 1, 0):
                if hom_dim(x, shift, y, params) != 0:
                    return False
    return True


def extension_closure(
    seed: Iterable[Diagonal] | SimpleMindedSystem,
    params: Optional[CategoryParams] = None,
) -> ClosureResult:
    """Close a w-orthogonal seed under extensions between indecomposables.

    Starting from the seed, every ordered member pair (x, y) with a
    nonzero extension of y by x contributes the summands of its middle
    term; this repeats until nothing new appears.  Adding summands is
    sound because the closure is closed under direct summands.

    Members discovered through a one-summand middle get the record
    (sub=x, quotient=y) and the factor multiset factors(x) + factors(y).
    Summands of two-summand middles are added without a record; their
    factors are recovered afterwards by propagation (if the factors of
    x, y, and the sibling summand are known, the remaining multiset is
    determined).  Rediscoveries must agree with the stored multiset,
    which is the Jordan-Hoelder consistency check.
    """
    if isinstance(seed, SimpleMindedSystem):
        params = seed.params
        seed_diagonals = tuple(seed.simples)
    else:
        if params is None:
            raise ParameterError("params required when seed is a plain collection")
        seed_diagonals = tuple(sorted(set(seed)))
    if not check_orthogonality(seed_diagonals, params):
        raise NotSmsError(
            "seed collection is not orthogonal",
            system=[list(d) for d in seed_diagonals],
        )

    members: set[Diagonal] = set(seed_diagonals)
    records: dict[Diagonal, Optional[tuple[Diagonal, Diagonal]]] = {
        s: None for s in seed_diagonals
    }
    factors: dict[Diagonal, Counter] = {s: Counter([s]) for s in seed_diagonals}
    # extensions seen: (sub, quotient) -> middle summands, for factor propagation
    extensions: list[tuple[Diagonal, Diagonal, tuple[Diagonal, ...]]] = []

    changed = True
    while changed:
        changed = False
        for x in sorted(members):
            for y in sorted(members):
                if hom_dim_neg1(y, x, params) == 0:
                    continue
                summands = tuple(middle_term(y, x, params))
                if not any((x, y, summands) == e for e in extensions):
                    extensions.append((x, y, summands))
                for m in summands:
                    if m not in members:
                        members.add(m)
                        records[m] = (x, y) if len(summands) == 1 else None
                        changed = True

    _propagate_factors(factors, extensions)

    # Jordan-Hoelder consistency: every derivation yields the same multiset.
    for x, y, summands in extensions:
        known = [factors.get(m) for m in summands]
        if all(k is not None for k in known) and x in factors and y in factors:
            combined = Counter()
            for k in known:
                combined += k
            if combined != factors[x] + factors[y]:
                raise NotSmsError(
                    "inconsistent composition factors in extension closure",
                    sub=list(x),
                    quotient=list(y),
                )

    return ClosureResult(
        seed=seed_diagonals,
        params=params,
        members=tuple(sorted(members)),
        records=records,
        factors=factors,
    )


def _propagate_factors(
    factors: dict[Diagonal, Counter],
    extensions: list[tuple[Diagonal, Diagonal, tuple[Diagonal, ...]]],
) -> None:
    """Fill in factor multisets from the recorded extensions until stable."""
    changed = True
    while changed:
        changed = False
        for x, y, summands in extensions:
            if x not in factors or y not in factors:
                continue
            total = factors[x] + factors[y]
            unknown = [m for m in summands if m not in factors]
            if not unknown:
                continue
            if len(unknown) == len(summands) == 1:
                factors[unknown[0]] = total
                changed = True
            elif len(unknown) == 1:
                remainder = total.copy()
                sibling = next(m for m in summands if m in factors)
                remainder.subtract(factors[sibling])
                if all(v >= 0 for v in remainder.values()):
                    factors[unknown[0]] = +remainder
                    changed = True


def simples_of_closure(closure: ClosureResult) -> set[Diagonal]:
    """Members whose factor multiset is a singleton; equals the seed."""
    return {
        m
        for m in closure.members
        if closure.factors.get(m) == Counter([m])
    }


def sub_closure(
    closure: ClosureResult, seed_subset: Iterable[Diagonal]
) -> set[Diagonal]:
    """Members all of whose composition factors lie in the given seed subset."""
    subset = set(seed_subset)
    if not subset <= set(closure.seed):
        raise ParameterError(
            "sub-closure subset must be contained in the seed",
            subset=[list(d) for d in sorted(subset)],
        )
    return {
        m
        for m in closure.members
        if closure.factors.get(m) is not None
        and set(closure.factors[m]) <= subset
    }


@dataclass
class TorsionPair:
    torsion: set[Diagonal]        # members built from the chosen simples
    free: set[Diagonal]           # members with no maps from the torsion side
    mixed: dict[Diagonal, Optional[tuple[Diagonal, Diagonal]]]

    @property
    def unresolved(self) -> set[Diagonal]:
        return {m for m, ses in self.mixed.items() if ses is None}


def torsion_pair(
    closure: ClosureResult, seed_subset: Iterable[Diagonal]
) -> TorsionPair:
    """Split the closure along the torsion pair generated by a set of simples.

    The torsion side is the sub-closure of the subset; the free side is
    its right Hom-perpendicular among members.  Every remaining member is
    reported with a canonical sequence (torsion subobject, free quotient)
    when one is exhibited by its closure record or by a direct search;
    otherwise it is reported unresolved rather than guessed.
    """
    params = closure.params
    if params.weight < 2:
        raise UnsupportedWeightError(
            "torsion pairs require weight >= 2", weight=params.weight
        )
    torsion = sub_closure(closure, seed_subset)
    free = {
        m
        for m in closure.members
        if all(hom_dim(t, 0, m, params) == 0 for t in torsion)
    }
    mixed: dict[Diagonal, Optional[tuple[Diagonal, Diagonal]]] = {}
    for m in closure.members:
        if m in torsion or m in free:
            continue
        ses = closure.records.get(m)
        if ses is not None and ses[0] in torsion and ses[1] in free:
            mixed[m] = ses
            continue
        mixed[m] = next(
            (
                (t, f)
                for t in sorted(torsion)
                for f in sorted(free)
                if hom_dim_neg1(f, t, params) == 1
                and middle_term(f, t, params) == [m]
            ),
            None,
        )
    return TorsionPair(torsion=torsion, free=free, mixed=mixed)
