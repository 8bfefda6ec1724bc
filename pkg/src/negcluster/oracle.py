"""Independent brute-force Hom oracle built from quiver representations.

The ambient category is the orbit category of the bounded derived
category of a type-A path algebra under F = tau * S^(w+1).  None of the
polygon combinatorics enters here: Hom spaces between interval modules
are computed by solving the commuting-square linear systems, first
extensions from projective resolutions, derived Homs from heredity, and
orbit-category Homs as the (finite) sum of derived Homs along F-orbits.
The only contact with the diagonal model is a search for a
suspension-equivariant bijection validating all Hom tables at once.

Hand-checked conventions: the quiver is the linear A_e quiver with the
arrow between i and i+1 pointing from i+1 to i, so the interval module
[a, b] has [a, c] as a submodule and [c+1, b] as the matching quotient,
and the indecomposable projectives are the intervals [1, i].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from typing import Callable, NamedTuple, Optional

from .arquiver import enumerate_indecomposables
from .errors import ParameterError, WorkbenchError
from .homs import hom_dim
from .polygon import CategoryParams, Diagonal, suspend


class IntervalModule(NamedTuple):
    a: int
    b: int


class DerivedIndec(NamedTuple):
    module: IntervalModule
    shift: int


def intervals(rank: int) -> list[IntervalModule]:
    return [
        IntervalModule(a, b)
        for a in range(1, rank + 1)
        for b in range(a, rank + 1)
    ]


def _matrix_rank(rows: list[list[int]]) -> int:
    """Exact rank over the rationals by Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [inv * x for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


@lru_cache(maxsize=None)
def hom_mod(m: IntervalModule, n: IntervalModule, rank: int) -> int:
    """dim Hom of interval representations by brute-force linear algebra.

    One scalar unknown f_i per vertex in both supports; each arrow
    i+1 -> i contributes the commuting condition f_i * m_arrow =
    n_arrow * f_(i+1).  The Hom dimension is the kernel dimension.
    """
    variables = [
        i for i in range(1, rank + 1) if m.a <= i <= m.b and n.a <= i <= n.b
    ]
    index = {v: k for k, v in enumerate(variables)}
    rows = []
    for i in range(1, rank):  # arrow i+1 -> i
        m_arrow = 1 if m.a <= i and i + 1 <= m.b else 0
        n_arrow = 1 if n.a <= i and i + 1 <= n.b else 0
        row = [0] * len(variables)
        populated = False
        if m_arrow and i in index:
            row[index[i]] += 1
            populated = True
        if n_arrow and i + 1 in index:
            row[index[i + 1]] -= 1
            populated = True
        if populated and any(row):
            rows.append(row)
    return len(variables) - (_matrix_rank(rows) if rows else 0)


def _projective_resolution(
    m: IntervalModule,
) -> tuple[IntervalModule, Optional[IntervalModule]]:
    """0 -> P1 -> P0 -> M -> 0 with P0 = [1, b] and P1 = [1, a-1] (or zero)."""
    p0 = IntervalModule(1, m.b)
    p1 = IntervalModule(1, m.a - 1) if m.a > 1 else None
    return p0, p1


@lru_cache(maxsize=None)
def ext1_mod(m: IntervalModule, n: IntervalModule, rank: int) -> int:
    """dim Ext^1 via Hom counts along the projective resolution of m."""
    p0, p1 = _projective_resolution(m)
    dim_p1 = hom_mod(p1, n, rank) if p1 is not None else 0
    return dim_p1 - hom_mod(p0, n, rank) + hom_mod(m, n, rank)


def derived_hom(x: DerivedIndec, y: DerivedIndec, rank: int) -> int:
    """Hom in the derived category; heredity leaves only two degrees."""
    if y.shift == x.shift:
        return hom_mod(x.module, y.module, rank)
    if y.shift == x.shift + 1:
        return ext1_mod(x.module, y.module, rank)
    return 0


class OrbitCategory:
    """Orbit of the derived category under F = tau * S^(w+1)."""

    def __init__(self, params: CategoryParams):
        self.params = params
        self.rank = params.rank
        self.weight = params.weight

    def tau(self, x: DerivedIndec) -> DerivedIndec:
        """AR translate; projectives [1, i] go to the injective [i, e][-1]."""
        m, n = x
        if m.a > 1:
            return DerivedIndec(IntervalModule(m.a - 1, m.b - 1), n)
        return DerivedIndec(IntervalModule(m.b, self.rank), n - 1)

    def tau_inverse(self, x: DerivedIndec) -> DerivedIndec:
        m, n = x
        if m.b < self.rank:
            return DerivedIndec(IntervalModule(m.a + 1, m.b + 1), n)
        return DerivedIndec(IntervalModule(1, m.a), n + 1)

    def orbit_functor(self, x: DerivedIndec) -> DerivedIndec:
        return self.tau(DerivedIndec(x.module, x.shift + self.weight + 1))

    def orbit_functor_inverse(self, x: DerivedIndec) -> DerivedIndec:
        y = self.tau_inverse(x)
        return DerivedIndec(y.module, y.shift - self.weight - 1)

    def suspend(self, x: DerivedIndec, steps: int = 1) -> DerivedIndec:
        return DerivedIndec(x.module, x.shift + steps)

    @lru_cache(maxsize=None)
    def orbit_hom(self, x: DerivedIndec, y: DerivedIndec) -> int:
        """Hom in the orbit category: sum of derived Homs over the F-orbit of y.

        F raises shifts by at least the weight, so only finitely many
        terms land in the two degrees where derived Homs live; the scan
        window is padded and the edges asserted to vanish.
        """
        bound = abs(x.shift - y.shift) + self.weight + 6
        total = 0
        forward = y
        backward = y
        terms = []
        for _ in range(bound):
            forward = self.orbit_functor(forward)
            backward = self.orbit_functor_inverse(backward)
            terms.extend([forward, backward])
        terms.append(y)
        for term in terms:
            if abs(term.shift - x.shift) <= 1:
                total += derived_hom(x, term, self.rank)
        assert all(abs(t.shift - x.shift) > 1 for t in (forward, backward))
        return total

    def fundamental_domain(self) -> list[DerivedIndec]:
        """One object per F-orbit: the representative of least shift >= 0."""
        reps: list[DerivedIndec] = []
        seen: set[DerivedIndec] = set()
        max_shift = 2 * (self.weight + 1) + 2
        for shift in range(max_shift + 1):
            for m in intervals(self.rank):
                obj = DerivedIndec(m, shift)
                if obj in seen:
                    continue
                reps.append(obj)
                walker = obj
                while walker.shift <= max_shift:
                    seen.add(walker)
                    walker = self.orbit_functor(walker)
        expected = len(enumerate_indecomposables(self.params))
        if len(reps) != expected:
            raise WorkbenchError(
                f"fundamental domain has {len(reps)} objects, expected {expected}"
            )
        return reps


def _orbits(elements, step) -> list[list]:
    """Partition elements into orbits of the (invertible) map step."""
    remaining = set(elements)
    orbits = []
    while remaining:
        start = min(remaining)
        orbit = [start]
        current = step(start)
        while current != start:
            orbit.append(current)
            current = step(current)
        orbits.append(orbit)
        remaining -= set(orbit)
    return orbits


@dataclass
class Matching:
    """A validated bijection from orbit-category objects to diagonals."""

    params: CategoryParams
    assignment: dict[DerivedIndec, Diagonal]


def find_matchings(
    params: CategoryParams,
    shifts: Optional[range] = None,
    diagonal_hom: Callable[..., int] = hom_dim,
    first_only: bool = True,
) -> list[Matching]:
    """Search for suspension-equivariant bijections validating all Hom tables.

    Candidate bijections map each suspension orbit of orbit-category
    objects onto a diagonal orbit of the same size with some rotation
    offset; a candidate survives only if every pair and every shift in
    the window gives identical Hom dimensions on both sides.  No
    candidate surviving means the two sides genuinely disagree.
    """
    if shifts is None:
        shifts = range(-params.weight - 1, params.weight + 2)
    category = OrbitCategory(params)
    reps = category.fundamental_domain()
    rep_of: dict[DerivedIndec, DerivedIndec] = {}
    for rep in reps:
        walker = rep
        for _ in range(4 * params.polygon_size):
            rep_of[walker] = rep
            walker = category.orbit_functor(walker)

    def reduce(obj: DerivedIndec) -> DerivedIndec:
        while obj not in rep_of:
            obj = category.orbit_functor_inverse(obj)
        return rep_of[obj]

    oracle_orbits = _orbits(reps, lambda r: reduce(category.suspend(r)))
    diagonals = enumerate_indecomposables(params)
    diagonal_orbits = _orbits(diagonals, lambda d: suspend(d, 1, params))

    if sorted(map(len, oracle_orbits)) != sorted(map(len, diagonal_orbits)):
        raise WorkbenchError(
            "suspension orbit sizes differ between oracle and diagonal model",
            oracle=sorted(map(len, oracle_orbits)),
            diagonals=sorted(map(len, diagonal_orbits)),
        )

    oracle_table = {
        (x, ell, y): category.orbit_hom(x, category.suspend(y, ell))
        for x in reps
        for y in reps
        for ell in shifts
    }

    by_size: dict[int, list[int]] = {}
    for i, orbit in enumerate(diagonal_orbits):
        by_size.setdefault(len(orbit), []).append(i)

    matchings: list[Matching] = []
    size_groups = [
        (size, [i for i, o in enumerate(oracle_orbits) if len(o) == size])
        for size in sorted(by_size)
    ]
    pairings = product(
        *[permutations(by_size[size]) for size, _ in size_groups]
    )
    for pairing in pairings:
        plan = []  # (oracle orbit, diagonal orbit) pairs
        for (size, oracle_ids), diagonal_ids in zip(size_groups, pairing):
            plan.extend(
                (oracle_orbits[i], diagonal_orbits[j])
                for i, j in zip(oracle_ids, diagonal_ids)
            )
        for offsets in product(*[range(len(d)) for _, d in plan]):
            assignment = {}
            for (oracle_orbit, diagonal_orbit), offset in zip(plan, offsets):
                for k, obj in enumerate(oracle_orbit):
                    assignment[obj] = diagonal_orbit[(offset + k) % len(diagonal_orbit)]
            if _validates(assignment, oracle_table, shifts, params, diagonal_hom):
                matchings.append(Matching(params, assignment))
                if first_only:
                    return matchings
    return matchings


def _validates(assignment, oracle_table, shifts, params, diagonal_hom) -> bool:
    for (x, ell, y), value in oracle_table.items():
        if diagonal_hom(assignment[x], ell, assignment[y], params) != value:
            return False
    return True


def match_to_diagonals(params: CategoryParams) -> Matching:
    """The validated object-to-diagonal bijection; loud failure if none exists."""
    matchings = find_matchings(params)
    if not matchings:
        raise WorkbenchError(
            "no suspension-equivariant matching validates the Hom tables",
            rank=params.rank,
            weight=params.weight,
        )
    return matchings[0]
