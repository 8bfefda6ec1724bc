"""Vertex and diagonal arithmetic of the polygon model.

The negative cluster category of type A with ``rank`` simples and weight
``w`` is modelled on an N-gon, N = (w+1)(rank+1) - 2, with vertices
0..N-1 numbered clockwise.  Indecomposable objects are the admissible
diagonals: chords cutting the polygon into two subpolygons whose vertex
counts are both divisible by w+1.  Suspension rotates by +1, the
Auslander-Reiten translate rotates by -(w+1).
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import ParameterError


class CategoryParams(NamedTuple):
    rank: int          # number of simples (the Dynkin type is A_rank)
    weight: int        # w; orthogonality spans degrees -w+1 .. -1
    polygon_size: int  # N = (weight+1)(rank+1) - 2


class Diagonal(NamedTuple):
    lo: int
    hi: int


def make_category(rank: int, weight: int) -> CategoryParams:
    """Fix the ambient category from (rank, weight)."""
    if rank < 1:
        raise ParameterError(f"rank must be >= 1, got {rank}", rank=rank)
    if weight < 1:
        raise ParameterError(f"weight must be >= 1, got {weight}", weight=weight)
    return CategoryParams(rank, weight, (weight + 1) * (rank + 1) - 2)


def normalize(a: int, b: int, params: CategoryParams) -> Diagonal:
    """Reduce two vertices mod N and store them sorted."""
    n = params.polygon_size
    a, b = a % n, b % n
    if a == b:
        raise ParameterError(f"degenerate diagonal: both endpoints reduce to {a}", vertex=a)
    return Diagonal(min(a, b), max(a, b))


def is_normalized(d: Diagonal, params: CategoryParams) -> bool:
    return 0 <= d.lo < d.hi < params.polygon_size


def is_admissible(d: Diagonal, params: CategoryParams) -> bool:
    """An object of the category iff the gap is w mod (w+1).

    Equivalent to the subpolygon condition: both arcs cut off by the
    diagonal then have vertex counts divisible by w+1, because
    N = -2 = 2w mod (w+1) makes the two gap residues agree.
    """
    return (d.hi - d.lo) % (params.weight + 1) == params.weight


def require_admissible(d: Diagonal, params: CategoryParams) -> None:
    from .errors import NotAdmissibleError

    if not is_normalized(d, params) or not is_admissible(d, params):
        raise NotAdmissibleError(
            f"diagonal {tuple(d)} is not an indecomposable object for "
            f"(rank={params.rank}, weight={params.weight})",
            diagonal=list(d),
        )


def shares_endpoint(d1: Diagonal, d2: Diagonal) -> bool:
    return bool({d1.lo, d1.hi} & {d2.lo, d2.hi})


def crosses(d1: Diagonal, d2: Diagonal) -> bool:
    """Chord crossing: the four endpoints are distinct and interleave.

    With d1 normalized, exactly one endpoint of d2 lies strictly inside
    the arc (d1.lo, d1.hi).
    """
    if shares_endpoint(d1, d2):
        return False
    inside = sum(1 for v in d2 if d1.lo < v < d1.hi)
    return inside == 1


def suspend(d: Diagonal, steps: int, params: CategoryParams) -> Diagonal:
    """Rotate both endpoints by +steps (the suspension functor for steps=1)."""
    return normalize(d.lo + steps, d.hi + steps, params)


def ar_translate(d: Diagonal, params: CategoryParams) -> Diagonal:
    """AR translate: rotation by -(w+1), since tau * Sigma^(w+1) acts trivially."""
    return suspend(d, -(params.weight + 1), params)
