"""Indecomposable objects and the Auslander-Reiten quiver.

Arrows are the irreducible morphisms: s -> s' exists exactly when s' is
obtained from s by moving one endpoint forward by w+1 (and s' is again
admissible).  The translate of the quiver is the AR translate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .polygon import (
    CategoryParams,
    Diagonal,
    ar_translate,
    is_admissible,
    normalize,
    require_admissible,
)


@dataclass(frozen=True)
class ArQuiver:
    params: CategoryParams
    vertices: tuple[Diagonal, ...]
    arrows: tuple[tuple[Diagonal, Diagonal], ...]
    translate: dict[Diagonal, Diagonal]


@lru_cache(maxsize=None)
def enumerate_indecomposables(params: CategoryParams) -> tuple[Diagonal, ...]:
    """All admissible diagonals in lexicographic order."""
    n = params.polygon_size
    return tuple(
        d
        for lo in range(n)
        for hi in range(lo + 1, n)
        if is_admissible(d := Diagonal(lo, hi), params)
    )


def irreducible_targets(d: Diagonal, params: CategoryParams) -> list[Diagonal]:
    """Targets of the irreducible morphisms out of d.

    Moving either endpoint forward by w+1 gives at most two candidates;
    only those that are again admissible diagonals (and distinct from d)
    are objects, so the rest are dropped.
    """
    require_admissible(d, params)
    step = params.weight + 1
    targets = set()
    for fixed, moved in ((d.lo, d.hi), (d.hi, d.lo)):
        if (moved + step - fixed) % params.polygon_size == 0:
            continue  # shifted endpoint collides with the fixed one
        candidate = normalize(fixed, moved + step, params)
        if candidate != d and is_admissible(candidate, params):
            targets.add(candidate)
    return sorted(targets)


@lru_cache(maxsize=None)
def build_ar_quiver(params: CategoryParams) -> ArQuiver:
    vertices = enumerate_indecomposables(params)
    arrows = tuple(
        (source, target)
        for source in vertices
        for target in irreducible_targets(source, params)
    )
    translate = {v: ar_translate(v, params) for v in vertices}
    return ArQuiver(params, vertices, arrows, translate)
