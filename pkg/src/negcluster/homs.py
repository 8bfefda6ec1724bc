"""Closed-form Hom-space dimensions and extension middle terms.

Every Hom space between indecomposables has dimension 0 or 1.  The space
Hom(S^-1 s', s) is one-dimensional exactly when the diagonals sit in one
of three configurations:

  shift     s = s' - 1 on both endpoints; the map is an isomorphism and
            the extension middle term is zero.
  crossing  s and s' cross and the crossing can be resolved into two
            admissible diagonals; the middle term is that resolution.
            (Of the two ways to reconnect four crossing endpoints, at
            most one is admissible: the other has gaps = 0 mod w+1.)
  adjacent  s and s' neither cross nor touch, but one endpoint of s is
            the clockwise predecessor x-1 of an endpoint x of s'; the
            middle term replaces x-1 in s by the other endpoint of s'.

General dimensions dim Hom(x, S^l y) reduce to this via rotation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import NoExtensionError
from .polygon import (
    CategoryParams,
    Diagonal,
    crosses,
    is_admissible,
    normalize,
    require_admissible,
    shares_endpoint,
    suspend,
)

NONE, ADJACENT, CROSSING, SHIFT = "none", "adjacent", "crossing", "shift"


@dataclass(frozen=True)
class ExtCase:
    """Classification of the pair (s', s) together with its witness data.

    adjacent: ``abutment`` is the endpoint x of s' whose predecessor x-1
    is the endpoint ``replaced`` of s; ``replacement`` is the other
    endpoint of s'.
    crossing: ``pairing`` matches each endpoint of s with the endpoint of
    s' congruent to it modulo w+1 (the shift-multiple correspondence).
    """

    tag: str
    abutment: Optional[int] = None
    replaced: Optional[int] = None
    replacement: Optional[int] = None
    pairing: Optional[tuple[tuple[int, int], tuple[int, int]]] = None


@dataclass(frozen=True)
class ExtTriangle:
    """The triangle S^-1 s' -> s -> middle -> s' realizing a nonzero extension."""

    shifted_source: Diagonal
    through: Diagonal
    middle: tuple[Diagonal, ...]
    target: Diagonal


def _crossing_resolution(s: Diagonal, s_prime: Diagonal) -> tuple[Diagonal, Diagonal]:
    """Reconnect crossing endpoints the way the extension middle term does.

    With s = {a, b} normalized and c the endpoint of s' inside (a, b),
    d the outside endpoint, the candidate middle is {a, d} and {c, b}.
    """
    a, b = s
    if s_prime.lo < a or s_prime.lo > b:
        c, d = s_prime.hi, s_prime.lo
    else:
        c, d = s_prime.lo, s_prime.hi
    return Diagonal(min(a, d), max(a, d)), Diagonal(min(c, b), max(c, b))


def ext_case(s_prime: Diagonal, s: Diagonal, params: CategoryParams) -> ExtCase:
    """Classify Hom(S^-1 s', s); precedence shift > crossing > adjacent.

    Shift configurations also cross, so the shift test runs first: there
    the connecting map is an isomorphism and the middle term must be
    empty.  The crossing test demands an admissible resolution, which is
    strictly stronger than crossing alone.
    """
    require_admissible(s_prime, params)
    require_admissible(s, params)
    n, w = params.polygon_size, params.weight

    if s == suspend(s_prime, -1, params):
        return ExtCase(SHIFT)

    if crosses(s, s_prime):
        first, second = _crossing_resolution(s, s_prime)
        if is_admissible(first, params) and is_admissible(second, params):
            a, b = s
            c = s_prime.lo if a < s_prime.lo < b else s_prime.hi
            d = s_prime.lo + s_prime.hi - c
            return ExtCase(CROSSING, pairing=((a, c), (b, d)))
        return ExtCase(NONE)

    if not shares_endpoint(s, s_prime):
        for x in s_prime:
            predecessor = (x - 1) % n
            if predecessor in s:
                other = s_prime.lo + s_prime.hi - x
                return ExtCase(
                    ADJACENT, abutment=x, replaced=predecessor, replacement=other
                )
    return ExtCase(NONE)


def hom_dim_neg1(s_prime: Diagonal, s: Diagonal, params: CategoryParams) -> int:
    """dim Hom(S^-1 s', s) over the ground field."""
    return 0 if ext_case(s_prime, s, params).tag == NONE else 1


def hom_dim(x: Diagonal, shift: int, y: Diagonal, params: CategoryParams) -> int:
    """dim Hom(x, S^shift y), reduced by rotating both arguments."""
    return hom_dim_neg1(suspend(x, 1, params), suspend(y, shift, params), params)


def middle_term(
    s_prime: Diagonal, s: Diagonal, params: CategoryParams
) -> list[Diagonal]:
    """Indecomposable summands of the extension middle term of (s', s)."""
    case = ext_case(s_prime, s, params)
    if case.tag == NONE:
        raise NoExtensionError(
            f"no extension: Hom(S^-1 {tuple(s_prime)}, {tuple(s)}) = 0",
            s_prime=list(s_prime),
            s=list(s),
        )
    if case.tag == SHIFT:
        return []
    if case.tag == CROSSING:
        first, second = _crossing_resolution(s, s_prime)
        summands = sorted({first, second})
        assert all(is_admissible(m, params) for m in summands)
        return summands
    replaced = normalize(
        s.lo + s.hi - case.replaced, case.replacement, params
    )
    assert is_admissible(replaced, params)
    return [replaced]


def ext_triangle(
    s_prime: Diagonal, s: Diagonal, params: CategoryParams
) -> ExtTriangle:
    """Assemble the full triangle S^-1 s' -> s -> middle -> s'."""
    return ExtTriangle(
        shifted_source=suspend(s_prime, -1, params),
        through=s,
        middle=tuple(middle_term(s_prime, s, params)),
        target=s_prime,
    )


def cy_pairing_dims(
    x: Diagonal, y: Diagonal, params: CategoryParams
) -> tuple[int, int]:
    """(dim Hom(x, S^-w y), dim Hom(y, x)); Calabi-Yau duality makes them equal."""
    return (
        hom_dim(x, -params.weight, y, params),
        hom_dim(y, 0, x, params),
    )
