"""Left and right tilting of simple minded systems, and the tilting graph.

Left tilting at a pivot subset rotates every pivot diagonal one step
backwards.  A non-pivot diagonal with an endpoint u = x - 1, x an
endpoint of a pivot element, is rewritten by walking a chain: u moves to
the other endpoint z of that pivot element, and if z again abuts a pivot
element (z = x' - 1) the walk continues, ending at the far end of the
glued chain.  The chain is exactly the approximation of the diagonal by
the extension closure of the pivot: abutting pivot elements extend each
other, and the glued diagonal, not a single pivot element, is the cover
through which every pivot map factors.  Diagonals abutting no pivot
element are unchanged.  Right tilting is the mirror rule.

For pivot subsets the chain rule extends the single-pivot description,
so every move is post-validated: the result must be a simple minded
system and the mirror move must restore the source, else the move is
rejected instead of silently wrong.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import TiltRuleIncompleteError, UnsupportedWeightError, ParameterError
from .homs import hom_dim, hom_dim_neg1, middle_term
from .polygon import CategoryParams, Diagonal, normalize, suspend
from .sms import (
    ClosureResult,
    SimpleMindedSystem,
    enumerate_sms,
    extension_closure,
    is_sms,
    sub_closure,
    torsion_pair,
)

LEFT, RIGHT = "left", "right"


@dataclass(frozen=True)
class TiltAction:
    kind: str                      # "shifted" | "replaced" | "unchanged"
    result: Diagonal
    pivot: Diagonal | None = None  # pivot element that caused a replacement


@dataclass(frozen=True)
class TiltMove:
    direction: str
    pivot: tuple[Diagonal, ...]
    source: SimpleMindedSystem
    result: SimpleMindedSystem
    actions: tuple[tuple[Diagonal, TiltAction], ...]


def _chain_walk(
    u: int, pivot: frozenset[Diagonal], step: int, n: int
) -> tuple[int, Diagonal | None]:
    """Follow abutting pivot elements from vertex u; return the far end.

    An endpoint abuts a pivot element when it equals x + step for a pivot
    endpoint x; the walk jumps to the element's other endpoint and
    repeats.  Two pivot elements cannot abut the same vertex (they would
    share the abutted endpoint), so each step is unique.
    """
    current = u
    first_cause = None
    used: set[Diagonal] = set()
    while True:
        match = next(
            (
                (p, x)
                for p in pivot
                if p not in used
                for x in p
                if (x + step) % n == current
            ),
            None,
        )
        if match is None:
            return current, first_cause
        p, x = match
        if first_cause is None:
            first_cause = p
        used.add(p)
        current = p.lo + p.hi - x
        if len(used) > len(pivot):  # defensive; cannot happen in an SMS
            raise TiltRuleIncompleteError("pivot abutment chain does not terminate")


def _tilt_raw(
    system: SimpleMindedSystem,
    pivot: frozenset[Diagonal],
    direction: str,
) -> list[tuple[Diagonal, TiltAction]]:
    params = system.params
    n = params.polygon_size
    step = -1 if direction == LEFT else 1
    actions: list[tuple[Diagonal, TiltAction]] = []
    for s in system.simples:
        if s in pivot:
            actions.append((s, TiltAction("shifted", suspend(s, step, params))))
            continue
        walked = [_chain_walk(u, pivot, step, n) for u in s]
        if all(cause is None for _, cause in walked):
            actions.append((s, TiltAction("unchanged", s)))
            continue
        replaced = normalize(walked[0][0], walked[1][0], params)
        cause = next(cause for _, cause in walked if cause is not None)
        actions.append((s, TiltAction("replaced", replaced, cause)))
    return actions


def _tilt(
    system: SimpleMindedSystem,
    pivot: frozenset[Diagonal],
    direction: str,
    validate: bool = True,
) -> TiltMove:
    params = system.params
    if params.weight < 2:
        raise UnsupportedWeightError("tilting requires weight >= 2", weight=params.weight)
    if not pivot <= set(system.simples):
        raise ParameterError(
            "pivot must be a subset of the system",
            pivot=[list(d) for d in sorted(pivot)],
        )
    actions = _tilt_raw(system, pivot, direction)
    result_diagonals = tuple(sorted(a.result for _, a in actions))
    if validate:
        step = -1 if direction == LEFT else 1
        mirror = RIGHT if direction == LEFT else LEFT
        problem = None
        if len(set(result_diagonals)) < len(result_diagonals) or not is_sms(
            result_diagonals, params
        ):
            problem = "tilt result is not a simple minded system"
        else:
            result_system = SimpleMindedSystem(result_diagonals, params)
            inverse_pivot = frozenset(suspend(p, step, params) for p in pivot)
            back = _tilt(result_system, inverse_pivot, mirror, validate=False)
            if set(back.result.simples) != set(system.simples):
                problem = "mirror move does not restore the source system"
        if problem is not None:
            raise TiltRuleIncompleteError(
                problem,
                direction=direction,
                system=[list(d) for d in system.simples],
                pivot=[list(d) for d in sorted(pivot)],
            )
    return TiltMove(
        direction=direction,
        pivot=tuple(sorted(pivot)),
        source=system,
        result=SimpleMindedSystem(result_diagonals, params),
        actions=tuple(actions),
    )


def left_tilt(system: SimpleMindedSystem, pivot) -> TiltMove:
    return _tilt(system, frozenset(pivot), LEFT)


def right_tilt(system: SimpleMindedSystem, pivot) -> TiltMove:
    return _tilt(system, frozenset(pivot), RIGHT)


def gabriel_quiver(system: SimpleMindedSystem) -> list[list[int]]:
    """Arrow-count matrix of the closure's module category.

    Entry [i][j] counts arrows from simple i to simple j, which is
    dim Hom(s_j, S s_i).
    """
    params = system.params
    if params.weight < 2:
        raise UnsupportedWeightError(
            "Gabriel quivers require weight >= 2", weight=params.weight
        )
    simples = system.simples
    return [
        [hom_dim(s_j, 1, s_i, params) for s_j in simples] for s_i in simples
    ]


@dataclass(frozen=True)
class TiltEdge:
    source: SimpleMindedSystem
    target: SimpleMindedSystem
    pivot: Diagonal
    direction: str


@dataclass(frozen=True)
class TiltingGraph:
    params: CategoryParams
    nodes: tuple[SimpleMindedSystem, ...]
    edges: tuple[TiltEdge, ...]


@lru_cache(maxsize=None)
def tilting_graph(params: CategoryParams) -> TiltingGraph:
    """All systems with one left-tilt edge per (system, simple)."""
    if params.weight < 2:
        raise UnsupportedWeightError(
            "the tilting graph requires weight >= 2", weight=params.weight
        )
    nodes = tuple(enumerate_sms(params))
    edges = tuple(
        TiltEdge(node, left_tilt(node, [s]).result, s, LEFT)
        for node in nodes
        for s in node.simples
    )
    return TiltingGraph(params, nodes, edges)


@dataclass
class TiltVerification:
    ok: bool
    checks: list[tuple[str, bool, str]]

    def failures(self) -> list[tuple[str, bool, str]]:
        return [c for c in self.checks if not c[1]]


def verify_tilt_theorem_c(
    system: SimpleMindedSystem, pivot, direction: str = LEFT
) -> TiltVerification:
    """Check the torsion-pair exchange along a tilt.

    For a left tilt at pivot P with T the sub-closure of P and F the
    torsion-free members: the tilted closure must consist of F, the
    shifted torsion side S^-1 T, and extensions with torsion part on the
    F side and free part on the S^-1 T side; moreover Hom(F, S^-1 T)
    must vanish.  Right tilts check the mirror statements.
    """
    params = system.params
    pivot = frozenset(pivot)
    checks: list[tuple[str, bool, str]] = []

    move = _tilt(system, pivot, direction)
    checks.append(("tilt result is an SMS", True, ""))

    closure = extension_closure(system)
    step = -1 if direction == LEFT else 1
    torsion_side = sub_closure(closure, pivot)
    if direction == LEFT:
        free_side = torsion_pair(closure, pivot).free
    else:
        # mirror: the classes are (perp of the sub-closure, sub-closure)
        free_side = {
            m
            for m in closure.members
            if all(hom_dim(m, 0, g, params) == 0 for g in torsion_side)
        }
    shifted = {suspend(t, step, params) for t in torsion_side}

    tilted_closure = extension_closure(move.result)
    got = set(tilted_closure.members)
    core = free_side | shifted
    checks.append(
        (
            "tilted closure contains the exchanged classes",
            core <= got,
            f"missing {sorted(core - got)}" if not core <= got else "",
        )
    )

    # Remaining members must be extensions with torsion part on one side
    # of the exchange and free part on the other (canonical sequences).
    if direction == LEFT:
        subs, quots = free_side, shifted
    else:
        subs, quots = shifted, free_side
    extras = got - core
    bad = []
    for m in extras:
        ses = tilted_closure.records.get(m)
        if ses is None or ses[0] not in subs or ses[1] not in quots:
            ses = next(
                (
                    (x, y)
                    for x in sorted(subs)
                    for y in sorted(quots)
                    if hom_dim_neg1(y, x, params) == 1
                    and middle_term(y, x, params) == [m]
                ),
                None,
            )
        if ses is None:
            bad.append(m)
    checks.append(
        (
            "remaining members are exchanged extensions",
            not bad,
            f"unexplained members {sorted(bad)}" if bad else "",
        )
    )

    if direction == LEFT:
        vanishing = all(
            hom_dim(f, 0, t, params) == 0 for f in free_side for t in shifted
        )
    else:
        vanishing = all(
            hom_dim(t, 0, f, params) == 0 for t in shifted for f in free_side
        )
    checks.append(("Hom from torsion class to free class vanishes", vanishing, ""))

    return TiltVerification(ok=all(c[1] for c in checks), checks=checks)
