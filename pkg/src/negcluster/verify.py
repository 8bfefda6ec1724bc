"""Named verification suites shared by the CLI and the HTTP service.

Each suite runs an exhaustive desk-scale check for one theorem-level
property and reports one (name, passed, detail) line.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations

from . import goldens
from .arquiver import build_ar_quiver, enumerate_indecomposables
from .homs import cy_pairing_dims
from .oracle import OrbitCategory, find_matchings
from .polygon import CategoryParams, suspend
from .sms import check_orthogonality, enumerate_sms, extension_closure, simples_of_closure
from .tilting import left_tilt, right_tilt


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _subsets(items):
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def check_orthogonality_suite(params: CategoryParams) -> CheckResult:
    systems = enumerate_sms(params)
    bad = [s for s in systems if not check_orthogonality(s.simples, params)]
    return CheckResult(
        "orthogonality",
        not bad,
        f"{len(systems)} systems checked" if not bad else f"{len(bad)} failures",
    )


def check_cy_duality(params: CategoryParams) -> CheckResult:
    objects = enumerate_indecomposables(params)
    mismatches = [
        (x, y)
        for x in objects
        for y in objects
        if (pair := cy_pairing_dims(x, y, params))[0] != pair[1]
    ]
    return CheckResult(
        "cy-duality",
        not mismatches,
        f"{len(objects) ** 2} pairs checked"
        if not mismatches
        else f"{len(mismatches)} mismatched pairs",
    )


def check_closure_golden(params: CategoryParams) -> CheckResult:
    if (params.rank, params.weight) == (3, 2):
        quiver = build_ar_quiver(params)
        if set(quiver.arrows) != set(goldens.REFERENCE_AR_ARROWS_E3_W2):
            return CheckResult("closure-golden", False, "AR arrow set mismatch")
        closure = extension_closure(goldens.REFERENCE_SMS_E3_W2, params)
        if closure.members != goldens.REFERENCE_CLOSURE_E3_W2:
            return CheckResult("closure-golden", False, "reference closure mismatch")
    systems = enumerate_sms(params)
    for system in systems:
        closure = extension_closure(system)
        if simples_of_closure(closure) != set(system.simples):
            return CheckResult(
                "closure-golden", False, f"closure simples differ for {system.simples}"
            )
    return CheckResult("closure-golden", True, f"{len(systems)} closures checked")


def check_tilt_round_trip(params: CategoryParams) -> CheckResult:
    count = 0
    for system in enumerate_sms(params):
        pivots = [frozenset([s]) for s in system.simples]
        pivots.append(frozenset(system.simples))
        for pivot in pivots:
            left = left_tilt(system, pivot)
            back = right_tilt(
                left.result, [suspend(p, -1, params) for p in pivot]
            )
            if back.result.simples != system.simples:
                return CheckResult(
                    "tilt-round-trip", False, f"failed at {system.simples}"
                )
            right = right_tilt(system, pivot)
            forth = left_tilt(
                right.result, [suspend(p, 1, params) for p in pivot]
            )
            if forth.result.simples != system.simples:
                return CheckResult(
                    "tilt-round-trip", False, f"failed at {system.simples}"
                )
            count += 2
    return CheckResult("tilt-round-trip", True, f"{count} round trips checked")


def check_oracle_agreement(params: CategoryParams) -> CheckResult:
    matchings = find_matchings(params)
    if not matchings:
        return CheckResult("oracle-agreement", False, "no validated matching")
    category = OrbitCategory(params)
    objects = matchings[0].assignment
    pairs = len(objects) ** 2 * (2 * params.weight + 3)
    # the matching validated every pair and shift already; also check the
    # Calabi-Yau pairing on the oracle side, independently of the model
    for x in objects:
        for y in objects:
            left = category.orbit_hom(x, category.suspend(y, -params.weight))
            right = category.orbit_hom(y, x)
            if left != right:
                return CheckResult(
                    "oracle-agreement", False, "oracle-side duality mismatch"
                )
    return CheckResult("oracle-agreement", True, f"{pairs} table entries validated")


SUITES = {
    "orthogonality": check_orthogonality_suite,
    "cy-duality": check_cy_duality,
    "closure-golden": check_closure_golden,
    "tilt-round-trip": check_tilt_round_trip,
    "oracle-agreement": check_oracle_agreement,
}


def run_suite(params: CategoryParams, suite: str = "all") -> list[CheckResult]:
    if suite == "all":
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        from .errors import ParameterError

        raise ParameterError(
            f"unknown suite {suite!r}; choose from {['all'] + sorted(SUITES)}"
        )
    return [SUITES[name](params) for name in names]
