"""Canonical JSON wire formats.

Diagonals travel as two-element arrays [lo, hi]; systems as sorted arrays
of diagonals.  Emission is canonical (sorted keys, sorted diagonal
arrays, compact separators) so that identical requests produce
byte-identical bodies and golden files are stable.
"""

from __future__ import annotations

import json
from collections import Counter
from typing import Any, Iterable

from .errors import ParameterError
from .polygon import CategoryParams, Diagonal, normalize
from .sms import ClosureResult, SimpleMindedSystem, TorsionPair, make_sms
from .tilting import TiltMove, TiltingGraph


def dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def diagonal_to_wire(d: Diagonal) -> list[int]:
    return [d.lo, d.hi]


def system_to_wire(diagonals: Iterable[Diagonal]) -> list[list[int]]:
    return [diagonal_to_wire(d) for d in sorted(diagonals)]


def diagonal_from_wire(data: Any, params: CategoryParams) -> Diagonal:
    if (
        not isinstance(data, (list, tuple))
        or len(data) != 2
        or not all(isinstance(v, int) and not isinstance(v, bool) for v in data)
    ):
        raise ParameterError(f"a diagonal must be a pair of integers, got {data!r}")
    return normalize(data[0], data[1], params)


def system_from_wire(data: Any, params: CategoryParams) -> SimpleMindedSystem:
    if not isinstance(data, list):
        raise ParameterError(f"a system must be an array of diagonals, got {data!r}")
    return make_sms([diagonal_from_wire(d, params) for d in data], params)


def diagonals_from_wire(data: Any, params: CategoryParams) -> list[Diagonal]:
    if not isinstance(data, list):
        raise ParameterError(f"expected an array of diagonals, got {data!r}")
    return [diagonal_from_wire(d, params) for d in data]


def params_to_wire(params: CategoryParams) -> dict:
    return {
        "rank": params.rank,
        "weight": params.weight,
        "polygon_size": params.polygon_size,
    }


def _factors_to_wire(factors: Counter) -> list[list]:
    return [[diagonal_to_wire(d), count] for d, count in sorted(factors.items())]


def closure_to_wire(closure: ClosureResult) -> dict:
    records = {}
    for member, record in sorted(closure.records.items()):
        if record is not None:
            records[str(diagonal_to_wire(member))] = {
                "sub": diagonal_to_wire(record[0]),
                "quotient": diagonal_to_wire(record[1]),
            }
    return {
        "seed": system_to_wire(closure.seed),
        "members": system_to_wire(closure.members),
        "records": records,
        "factors": {
            str(diagonal_to_wire(m)): _factors_to_wire(f)
            for m, f in sorted(closure.factors.items())
        },
        "depths": {
            str(diagonal_to_wire(m)): closure.depth(m)
            for m in closure.members
            if closure.depth(m) is not None
        },
    }


def torsion_to_wire(pair: TorsionPair) -> dict:
    return {
        "torsion": system_to_wire(pair.torsion),
        "free": system_to_wire(pair.free),
        "mixed": {
            str(diagonal_to_wire(m)): (
                None
                if ses is None
                else {"sub": diagonal_to_wire(ses[0]), "quotient": diagonal_to_wire(ses[1])}
            )
            for m, ses in sorted(pair.mixed.items())
        },
    }


def tilt_to_wire(move: TiltMove) -> dict:
    return {
        "direction": move.direction,
        "pivot": system_to_wire(move.pivot),
        "source": system_to_wire(move.source.simples),
        "system": system_to_wire(move.result.simples),
        "actions": [
            {
                "simple": diagonal_to_wire(simple),
                "kind": action.kind,
                "result": diagonal_to_wire(action.result),
                **(
                    {"pivot": diagonal_to_wire(action.pivot)}
                    if action.pivot is not None
                    else {}
                ),
            }
            for simple, action in move.actions
        ],
    }


def system_id(system: SimpleMindedSystem) -> str:
    """Stable short identifier for graph nodes."""
    import hashlib

    canonical = json.dumps(system_to_wire(system.simples), separators=(",", ":"))
    return "sms_" + hashlib.sha256(canonical.encode()).hexdigest()[:10]


def tilting_graph_to_wire(graph: TiltingGraph) -> dict:
    return {
        "nodes": [
            {"id": system_id(node), "system": system_to_wire(node.simples)}
            for node in graph.nodes
        ],
        "edges": [
            {
                "source": system_id(edge.source),
                "target": system_id(edge.target),
                "pivot": diagonal_to_wire(edge.pivot),
                "direction": edge.direction,
            }
            for edge in graph.edges
        ],
    }
