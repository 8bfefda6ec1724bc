"""Command line interface.

Subcommands: info, diagonals, ar-quiver, sms, closure, tilt, tilt-graph,
verify, serve.  Machine output is canonical JSON by default; --format
selects dot or svg where a graph or polygon picture makes sense.  Domain
errors print a structured error object to stderr and exit 1; usage
errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import render, wire
from .arquiver import build_ar_quiver, enumerate_indecomposables
from .errors import ParameterError, WorkbenchError
from .homs import ext_triangle
from .polygon import make_category
from .sms import enumerate_sms, extension_closure, torsion_pair
from .tilting import left_tilt, right_tilt, tilting_graph
from .verify import run_suite


def _params(args) -> "CategoryParams":
    return make_category(args.rank, args.weight)


def _parse_json_flag(text: str, flag: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"invalid JSON for {flag}: {exc}") from exc


def _emit(text: str) -> int:
    sys.stdout.write(text)
    return 0


def cmd_info(args) -> int:
    params = _params(args)
    payload = wire.params_to_wire(params)
    payload["indecomposables"] = len(enumerate_indecomposables(params))
    return _emit(wire.dumps(payload))


def cmd_diagonals(args) -> int:
    params = _params(args)
    diagonals = enumerate_indecomposables(params)
    if args.format == "svg":
        return _emit(render.export_svg_polygon(params, solid=diagonals))
    return _emit(wire.dumps(wire.system_to_wire(diagonals)))


def cmd_ar_quiver(args) -> int:
    params = _params(args)
    quiver = build_ar_quiver(params)
    if args.format == "dot":
        return _emit(render.export_dot_ar_quiver(quiver))
    if args.format == "svg":
        return _emit(render.export_svg_polygon(params, solid=quiver.vertices))
    payload = {
        "vertices": wire.system_to_wire(quiver.vertices),
        "arrows": [
            [wire.diagonal_to_wire(a), wire.diagonal_to_wire(b)]
            for a, b in quiver.arrows
        ],
        "translate": {
            str(wire.diagonal_to_wire(v)): wire.diagonal_to_wire(t)
            for v, t in sorted(quiver.translate.items())
        },
    }
    return _emit(wire.dumps(payload))


def cmd_sms(args) -> int:
    params = _params(args)
    systems = enumerate_sms(params)
    payload = [wire.system_to_wire(s.simples) for s in systems]
    return _emit(wire.dumps(payload))


def cmd_closure(args) -> int:
    params = _params(args)
    system = wire.system_from_wire(_parse_json_flag(args.system, "--system"), params)
    closure = extension_closure(system)
    if args.format == "svg":
        return _emit(render.export_svg_closure(closure))
    payload = wire.closure_to_wire(closure)
    if args.torsion is not None:
        subset = wire.diagonals_from_wire(
            _parse_json_flag(args.torsion, "--torsion"), params
        )
        payload["torsion_pair"] = wire.torsion_to_wire(torsion_pair(closure, subset))
    return _emit(wire.dumps(payload))


def cmd_tilt(args) -> int:
    params = _params(args)
    system = wire.system_from_wire(_parse_json_flag(args.system, "--system"), params)
    pivot = wire.diagonals_from_wire(_parse_json_flag(args.at, "--at"), params)
    move = (right_tilt if args.right else left_tilt)(system, pivot)
    if args.format == "svg":
        return _emit(render.export_svg_system(params, move.result.simples))
    return _emit(wire.dumps(wire.tilt_to_wire(move)))


def cmd_triangle(args) -> int:
    params = _params(args)
    target = wire.diagonal_from_wire(_parse_json_flag(args.target, "--target"), params)
    through = wire.diagonal_from_wire(
        _parse_json_flag(args.through, "--through"), params
    )
    triangle = ext_triangle(target, through, params)
    if args.format == "svg":
        return _emit(render.export_svg_triangle(params, triangle))
    payload = {
        "shifted_source": wire.diagonal_to_wire(triangle.shifted_source),
        "through": wire.diagonal_to_wire(triangle.through),
        "middle": [wire.diagonal_to_wire(m) for m in triangle.middle],
        "target": wire.diagonal_to_wire(triangle.target),
    }
    return _emit(wire.dumps(payload))


def cmd_tilt_graph(args) -> int:
    params = _params(args)
    graph = tilting_graph(params)
    if args.format == "dot":
        return _emit(render.export_dot_tilting_graph(graph))
    return _emit(wire.dumps(wire.tilting_graph_to_wire(graph)))


def cmd_verify(args) -> int:
    params = _params(args)
    results = run_suite(params, args.suite)
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        detail = f" ({result.detail})" if result.detail else ""
        print(f"{status} {result.name}{detail}")
    return 0 if all(r.passed for r in results) else 1


def cmd_serve(args) -> int:
    from .server import serve

    serve(args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="negcluster",
        description="Workbench for negative cluster categories of type A",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--rank", "-e", type=int, required=True, help="number of simples")
        p.add_argument("--weight", "-w", type=int, required=True, help="CY weight w")
        p.set_defaults(handler=handler)
        return p

    add("info", cmd_info, help="category parameters and object count")

    p = add("diagonals", cmd_diagonals, help="list admissible diagonals")
    p.add_argument("--format", choices=["json", "svg"], default="json")

    p = add("ar-quiver", cmd_ar_quiver, help="Auslander-Reiten quiver")
    p.add_argument("--format", choices=["json", "dot", "svg"], default="json")

    p = add("sms", cmd_sms, help="enumerate simple minded systems")
    p.add_argument("action", nargs="?", choices=["list"], default="list")

    p = add("closure", cmd_closure, help="extension closure of a system")
    p.add_argument("--system", required=True, help="JSON array of diagonals")
    p.add_argument("--torsion", help="JSON array: torsion split at these simples")
    p.add_argument("--format", choices=["json", "svg"], default="json")

    p = add("tilt", cmd_tilt, help="tilt a system at a pivot subset")
    p.add_argument("--system", required=True, help="JSON array of diagonals")
    p.add_argument("--at", required=True, help="JSON array: the pivot subset")
    direction = p.add_mutually_exclusive_group(required=True)
    direction.add_argument("--left", action="store_true")
    direction.add_argument("--right", action="store_true")
    p.add_argument("--format", choices=["json", "svg"], default="json")

    p = add("triangle", cmd_triangle, help="extension triangle of a pair")
    p.add_argument("--target", required=True, help="JSON diagonal s'")
    p.add_argument("--through", required=True, help="JSON diagonal s")
    p.add_argument("--format", choices=["json", "svg"], default="json")

    p = add("tilt-graph", cmd_tilt_graph, help="graph of all left tilts")
    p.add_argument("--format", choices=["json", "dot"], default="json")

    p = add("verify", cmd_verify, help="run named verification suites")
    p.add_argument("--suite", default="all")

    # the service is stateless: category parameters travel on each request
    p = sub.add_parser("serve", help="run the JSON-over-HTTP service")
    p.add_argument("--port", type=int, default=8420)
    p.set_defaults(handler=cmd_serve)

    return parser


def cli_dispatch(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except WorkbenchError as exc:
        sys.stderr.write(wire.dumps(exc.to_wire()))
        return 1


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
