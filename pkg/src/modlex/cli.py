"""Subcommand CLI with machine-readable JSON output.

Every invocation prints one JSON envelope on stdout:

    {"command": ..., "result": ..., "certificate"?: ...,
     "indeterminate"?: ..., "timing": {"seconds": ...}, "error"?: ...}

Exit codes: 0 computed; 1 property is false (check-* commands only);
2 parse or usage error; 3 precondition violation; 4 budget exceeded
(result is indeterminate, never guessed). Certificates are always
embedded so downstream tooling can re-verify results independently.

Graph inputs are edge-list files, `-` for stdin, or `dataset:NAME`;
single-input commands also accept `--dataset NAME`. The time budget can
be set with --time-budget-ms or the MODLEX_BUDGET_MS environment
variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .budget import Budget
from .datasets import dataset_names, load_dataset
from .errors import (
    BudgetExceededError,
    EdgeListParseError,
    PreconditionError,
)
from .graph import Graph, induced
from .io import emit_dot, emit_edge_list, parse_edge_list
from .isometry import deletion_sets, is_dp, ndp_set, sdp_order
from .modular import (
    maximal_modular_partition,
    minimal_quotient,
    modular_partition,
    quotient,
)
from .products import GraphFamily, cartesian_product, generalized_lex_product, project_pi
from .dp import isometry_transfer_check, no_long_induced_cycle, product_dp_criterion
from . import reference
from .smallgraphs import connected_graphs

EXIT_OK = 0
EXIT_PROPERTY_FALSE = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4


def _read_graph_spec(spec: str) -> Graph:
    if spec.startswith("dataset:"):
        return load_dataset(spec.split(":", 1)[1])
    if spec == "-":
        return parse_edge_list(sys.stdin.read())
    with open(spec, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _input_graph(args) -> Graph:
    if getattr(args, "dataset", None):
        return load_dataset(args.dataset)
    if getattr(args, "input", None):
        return _read_graph_spec(args.input)
    raise PreconditionError("no input graph: pass a file, '-', or --dataset")


def _parse_id_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise EdgeListParseError(f"expected integer ids, got {text!r}", 1) from None


def _parse_parts(text: str) -> list[list[int]]:
    return [_parse_id_list(chunk) for chunk in text.split("|") if chunk.strip()]


def _budget(args) -> Budget:
    ms = args.time_budget_ms
    if ms is None:
        env = os.environ.get("MODLEX_BUDGET_MS")
        ms = float(env) if env else None
    return Budget(time_ms=ms)


def _graph_payload(g: Graph) -> dict:
    payload = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if g.labels is not None:
        payload["labels"] = list(g.labels)
    return payload


def _witness_certificate(witnesses) -> dict:
    return {
        "type": "isometric-witness-family",
        "witnesses": {str(k): sorted(w.members) for k, w in sorted(witnesses.items())},
    }


# -- subcommand handlers ------------------------------------------------------


def _cmd_check_dp(args, out: dict) -> int:
    g = _input_graph(args)
    report = ndp_set(g, budget=_budget(args), max_enum_size=args.max_subset_size)
    out["result"] = {"dp": report.is_dp, "ndp": sorted(report.ndp)}
    out["certificate"] = _witness_certificate(report.witness)
    return EXIT_OK if report.is_dp else EXIT_PROPERTY_FALSE


def _cmd_check_sdp(args, out: dict) -> int:
    g = _input_graph(args)
    order = sdp_order(g, budget=_budget(args))
    out["result"] = {"sdp": order is not None}
    if order is not None:
        out["certificate"] = {"type": "deletion-order", "order": list(order.order)}
        return EXIT_OK
    return EXIT_PROPERTY_FALSE


def _cmd_ndp(args, out: dict) -> int:
    g = _input_graph(args)
    report = ndp_set(g, budget=_budget(args), max_enum_size=args.max_subset_size)
    out["result"] = {"ndp": sorted(report.ndp)}
    out["certificate"] = _witness_certificate(report.witness)
    return EXIT_OK


def _cmd_modules(args, out: dict) -> int:
    g = _input_graph(args)
    if args.subset:
        from .modular import is_module

        members = _parse_id_list(args.subset)
        out["result"] = {"subset": sorted(members), "is_module": is_module(g, members)}
        return EXIT_OK
    partition = maximal_modular_partition(g)
    out["result"] = {
        "parts": [list(p) for p in partition.parts],
        "part_sizes": [len(p) for p in partition.parts],
        "k2_case": partition.k2_case,
    }
    return EXIT_OK


def _cmd_quotient(args, out: dict) -> int:
    g = _input_graph(args)
    qg = quotient(g, modular_partition(g, _parse_parts(args.parts)))
    out["result"] = {
        **_graph_payload(qg.graph),
        "parts": [list(p) for p in qg.partition.parts],
        "part_of": list(qg.part_of),
    }
    return EXIT_OK


def _cmd_minquotient(args, out: dict) -> int:
    g = _input_graph(args)
    qg = minimal_quotient(g)
    out["result"] = {
        **_graph_payload(qg.graph),
        "parts": [list(p) for p in qg.partition.parts],
        "part_of": list(qg.part_of),
        "k2_case": qg.partition.k2_case,
    }
    return EXIT_OK


def _family_from_args(args) -> GraphFamily:
    base = _read_graph_spec(args.base)
    default = _read_graph_spec(args.component) if args.component else None
    components = {}
    overrides = {}
    for item in args.component_at or []:
        if "=" not in item:
            raise PreconditionError(f"--component-at expects V=SPEC, got {item!r}")
        v, spec = item.split("=", 1)
        overrides[int(v)] = _read_graph_spec(spec)
    for v in range(base.n):
        if v in overrides:
            components[v] = overrides[v]
        elif default is not None:
            components[v] = default
        else:
            raise PreconditionError(f"no component graph for base vertex {v}")
    return GraphFamily(base=base, components=components)


def _cmd_lexprod(args, out: dict) -> int:
    fam = _family_from_args(args)
    prod = generalized_lex_product(fam)
    out["result"] = {
        **_graph_payload(prod.graph),
        "kind": prod.kind,
        "vertices": [list(p) for p in prod.pairs],
    }
    return EXIT_OK


def _cmd_cartprod(args, out: dict) -> int:
    g = _read_graph_spec(args.left)
    h = _read_graph_spec(args.right)
    prod = cartesian_product(g, h)
    out["result"] = {
        **_graph_payload(prod.graph),
        "kind": prod.kind,
        "vertices": [list(p) for p in prod.pairs],
    }
    return EXIT_OK


def _cmd_transfer_check(args, out: dict) -> int:
    fam = _family_from_args(args)
    prod = generalized_lex_product(fam)
    members = _parse_id_list(args.subset)
    verdict = isometry_transfer_check(prod, members)
    pi = project_pi(prod, members)
    out["result"] = {
        "isometric": verdict,
        "projection": sorted(pi.members),
        "mode": "diameter" if len(pi) == 1 else "projection",
    }
    return EXIT_OK


def _cmd_dataset(args, out: dict) -> int:
    g = load_dataset(args.name)
    text = emit_edge_list(g)
    out["result"] = {**_graph_payload(g), "name": args.name, "edge_list": text}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return EXIT_OK


def _cmd_export_dot(args, out: dict) -> int:
    g = _input_graph(args)
    partition = None
    if args.partition == "maximal":
        partition = maximal_modular_partition(g)
    elif args.partition:
        partition = modular_partition(g, _parse_parts(args.partition))
    dot = emit_dot(g, partition=partition)
    out["result"] = {"dot": dot}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dot)
    return EXIT_OK


def _verify_certificate(args, out: dict) -> int:
    g = _input_graph(args)
    with open(args.certificate, "r", encoding="utf-8") as fh:
        envelope = json.load(fh)
    cert = envelope.get("certificate")
    if not cert:
        raise PreconditionError("file contains no certificate to verify")
    failures: list[str] = []
    if cert.get("type") == "isometric-witness-family":
        for key, members in cert.get("witnesses", {}).items():
            if len(members) != int(key):
                failures.append(f"order {key}: wrong size")
            elif not reference.naive_is_isometric(g, members):
                failures.append(f"order {key}: not isometric")
    elif cert.get("type") == "deletion-order":
        order = cert.get("order", [])
        if sorted(order) != list(range(g.n)):
            failures.append("order does not enumerate all vertices")
        else:
            alive = set(range(g.n))
            for v in order:
                alive.discard(v)
                if alive and not reference.naive_is_isometric(g, alive):
                    failures.append(f"prefix ending at {v}: remainder not isometric")
                    break
    else:
        raise PreconditionError(f"unknown certificate type {cert.get('type')!r}")
    out["result"] = {"valid": not failures, "failures": failures}
    return EXIT_OK


def _probe_cartesian_conjecture(args, out: dict) -> int:
    """Search for a dp pair whose Cartesian product is not dp. The general
    statement is undecided; this only reports over the enumerated range."""
    cap = args.max_vertices
    budget = _budget(args)
    dp_graphs = []
    for n in range(1, cap + 1):
        for g in connected_graphs(n):
            if ndp_set(g, budget=budget).is_dp:
                dp_graphs.append(g)
    checked = 0
    for i, g in enumerate(dp_graphs):
        for h in dp_graphs[i:]:
            prod = cartesian_product(g, h)
            checked += 1
            if not ndp_set(prod.graph, budget=budget).is_dp:
                out["result"] = {
                    "counterexample_found": True,
                    "pairs_checked": checked,
                    "left": [list(e) for e in g.edges],
                    "right": [list(e) for e in h.edges],
                }
                return EXIT_OK
    out["result"] = {
        "counterexample_found": False,
        "pairs_checked": checked,
        "max_vertices": cap,
    }
    return EXIT_OK


def _self_check_battery(args, out: dict) -> int:
    """Cross-check fast paths against the naive reference on the bundled
    datasets and a sweep of small graphs."""
    checks: list[dict] = []

    def record(name: str, ok: bool) -> None:
        checks.append({"check": name, "passed": bool(ok)})

    expected_counts = {"fig1": 10, "fig2": 6, "fig3": 44, "fig3-quotient": 21}
    for name, n in expected_counts.items():
        record(f"dataset {name} vertex count", load_dataset(name).n == n)
    fig1 = load_dataset("fig1")
    record("fig1 edge count", fig1.edge_count == 30)

    for n in range(2, 6):
        for g in connected_graphs(n):
            report = ndp_set(g)
            if report.ndp != frozenset(reference.brute_force_ndp(g)):
                record(f"ndp oracle equivalence at n={n}", False)
                break
        else:
            record(f"ndp oracle equivalence at n={n}", True)

    big = load_dataset("fig3-quotient")
    report = ndp_set(big)
    record(
        "fig3-quotient witnesses re-verified naively",
        all(
            reference.naive_is_isometric(big, w.members)
            for w in report.witness.values()
        ),
    )
    out["result"] = {"checks": checks, "all_passed": all(c["passed"] for c in checks)}
    return EXIT_OK


def _cmd_verify(args, out: dict) -> int:
    if args.certificate:
        return _verify_certificate(args, out)
    if args.conjecture_cartesian_dp:
        return _probe_cartesian_conjecture(args, out)
    return _self_check_battery(args, out)


# -- parser -------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent JSON output")
    common.add_argument(
        "--time-budget-ms",
        type=float,
        default=None,
        help="wall-clock budget; overruns exit 4 (env: MODLEX_BUDGET_MS)",
    )
    common.add_argument(
        "--max-subset-size",
        type=int,
        default=None,
        help="cap on exhaustive subset enumeration sizes",
    )

    single = argparse.ArgumentParser(add_help=False)
    single.add_argument("input", nargs="?", help="edge-list file, '-', or dataset:NAME")
    single.add_argument("--dataset", choices=dataset_names(), help="bundled dataset")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--base", required=True, help="base graph spec")
    family.add_argument("--component", help="default component graph spec")
    family.add_argument(
        "--component-at",
        action="append",
        metavar="V=SPEC",
        help="component override for one base vertex (repeatable)",
    )

    parser = argparse.ArgumentParser(
        prog="modlex",
        description="Modular decomposition, graph products, and distance preservation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("check-dp", parents=[common, single], help="decide the dp property")
    sub.add_parser("check-sdp", parents=[common, single], help="decide the sdp property")
    sub.add_parser("ndp", parents=[common, single], help="orders with no isometric subgraph")
    p = sub.add_parser("modules", parents=[common, single], help="maximal modular partition")
    p.add_argument("--subset", help="instead: test whether these ids form a module")
    p = sub.add_parser("quotient", parents=[common, single], help="quotient by a partition")
    p.add_argument("--parts", required=True, help="partition, e.g. '0,1|2|3,4'")
    sub.add_parser("minquotient", parents=[common, single], help="the minimal quotient")
    sub.add_parser("lexprod", parents=[common, family], help="generalised lexicographic product")
    p = sub.add_parser("cartprod", parents=[common], help="Cartesian product")
    p.add_argument("left")
    p.add_argument("right")
    p = sub.add_parser(
        "transfer-check",
        parents=[common, family],
        help="isometry of a product subset via its projection",
    )
    p.add_argument("--subset", required=True, help="product vertex ids")
    p = sub.add_parser("verify", parents=[common, single], help="re-verification utilities")
    p.add_argument("--certificate", help="JSON envelope whose certificate to re-check")
    p.add_argument(
        "--conjecture-cartesian-dp",
        action="store_true",
        help="probe dp-pair Cartesian products for a non-dp example",
    )
    p.add_argument("--max-vertices", type=int, default=4)
    p = sub.add_parser("export-dot", parents=[common, single], help="DOT rendering")
    p.add_argument("--partition", help="'maximal' or explicit parts '0,1|2'")
    p.add_argument("--out", help="also write raw DOT to this file")
    p = sub.add_parser("dataset", parents=[common], help="emit a bundled dataset")
    p.add_argument("name", choices=dataset_names())
    p.add_argument("--out", help="also write the edge list to this file")

    return parser


_HANDLERS = {
    "check-dp": _cmd_check_dp,
    "check-sdp": _cmd_check_sdp,
    "ndp": _cmd_ndp,
    "modules": _cmd_modules,
    "quotient": _cmd_quotient,
    "minquotient": _cmd_minquotient,
    "lexprod": _cmd_lexprod,
    "cartprod": _cmd_cartprod,
    "transfer-check": _cmd_transfer_check,
    "verify": _cmd_verify,
    "export-dot": _cmd_export_dot,
    "dataset": _cmd_dataset,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    out: dict = {"command": args.command, "result": None}
    start = time.monotonic()
    try:
        code = _HANDLERS[args.command](args, out)
    except EdgeListParseError as exc:
        out["error"] = str(exc)
        code = EXIT_USAGE
    except FileNotFoundError as exc:
        out["error"] = str(exc)
        code = EXIT_USAGE
    except PreconditionError as exc:
        out["error"] = str(exc)
        code = EXIT_PRECONDITION
    except BudgetExceededError as exc:
        out["error"] = str(exc)
        out["indeterminate"] = True
        code = EXIT_BUDGET
    out["timing"] = {"seconds": round(time.monotonic() - start, 6)}
    indent = 2 if getattr(args, "pretty", False) else None
    print(json.dumps(out, indent=indent))
    return code


if __name__ == "__main__":
    sys.exit(main())
