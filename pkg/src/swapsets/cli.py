"""Command-line front end.

Subcommands mirror the library: exact computation, certificate
verification, tree analysis, the constructive families, the domination DP,
exhaustive scans, and the grid density report.  Graph arguments accept a
path to an edge-list file or a generator token (pN, cN, k1,N, grid:MxN).

Exit codes: 0 success or verified; 1 verification failed or counterexample
found; 2 usage or input error; 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .exact_solver import BUDGET_EXCEEDED, dd_m_exact
from .graph_core import (
    BudgetError,
    ContractError,
    Graph,
    GraphParseError,
    SwapCertificate,
    certificate_violations,
    cycle_graph,
    format_graph,
    grid_graph,
    independence_number,
    parse_graph,
    path_graph,
    star_graph,
    verify_certificate,
)
from .tree_algorithms import (
    alpha_equals_ddm,
    alpha_equals_eviction,
    dd_m_tree,
    four_way_equality,
    is_weak_tree,
    s_weight,
    weak_reduction,
)

_GENERATORS = re.compile(r"^(?:p(\d+)|c(\d+)|k1,(\d+)|grid:(\d+)x(\d+))$")


def load_graph(token: str) -> Graph:
    """A generator token, or failing that a path to an edge-list file."""
    m = _GENERATORS.match(token)
    if m:
        p, c, k, gm, gn = m.groups()
        if p is not None:
            return path_graph(int(p))
        if c is not None:
            return cycle_graph(int(c))
        if k is not None:
            return star_graph(int(k))
        return grid_graph(int(gm), int(gn))
    with open(token, encoding="utf-8") as fh:
        return parse_graph(fh.read())


@dataclass
class CliConfig:
    subcommand: str
    fmt: str = "json"
    budget: int = 100_000_000

    def __post_init__(self):
        if self.budget <= 0:
            raise ContractError("budget must be positive")


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _cmd_compute(args) -> int:
    g = load_graph(args.graph)
    result = dd_m_exact(g, node_budget=args.budget)
    _emit(result.to_json_dict())
    return 3 if result.status == BUDGET_EXCEEDED else 0


def _cmd_verify(args) -> int:
    g = load_graph(args.graph)
    with open(args.certificate, encoding="utf-8") as fh:
        payload = json.load(fh)
    if "certificate" in payload:
        payload = payload["certificate"]
    cert = SwapCertificate.from_json_dict(payload)
    violations = certificate_violations(g, cert)
    _emit({"verified": not violations, "violations": list(violations)})
    return 0 if not violations else 1


def _cmd_tree(args) -> int:
    t = load_graph(args.graph)
    weight, partition = s_weight(t)
    reduction = weak_reduction(t)
    result = dd_m_tree(t)
    _emit({
        "n": t.n,
        "is_weak": is_weak_tree(t),
        "s_weight": weight,
        "partition": partition.to_json_dict(),
        "reduction_removed": len(reduction.removed),
        "result": result.to_json_dict(),
        "gamma_equals_alpha": four_way_equality(t),
        "alpha_equals_swap_number": alpha_equals_ddm(t),
        "alpha_equals_eviction": alpha_equals_eviction(t),
    })
    return 0


def _construct_payload(g: Graph, cert: SwapCertificate, extra=None) -> dict:
    payload = {
        "graph": {"n": g.n, "edges": [list(e) for e in g.edges]},
        "certificate": cert.to_json_dict(),
        "size": cert.size(),
    }
    if extra:
        payload.update(extra)
    return payload


def _cmd_construct(args) -> int:
    from .grid_constructions import grid_swap_construct, p3_strip_swap
    from .product_constructions import product_swap_general, star_product_swap

    board = None
    if args.family == "star-product":
        g, cert = star_product_swap(args.a, args.b)
        payload = _construct_payload(g, cert)
    elif args.family == "grid":
        g, cert, board = grid_swap_construct(args.a, args.b)
        payload = _construct_payload(g, cert, {"board": board.render().split("\n")})
    elif args.family == "p3-strip":
        g, cert = p3_strip_swap(args.a)
        payload = _construct_payload(g, cert)
    else:
        g, cert = product_swap_general(load_graph(args.g), load_graph(args.h))
        payload = _construct_payload(g, cert)
    if not verify_certificate(g, cert):
        _emit({"error": "construction failed verification"})
        return 1
    if args.format == "ascii" and board is not None:
        sys.stdout.write(board.render() + "\n")
    else:
        _emit(payload)
    if args.graph_out:
        with open(args.graph_out, "w", encoding="utf-8") as fh:
            fh.write(format_graph(g))
    if args.cert_out:
        with open(args.cert_out, "w", encoding="utf-8") as fh:
            json.dump(cert.to_json_dict(), fh, sort_keys=True, indent=2)
            fh.write("\n")
    return 0


def _cmd_gamma_dp(args) -> int:
    from .grid_constructions import gamma_grid_dp

    gamma = gamma_grid_dp(args.rows, args.cols)
    _emit({"rows": args.rows, "cols": args.cols, "gamma": gamma})
    return 0


def _scan_alpha2(max_n: int) -> tuple[dict, int]:
    from .small_alpha import alpha2_swap, canonical_id, enumerate_connected_graphs

    checked = 0
    failures = []
    for n in range(4, max_n + 1):
        for g in enumerate_connected_graphs(n):
            if independence_number(g) != 2:
                continue
            checked += 1
            try:
                cert = alpha2_swap(g)
                ok = verify_certificate(g, cert) and cert.size() <= 2
            except AssertionError:
                ok = False
            if not ok:
                failures.append({"graph_id": canonical_id(g),
                                 "graph": format_graph(g)})
    out = {"scan": "alpha2", "max_n": max_n, "checked": checked,
           "failures": failures}
    return out, (1 if failures else 0)


def _scan_alpha3(max_n: int) -> tuple[dict, int]:
    from .small_alpha import (alpha3_bound_check, alpha3_swap_with_stage,
                              canonical_id, enumerate_connected_graphs)

    checked = 0
    stages: dict = {}
    no_swap = []
    for n in range(6, max_n + 1):
        for g in enumerate_connected_graphs(n):
            if independence_number(g) != 3:
                continue
            checked += 1
            try:
                cert, stage = alpha3_swap_with_stage(g)
                stages[stage] = stages.get(stage, 0) + 1
                assert verify_certificate(g, cert)
            except AssertionError:
                no_swap.append({"graph_id": canonical_id(g),
                                "graph": format_graph(g)})
    bound = alpha3_bound_check(max_n)
    out = {
        "scan": "alpha3", "max_n": max_n, "checked": checked,
        "stages": stages,
        "existence_counterexamples": no_swap,
        "bound_records": len(bound.records),
        "bound_counterexamples": bound.counterexamples,
    }
    return out, (1 if no_swap or bound.counterexamples else 0)


def _cmd_scan(args) -> int:
    if args.kind == "alpha2":
        out, code = _scan_alpha2(args.max_n)
    elif args.kind == "alpha3":
        out, code = _scan_alpha3(args.max_n)
    elif args.kind == "conjectures":
        from .small_alpha import conjecture_scan

        report = conjecture_scan(args.max_n)
        if args.format == "tsv":
            sys.stdout.write(report.to_tsv())
            return 1 if report.counterexamples else 0
        out = report.to_json_dict()
        code = 1 if report.counterexamples else 0
    else:
        from .product_constructions import product_question_scan

        report = product_question_scan(args.max_n)
        if args.format == "tsv":
            sys.stdout.write(report.to_tsv())
            return 1 if report.gg_violations else 0
        out = {
            "scan": "products", "max_vertices": args.max_n,
            "pairs": len(report.rows),
            "gamma_gamma_violations": report.gg_violations,
            "counterexamples": report.counterexamples,
        }
        code = 1 if report.gg_violations else 0
    _emit(out)
    return code


def _cmd_report(args) -> int:
    from .grid_constructions import grid_density_report

    sys.stdout.write(grid_density_report(args.max_mn).to_tsv())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swapsets",
        description="Disjoint dominating set pairs with perfect matchings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exact swap number of a graph")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=100_000_000)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")

    p = sub.add_parser("tree", help="tree analysis: weight, reduction, flags")
    p.add_argument("graph")

    p = sub.add_parser("construct", help="build a certificate for a family")
    fam = p.add_subparsers(dest="family", required=True)
    sp = fam.add_parser("star-product")
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)
    gr = fam.add_parser("grid")
    gr.add_argument("a", type=int)
    gr.add_argument("b", type=int)
    st = fam.add_parser("p3-strip")
    st.add_argument("a", type=int)
    pr = fam.add_parser("product")
    pr.add_argument("g")
    pr.add_argument("h")
    for q in (sp, gr, st, pr):
        q.add_argument("--format", choices=("json", "ascii"), default="json")
        q.add_argument("--graph-out")
        q.add_argument("--cert-out")

    p = sub.add_parser("gamma-dp", help="exact grid domination number")
    p.add_argument("rows", type=int)
    p.add_argument("cols", type=int)

    p = sub.add_parser("scan", help="exhaustive small-graph scans")
    p.add_argument("kind", choices=("alpha2", "alpha3", "conjectures", "products"))
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--format", choices=("json", "tsv"), default="json")

    p = sub.add_parser("report", help="density tables")
    p.add_argument("target", choices=("grid",))
    p.add_argument("--max-mn", type=int, default=12)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    handlers = {
        "compute": _cmd_compute,
        "verify": _cmd_verify,
        "tree": _cmd_tree,
        "construct": _cmd_construct,
        "gamma-dp": _cmd_gamma_dp,
        "scan": _cmd_scan,
        "report": _cmd_report,
    }
    try:
        if getattr(args, "budget", 1) <= 0 or getattr(args, "max_n", 1) <= 0:
            print("error: budgets must be positive", file=sys.stderr)
            return 2
        return handlers[args.command](args)
    except (GraphParseError, ContractError, FileNotFoundError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
