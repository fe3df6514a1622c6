#!/usr/bin/env python3

# Software Name: planarrecolor
# SPDX-FileCopyrightText: Copyright (c) 2021 Orange
# SPDX-License-Identifier: Apache 2.0
#
# This software is distributed under the Apache 2.0;
# see the NOTICE file for more details.
#
# Author: Fabien BATTELLO <fabien.battello@orange.com> et al.

"""
This module contains the planarrecolor command line.

Results are printed to stdout as deterministic JSON, diagnostics go to stderr.
Exit codes : 0 success, 1 invalid input or sequence, 2 valid but not k-good, 3 no configuration found,
4 theorem violation or failed catalog check, 5 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from typing import Callable, Dict, List, Optional, Sequence

from rich.table import Table

from planarrecolor.catalog.certificate import verify_certificate
from planarrecolor.catalog.loader import builtin_catalog, reference_trees
from planarrecolor.catalog.matcher import match_all, match_configuration
from planarrecolor.cli.generate import gen_instance, gen_tree, gen_triangulation
from planarrecolor.discharging.audit import audit
from planarrecolor.discharging.charges import RULES, charge_history
from planarrecolor.engine.exceptions import TheoremViolation
from planarrecolor.engine.planar import recolor_planar
from planarrecolor.exceptions import RecolorError
from planarrecolor.model.coloring import Coloring, ListAssignment
from planarrecolor.model.exceptions import FormatError
from planarrecolor.model.io import (
    COLORING_NAMES,
    GraphDocument,
    dumps,
    load_document,
    parse_graph_document,
    parse_sequence,
    save,
    sequence_to_dict,
)
from planarrecolor.model.validation import is_k_good, validate_sequence
from planarrecolor.oracle.exceptions import OracleBudgetError
from planarrecolor.oracle.reconfig import (
    bfs_shortest_sequence,
    bounded_shortest_sequence,
    build_reconfiguration_graph,
    diameter,
)
from planarrecolor.settings import ENV_SEED, seed_from_env, globalsettings
from planarrecolor.utils.console import Console

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NOT_K_GOOD = 2
EXIT_NO_CONFIGURATION = 3
EXIT_VIOLATION = 4
EXIT_CAP = 5


def _emit(payload, out: Optional[str] = None) -> None:
    if out:
        save(payload, out)
    else:
        sys.stdout.write(dumps(payload))


def _lists(args, doc: GraphDocument) -> ListAssignment:
    if getattr(args, "lists", None):
        payload = load_document(args.lists)
        if "lists" not in payload:
            raise FormatError(f"{args.lists} has no lists")
        lists = ListAssignment(tuple(payload["lists"]))
        if len(lists) != doc.graph.n:
            raise FormatError(f"{len(lists)} lists for {doc.graph.n} vertices")
        return lists
    if doc.lists is None:
        raise FormatError("no lists given : use --lists or a graph document with lists")
    return doc.lists


def _coloring(spec: Optional[str], doc: GraphDocument, default: str) -> Coloring:
    """A coloring named in the graph document (alpha, beta) or read from a JSON file."""
    name = spec or default
    if name in doc.colorings:
        return doc.colorings[name]
    if name in COLORING_NAMES:
        raise FormatError(f"graph document has no {name} coloring")
    payload = load_document(name)
    colors = payload.get("coloring", payload.get(default))
    if colors is None:
        raise FormatError(f"{name} holds neither a coloring nor {default}")
    coloring = Coloring(tuple(colors))
    if len(coloring) != doc.graph.n:
        raise FormatError(f"coloring {name} has {len(coloring)} entries for {doc.graph.n} vertices")
    return coloring


def _seed(args) -> Optional[int]:
    env = seed_from_env()
    if env is not None:
        logger.debug(f"{ENV_SEED}={env} overrides --seed")
        return env
    return args.seed


def cmd_recolor(args, console: Console) -> int:
    doc = parse_graph_document(args.graph)
    lists = _lists(args, doc)
    a, b = _coloring(args.from_, doc, "alpha"), _coloring(args.to, doc, "beta")
    trace = recolor_planar(doc.graph, lists, a, b, k=args.k)
    payload = sequence_to_dict(trace.produced)
    payload.update(
        {"k": trace.k, "k_good": trace.k_good, "max_count": trace.max_count, "deferrals": len(trace.deferral_log)}
    )
    _emit(payload, args.out)
    if not trace.k_good:
        console.error(f"sequence is valid but recolors a vertex {trace.max_count} times, more than {trace.k}")
        return EXIT_NOT_K_GOOD
    console.success(f"{trace.length} steps, max count {trace.max_count}")
    return EXIT_OK


def cmd_verify(args, console: Console) -> int:
    doc = parse_graph_document(args.graph)
    lists = _lists(args, doc)
    seq = parse_sequence(args.seq)
    target = _coloring(args.target, doc, "beta")
    report = validate_sequence(doc.graph, lists, seq, target)
    k = args.k if args.k is not None else globalsettings.k
    payload = report.to_dict()
    payload.update({"k": k, "k_good": report.ok and is_k_good(report, k)})
    _emit(payload)
    if not report.ok:
        console.report(report)
        return EXIT_INVALID
    if not is_k_good(report, k):
        console.warn(f"valid, but a vertex is recolored {report.max_count} times, more than {k}")
        return EXIT_NOT_K_GOOD
    console.report(report)
    return EXIT_OK


def cmd_oracle(args, console: Console) -> int:
    doc = parse_graph_document(args.graph)
    g, lists = doc.graph, _lists(args, doc)
    if args.max_count is not None:
        a, b = _coloring(args.from_, doc, "alpha"), _coloring(args.to, doc, "beta")
        seq = bounded_shortest_sequence(g, lists, a, b, args.max_count)
        _emit({"reachable": seq is not None, "max_count": args.max_count, "sequence": seq})
        return EXIT_OK
    rg = build_reconfiguration_graph(g, lists, args.cap)
    console.message(f"reconfiguration graph : {rg.n_nodes} colorings, {rg.n_edges} moves")
    if args.diameter:
        d = diameter(rg)
        _emit({"diameter": "inf" if d == math.inf else d, "nodes": rg.n_nodes, "edges": rg.n_edges})
        return EXIT_OK
    a, b = _coloring(args.from_, doc, "alpha"), _coloring(args.to, doc, "beta")
    seq = bfs_shortest_sequence(rg, a, b)
    _emit({"reachable": seq is not None, "length": None if seq is None else len(seq), "sequence": seq})
    return EXIT_OK


def cmd_detect(args, console: Console) -> int:
    g = parse_graph_document(args.graph).graph
    if args.all:
        matches = match_all(g)
    else:
        first = match_configuration(g)
        matches = [first] if first is not None else []
    _emit({"found": bool(matches), "matches": matches})
    if not matches:
        console.warn(f"no configuration found in {g!r}")
        return EXIT_NO_CONFIGURATION
    console.success(", ".join(m.pattern.id for m in matches))
    return EXIT_OK


def _charge_table(g, history) -> Table:
    table = Table(title="charges")
    table.add_column("vertex", justify="right")
    table.add_column("degree", justify="right")
    for name in ("initial",) + RULES:
        table.add_column(name, justify="right")
    for v in range(g.n):
        table.add_row(str(v), str(g.degree(v)), *(str(state[v]) for state in history))
    return table


def cmd_discharge(args, console: Console) -> int:
    g = parse_graph_document(args.graph).graph
    report = audit(g)
    payload = report.to_dict()
    if args.trace:
        history = charge_history(g)
        payload["history"] = history
        console.print(_charge_table(g, history))
    _emit(payload)
    if not report.ok:
        console.error(f"theorem violation : {report!r}")
        return EXIT_VIOLATION
    console.report(report)
    return EXIT_OK


def cmd_gen(args, console: Console) -> int:
    seed = _seed(args)
    if args.tree:
        g = gen_tree(args.n, seed)
    else:
        g = gen_triangulation(args.n, seed, args.min_degree)
    if args.instance:
        payload = gen_instance(g, args.list_size, seed)
    else:
        payload = GraphDocument(g)
    _emit(payload, args.out)
    console.success(f"generated {g!r}")
    return EXIT_OK


def cmd_catalog_check(args, console: Console) -> int:
    k = args.k if args.k is not None else globalsettings.k
    entries = builtin_catalog()
    reports = [verify_certificate(entry.certificate, k) for entry in entries]
    trees = {name: verify_certificate(cert, k) for name, cert in reference_trees().items()}

    table = Table(title=f"catalog at k = {k}")
    for column in ("id", "vertices", "stages", "minimal k", "worst bound", "status"):
        table.add_column(column)
    for entry, report in zip(entries, reports):
        status = "[green]closes" if report.ok else f"[red]fails at {report.offending}"
        table.add_row(
            entry.id,
            str(len(entry.vertices)),
            str(len(entry.certificate.stages)),
            str(report.minimal_k),
            str(report.worst),
            status,
        )
    console.print(table)

    all_close = all(r.ok for r in reports) and all(r.ok for r in trees.values())
    _emit({"k": k, "count": len(entries), "all_close": all_close, "entries": reports, "reference_trees": trees})
    if not all_close:
        console.error("some certificates do not close")
        return EXIT_VIOLATION
    console.success(f"{len(entries)} configurations close at k = {k}")
    return EXIT_OK


def _add_instance_args(p: argparse.ArgumentParser, colorings: bool = True) -> None:
    p.add_argument("--graph", required=True, help="graph document (JSON)")
    p.add_argument("--lists", help="lists file, by default the lists of the graph document")
    if colorings:
        p.add_argument("--from", dest="from_", help="alpha, beta or a coloring file, by default alpha")
        p.add_argument("--to", help="alpha, beta or a coloring file, by default beta")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="planarrecolor", description="List recoloring of planar graphs")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("-q", "--quiet", action="store_true", help="no diagnostics on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recolor", help="recolor a planar graph from one coloring to another")
    _add_instance_args(p)
    p.add_argument("--k", type=int, help="per-vertex budget checked on the result")
    p.add_argument("--out", help="write the sequence here instead of stdout")
    p.set_defaults(func=cmd_recolor)

    p = sub.add_parser("verify", help="validate a recoloring sequence")
    _add_instance_args(p, colorings=False)
    p.add_argument("--seq", required=True, help="sequence document")
    p.add_argument("--target", help="alpha, beta or a coloring file, by default beta")
    p.add_argument("--k", type=int, help="per-vertex budget")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force reconfiguration graph on small instances")
    _add_instance_args(p)
    p.add_argument("--diameter", action="store_true", help="print the diameter instead of a path")
    p.add_argument("--cap", type=int, help="maximum product of list sizes")
    p.add_argument("--max-count", type=int, help="shortest sequence recoloring each vertex at most this often")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("detect", help="find a reducible configuration")
    p.add_argument("--graph", required=True, help="graph document (JSON)")
    p.add_argument("--all", action="store_true", help="report every catalog entry that occurs")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("discharge", help="run the discharging rules and the audit")
    p.add_argument("--graph", required=True, help="graph document (JSON)")
    p.add_argument("--trace", action="store_true", help="include the charges after every rule")
    p.set_defaults(func=cmd_discharge)

    p = sub.add_parser("gen", help="generate a triangulation, a tree or a full instance")
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument("--seed", type=int, help=f"random seed, overridden by {ENV_SEED}")
    p.add_argument("--min-degree", type=int, default=3, choices=(3, 4, 5))
    p.add_argument("--tree", action="store_true", help="a random tree instead of a triangulation")
    p.add_argument("--instance", action="store_true", help="add random lists and two colorings")
    p.add_argument("--list-size", type=int, help="list size of the instance")
    p.add_argument("--out", help="write here instead of stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("catalog-check", help="verify every certificate of the builtin catalog")
    p.add_argument("--k", type=int, help="budget to check")
    p.set_defaults(func=cmd_catalog_check)
    return parser


HANDLED: Dict[type, int] = {
    OracleBudgetError: EXIT_CAP,
    TheoremViolation: EXIT_VIOLATION,
    RecolorError: EXIT_INVALID,
}


def run(argv: Sequence[str] = None) -> int:
    """Parses argv, runs one subcommand and returns its exit code."""
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.getLogger("planarrecolor").setLevel(logging.DEBUG)
    console = Console(verbose=not args.quiet, stderr=True)
    handler: Callable[..., int] = args.func
    try:
        return handler(args, console)
    except RecolorError as e:
        code = next(code for cls, code in HANDLED.items() if isinstance(e, cls))
        console.error(f"{type(e).__name__}: {e}")
        return code
    except OSError as e:
        console.error(str(e))
        return EXIT_INVALID


def main(argv: List[str] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
