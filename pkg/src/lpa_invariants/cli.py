"""Command-line front end.

Subcommands: `cayley`, `rose`, `stemmed-rose` write graph JSON;
`invariants` reports the full invariant bundle of a graph; `classify`
runs the Kirchberg-Phillips decision on a pair (exit code encodes the
verdict); `table` tabulates the cyclic-Cayley-graph invariants;
`monoid` runs the box-monoid oracle; `validate` checks graph JSON.

Exit codes: 0 success/Isomorphic, 2 malformed input or flags,
3 NotIsomorphic, 4 Unknown, 5 NotApplicable.  All errors go to the
error stream as one line prefixed `error:`.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO

from .classify import EXIT_CODES, canonical_form, cayley_class, kp_decide, sign_of
from .graphs import (
    Graph,
    adjacency_matrix,
    cayley_graph,
    graph_from_dict,
    graph_to_dict,
    pis_report,
    rose_graph,
    stemmed_rose_graph,
)
from .intlinalg import det_exact, smith_normal_form
from .ktheory import b_matrix, cokernel_pointed
from .monoid import crosscheck_cokernel, default_bound, mstar_group, presentation, saturate

SCHEMA_VERSION = 1
_TABLE_CAP = 500
_MAX_PRINTED_CLASSES = 100


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _CliError(message)


def _load_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise _CliError(f"{path} is not valid JSON: {exc}") from None
    try:
        return graph_from_dict(data)
    except ValueError as exc:
        raise _CliError(f"{path}: {exc}") from None


def _write_graph(g: Graph, path: str | None, out: IO[str]) -> None:
    text = json.dumps(graph_to_dict(g), indent=2) + "\n"
    if path is None:
        out.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def invariant_report(g: Graph) -> dict:
    """All invariants of one graph as a JSON-ready dict."""
    b = b_matrix(g)
    decomposition = smith_normal_form(b)
    k0 = cokernel_pointed(g)
    det = det_exact(b)
    pis = pis_report(g)
    canonical = canonical_form(g)
    return {
        "schema": SCHEMA_VERSION,
        "graph": {"vertices": g.n_vertices, "edges": g.n_edges},
        "adjacency": [list(row) for row in adjacency_matrix(g).entries],
        "b_matrix": [list(row) for row in b.entries],
        "snf_diagonal": list(decomposition.d),
        "k0_factors": list(k0.group.factors),
        "vertex_images": [list(img.coords) for img in k0.vertex_images],
        "distinguished": list(k0.distinguished.coords),
        "det": det,
        "det_sign": sign_of(det),
        "pis": {
            "sink_free": pis.sink_free,
            "condition_L": pis.condition_L,
            "cofinal": pis.cofinal,
            "has_cycle": pis.has_cycle,
            "purely_infinite_simple": pis.purely_infinite_simple,
            "witnesses": [[kind, _jsonable(w)] for kind, w in pis.witnesses],
        },
        "canonical": (
            {"n": canonical.n, "d": canonical.d, "label": canonical.label}
            if canonical
            else None
        ),
    }


def _jsonable(value):
    if isinstance(value, tuple):
        return list(value)
    return value


def _print_invariants_text(report: dict, out: IO[str]) -> None:
    out.write(
        f"graph: {report['graph']['vertices']} vertices, "
        f"{report['graph']['edges']} edges\n"
    )
    out.write(f"adjacency: {report['adjacency']}\n")
    out.write(f"b_matrix: {report['b_matrix']}\n")
    out.write(f"snf_diagonal: {report['snf_diagonal']}\n")
    out.write(f"k0_factors: {_factors_str(report['k0_factors'])}\n")
    out.write(f"vertex_images: {report['vertex_images']}\n")
    out.write(f"distinguished: {report['distinguished']}\n")
    out.write(f"det: {report['det']}  ({report['det_sign']})\n")
    pis = report["pis"]
    out.write(
        "pis: sink_free={sink_free} condition_L={condition_L} cofinal={cofinal} "
        "has_cycle={has_cycle} purely_infinite_simple={purely_infinite_simple}\n".format(
            **pis
        )
    )
    for kind, witness in pis["witnesses"]:
        out.write(f"  witness {kind}: {witness}\n")
    canonical = report["canonical"]
    out.write(f"canonical: {canonical['label'] if canonical else 'NONE'}\n")


def _factors_str(factors) -> str:
    return "(" + ",".join(str(d) for d in factors) + ")"


def _cmd_cayley(args, out, err) -> int:
    _write_graph(cayley_graph(args.n), args.out, out)
    return 0


def _cmd_rose(args, out, err) -> int:
    _write_graph(rose_graph(args.n), args.out, out)
    return 0


def _cmd_stemmed_rose(args, out, err) -> int:
    _write_graph(stemmed_rose_graph(args.n, args.d), args.out, out)
    return 0


def _cmd_invariants(args, out, err) -> int:
    report = invariant_report(_load_graph(args.file))
    if args.json:
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        _print_invariants_text(report, out)
    return 0


def _cmd_classify(args, out, err) -> int:
    verdict = kp_decide(_load_graph(args.file_a), _load_graph(args.file_b))
    if args.json:
        payload = {
            "schema": SCHEMA_VERSION,
            "outcome": verdict.outcome,
            "trace": [list(item) for item in verdict.trace],
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(f"outcome: {verdict.outcome}\n")
        for check, result in verdict.trace:
            out.write(f"  {check}: {result}\n")
    return EXIT_CODES[verdict.outcome]


def _table_rows(max_n: int) -> list[dict]:
    rows = []
    for n in range(1, max_n + 1):
        g = cayley_graph(n)
        k0 = cokernel_pointed(g)
        det = det_exact(b_matrix(g))
        canonical = canonical_form(g)
        rows.append(
            {
                "n": n,
                "k0_factors": list(k0.group.factors),
                "det": det,
                "det_sign": sign_of(det),
                "class_id": cayley_class(n).class_id,
                "canonical": canonical.label if canonical else None,
            }
        )
    return rows


def _cmd_table(args, out, err) -> int:
    if args.max < 1:
        raise _CliError("--max must be at least 1")
    if args.max > _TABLE_CAP and not args.force:
        raise _CliError(
            f"--max {args.max} exceeds the cap of {_TABLE_CAP}; pass --force to override"
        )
    rows = _table_rows(args.max)
    if args.format == "json":
        payload = {"schema": SCHEMA_VERSION, "rows": rows}
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write("| n | k0_factors | det | det_sign | class | canonical |\n")
        out.write("|---:|---|---:|---|---|---|\n")
        for row in rows:
            out.write(
                "| {n} | {factors} | {det} | {sign} | {cls} | {canonical} |\n".format(
                    n=row["n"],
                    factors=_factors_str(row["k0_factors"]),
                    det=row["det"],
                    sign=row["det_sign"],
                    cls=row["class_id"],
                    canonical=row["canonical"] or "-",
                )
            )
    return 0


def _cmd_monoid(args, out, err) -> int:
    g = _load_graph(args.file)
    pres = presentation(g)
    bound = args.bound if args.bound is not None else default_bound(pres)
    classes = saturate(pres, bound)
    group = mstar_group(classes)
    crosscheck = crosscheck_cokernel(g, bound)
    reps = classes.representatives()
    shown = reps[:_MAX_PRINTED_CLASSES]
    if args.json:
        payload = {
            "schema": SCHEMA_VERSION,
            "bound": classes.bound,
            "stabilized": classes.stabilized,
            "classes": classes.class_count,
            "nonzero_classes": classes.nonzero_class_count,
            "representatives": [list(r) for r in shown],
            "group": (
                "NOT_CLOSED"
                if isinstance(group, str)
                else {
                    "order": group.order,
                    "element_class_ids": list(group.element_class_ids),
                    "identity_class": group.identity_class,
                    "invariant_factors": list(group.invariant_factors()),
                    "table": [list(row) for row in group.table],
                }
            ),
            "crosscheck": crosscheck,
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write(f"bound: {classes.bound}\n")
        out.write(f"stabilized: {classes.stabilized}\n")
        out.write(f"classes: {classes.class_count}\n")
        for i, rep in enumerate(shown):
            out.write(f"  class {i}: representative {list(rep)}\n")
        if len(reps) > len(shown):
            out.write(f"  ... ({len(reps) - len(shown)} more classes)\n")
        if isinstance(group, str):
            out.write("group: NOT_CLOSED\n")
        else:
            out.write(
                f"group: order {group.order}, invariant factors "
                f"{_factors_str(group.invariant_factors())}, "
                f"identity class {group.identity_class}\n"
            )
            for cid, row in zip(group.element_class_ids, group.table):
                out.write(f"  {cid} + .: {list(row)}\n")
        out.write(f"crosscheck: {crosscheck}\n")
    return 0


def _cmd_validate(args, out, err) -> int:
    g = _load_graph(args.file)
    out.write(f"ok: {g.n_vertices} vertices, {g.n_edges} edges\n")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="lpainv", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cayley", help="write the Cayley graph of Z/nZ as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_cayley)

    p = sub.add_parser("rose", help="write the rose with n petals as JSON")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_rose)

    p = sub.add_parser(
        "stemmed-rose", help="write the stemmed rose (d-1 stem edges, n loops)"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_stemmed_rose)

    p = sub.add_parser("invariants", help="report all invariants of a graph")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("classify", help="Kirchberg-Phillips decision for a pair")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("table", help="tabulate cyclic Cayley graph invariants")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=("md", "json"), default="md")
    p.add_argument("--force", action="store_true", help="allow --max beyond the cap")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("monoid", help="box saturation of the graph monoid")
    p.add_argument("file")
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_monoid)

    p = sub.add_parser("validate", help="check a graph JSON file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    return parser


def run(argv, stdout: IO[str] | None = None, stderr: IO[str] | None = None) -> int:
    """Run one CLI invocation; returns the exit code."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _CliError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except SystemExit as exc:  # --help and argparse-internal exits
        return int(exc.code or 0)
    try:
        return args.func(args, out, err)
    except _CliError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
