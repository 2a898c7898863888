"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import graph as gr
from .checks import DEFAULT_SEED, CheckResult, all_passed, run_checks
from .coulson import QuadratureConfig, coulson_energies
from .energy import EnergyReport, energy_report
from .errors import ConvergenceError, GraphParseError, SeidelError
from .graph_io import parse_graph, read_graphs, write_edge_list
from .spectral import abs_matrix, eigen_decompose, seidel_matrix

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3

FAMILY_HELP = "Kn:<n>, Krs:<r>,<s>, paley:<q>, fig1, petersen-mod"


class UsageError(Exception):
    pass


def family_graph(spec: str) -> gr.Graph:
    """Build a graph from an inline family spec such as ``Kn:4`` or ``paley:13``."""
    spec = spec.strip()
    if spec == "fig1":
        return gr.figure1_order6()
    if spec == "petersen-mod":
        return gr.modified_petersen()
    m = re.fullmatch(r"Kn:(\d+)", spec)
    if m:
        return gr.complete_graph(int(m.group(1)))
    m = re.fullmatch(r"Krs:(\d+),(\d+)", spec)
    if m:
        return gr.complete_bipartite(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"paley:(\d+)", spec)
    if m:
        return gr.paley_graph(int(m.group(1)))
    raise UsageError(f"unknown family spec {spec!r}; expected one of {FAMILY_HELP}")


def is_family_spec(spec: str) -> bool:
    return bool(re.fullmatch(r"fig1|petersen-mod|Kn:\d+|Krs:\d+,\d+|paley:\d+", spec.strip()))


def load_source(source: str) -> gr.Graph:
    if source == "-":
        return parse_graph(sys.stdin.read())
    if is_family_spec(source):
        try:
            return family_graph(source)
        except SeidelError as exc:
            raise UsageError(str(exc)) from None
    path = Path(source)
    if not path.is_file():
        raise UsageError(f"{source!r} is neither a readable file nor a family spec ({FAMILY_HELP})")
    graphs = read_graphs(path)
    if len(graphs) != 1:
        raise UsageError(f"{source} holds {len(graphs)} graphs; use 'check --corpus' for multi-graph files")
    return graphs[0][1]


def quadrature_config(args) -> QuadratureConfig:
    try:
        return QuadratureConfig(target_tol=args.coulson_tol, panels=args.coulson_panels, budget=args.coulson_budget)
    except SeidelError as exc:
        raise UsageError(str(exc)) from None


def report_dict(report: EnergyReport, checks=()) -> dict:
    return {
        "n": report.n,
        "per_vertex": report.per_vertex,
        "total": report.total,
        "upper_bound": report.upper_bound,
        "holder_lower": report.lower_bounds,
        "constancy": {"tag": report.constancy.tag, "params": list(report.constancy.params)},
        "checks": [c.as_dict() for c in checks],
    }


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def emit(text: str, out: str | None = None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _constancy_text(report: EnergyReport) -> str:
    params = ", ".join(f"{p:.6f}" for p in report.constancy.params)
    return f"{report.constancy.tag}({params})" if params else report.constancy.tag


def cmd_gen(args):
    try:
        g = family_graph(args.family)
    except SeidelError as exc:
        raise UsageError(str(exc)) from None
    emit(write_edge_list(g), args.out)
    return EXIT_OK


def cmd_energy(args):
    report = energy_report(load_source(args.source))
    if args.json:
        emit(dump_json(report_dict(report)), args.out)
        return EXIT_OK
    lines = [f"{'vertex':>6}  {'energy':>12}"]
    lines += [f"{i:>6}  {e:12.6f}" for i, e in enumerate(report.per_vertex)]
    lines.append(f"total   {report.total:.6f}")
    lines.append(f"constancy {_constancy_text(report)}")
    emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_bounds(args):
    report = energy_report(load_source(args.source))
    u = report.upper
    if args.json:
        checks = [
            CheckResult("upper_bound", all(e <= report.upper_bound + 1e-9 for e in report.per_vertex), ""),
            CheckResult("holder_lower_bound",
                        all(e >= lb - 1e-9 for e, lb in zip(report.per_vertex, report.lower_bounds)), ""),
            CheckResult("upper_equality_iff", u.consistent,
                        f"exact S^2=(n-1)I: {u.equality_exact}; numeric: {u.equality_numeric}"),
        ]
        emit(dump_json(report_dict(report, checks)), args.out)
        return EXIT_OK
    lines = [f"{'vertex':>6}  {'holder_lower':>12}  {'energy':>12}  {'sqrt(n-1)':>12}  attains"]
    for i, (e, lb) in enumerate(zip(report.per_vertex, report.lower_bounds)):
        lines.append(f"{i:>6}  {lb:12.6f}  {e:12.6f}  {report.upper_bound:12.6f}  {'yes' if u.attained[i] else 'no'}")
    lines.append(f"S^2 = (n-1)I exactly: {'yes' if u.equality_exact else 'no'}")
    emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_spectrum(args):
    g = load_source(args.source)
    d = eigen_decompose(seidel_matrix(g))
    diag = abs_matrix(d).diagonal().tolist()
    if args.json:
        emit(dump_json({"n": g.n, "eigenvalues": d.eigenvalues.tolist(), "abs_diag": diag, "sweeps": d.sweeps}), args.out)
        return EXIT_OK
    lines = ["eigenvalues (ascending):"]
    lines += [f"  {x:.6f}" for x in d.eigenvalues]
    lines.append(f"jacobi sweeps: {d.sweeps}")
    emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_coulson(args):
    g = load_source(args.source)
    cfg = quadrature_config(args)
    vertices = None if args.vertex is None else [args.vertex]
    if args.vertex is not None and not 0 <= args.vertex < g.n:
        raise UsageError(f"vertex {args.vertex} out of range for n={g.n}")
    results = coulson_energies(seidel_matrix(g), vertices, cfg)
    if args.json:
        rows = [
            {
                "vertex": r.vertex,
                "value": r.value,
                "spectral_reference": r.spectral_reference,
                "agreement": r.agreement,
                "abs_error_estimate": r.abs_error_estimate,
                "nodes_used": r.nodes_used,
                "warning": r.warning,
            }
            for r in results
        ]
        emit(dump_json(rows), args.out)
        return EXIT_OK
    lines = [f"{'vertex':>6}  {'coulson':>12}  {'spectral':>12}  {'agreement':>10}  nodes"]
    for r in results:
        lines.append(f"{r.vertex:>6}  {r.value:12.6f}  {r.spectral_reference:12.6f}  {r.agreement:10.2e}  {r.nodes_used}")
    if results and results[0].warning:
        lines.append(f"warning: {results[0].warning}")
    emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def parse_vertex_set(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad vertex set {text!r}; expected comma-separated integers") from None


def cmd_switch(args):
    g = load_source(args.source)
    x = parse_vertex_set(args.set)
    bad = [v for v in x if not 0 <= v < g.n]
    if bad:
        raise UsageError(f"vertex {bad[0]} out of range for n={g.n}")
    emit(write_edge_list(gr.seidel_switch(g, x)), args.out)
    return EXIT_OK


def cmd_complement(args):
    emit(write_edge_list(gr.complement(load_source(args.source))), args.out)
    return EXIT_OK


def _corpus_graphs(directory: str):
    root = Path(directory)
    if not root.is_dir():
        raise UsageError(f"corpus {directory!r} is not a directory")
    graphs = []
    for path in sorted(p for p in root.iterdir() if p.is_file()):
        graphs.extend(read_graphs(path))
    return graphs


def cmd_check(args):
    if (args.source is None) == (args.corpus is None):
        raise UsageError("check needs exactly one of SOURCE or --corpus DIR")
    cfg = quadrature_config(args)
    if args.corpus is not None:
        items = _corpus_graphs(args.corpus)
    else:
        items = [(args.source, load_source(args.source))]
    ok = True
    rows, lines = [], []
    for name, g in items:
        results = run_checks(g, seed=args.seed, cfg=cfg)
        ok &= all_passed(results)
        if args.json:
            row = report_dict(energy_report(g), results)
            if args.corpus is not None:
                row = {"source": name, **row}
            rows.append(row)
        else:
            lines.append(f"== {name} (n={g.n}, m={g.num_edges})")
            lines += [f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in results]
            n_fail = sum(not r.passed for r in results)
            lines.append(f"{len(results) - n_fail}/{len(results)} checks passed")
    if args.json:
        emit(dump_json(rows if args.corpus is not None else rows[0]), args.out)
    else:
        emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _add_common(p, source=True):
    if source:
        p.add_argument("source", help=f"graph file (edge list or graph6), '-' for stdin, or family spec: {FAMILY_HELP}")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--out", help="write output to this path instead of stdout")


def _add_quadrature(p):
    p.add_argument("--coulson-tol", type=float, default=1e-8, help="successive-estimate tolerance")
    p.add_argument("--coulson-panels", type=int, default=64, help="initial panel count")
    p.add_argument("--coulson-budget", type=int, default=2 ** 20, help="max integrand evaluations")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seidel-energy", description="Vertex Seidel energy of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family graph as an edge list")
    p.add_argument("family", help=FAMILY_HELP)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("energy", help="per-vertex and total Seidel energy")
    _add_common(p)
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("bounds", help="upper and Hoelder lower bounds per vertex")
    _add_common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("spectrum", help="Seidel eigenvalues")
    _add_common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("coulson", help="Coulson integral cross-check")
    _add_common(p)
    p.add_argument("--vertex", type=int, help="single vertex (default: all)")
    _add_quadrature(p)
    p.set_defaults(func=cmd_coulson)

    p = sub.add_parser("switch", help="Seidel switch with respect to a vertex set")
    p.add_argument("source")
    p.add_argument("--set", required=True, help="comma-separated vertex indices, may be empty")
    p.add_argument("--out")
    p.set_defaults(func=cmd_switch)

    p = sub.add_parser("complement", help="graph complement")
    p.add_argument("source")
    p.add_argument("--out")
    p.set_defaults(func=cmd_complement)

    p = sub.add_parser("check", help="run the invariant battery")
    p.add_argument("source", nargs="?")
    p.add_argument("--corpus", help="directory of edge-list / graph6 files")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED, help="seed for switching subsets")
    _add_quadrature(p)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphParseError, OSError) as exc:
        print(f"seidel-energy: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"seidel-energy: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
