"""Command-line front end.

    rankforge rank      --builtin gbpm [--alpha 0.85] [--format csv|json] [--out PATH]
    rankforge spectrum  --graph links.txt [--reversed]
    rankforge degrees   --builtin gbpm --fit
    rankforge perturb   --builtin gbpm --scenario edits.json

Exit codes: 0 ok, 1 usage, 2 input/parse error, 3 numerical failure.  On
failure a single JSON object is written to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import re
import sys
from pathlib import Path
from typing import Sequence

from .errors import InputError, InsufficientDataError, NumericalError, ParseError
from .gbpm import load_gbpm, load_gbpm_files
from .google import DEFAULT_ALPHA, GoogleMatrix, check_alpha
from .graph import DirectedGraph, degree_distribution, fit_powerlaw, parse_link_list, reverse
from .perturbation import Scenario, apply_scenario, diff_rankings
from .ranking import DEFAULT_MAX_ITER, DEFAULT_TOL, analyze, powerlaw_slope_annotation
from .spectrum import full_spectrum, spectral_stats, trace_check

log = logging.getLogger("rankforge")

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2
        raise UsageError(message)


def fmt(x: float) -> str:
    return format(float(x), ".15g")


def _num(x: float) -> float:
    return float(fmt(x))


# --------------------------------------------------------------------------
# input


def infer_node_count(text: str) -> int:
    ids = [int(t) for t in re.findall(r"\d+", text)]
    return max(ids, default=0)


def read_graph(path: str | Path) -> DirectedGraph:
    """Read a graph file: ``.json`` graph documents, anything else as link-list text.

    Link-list files carry no node count, so it is taken as the largest id seen.
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON: {exc.msg}", exc.lineno) from exc
        return DirectedGraph.from_json(data)
    return parse_link_list(text, infer_node_count(text))


def load_input(args: argparse.Namespace) -> DirectedGraph:
    if args.builtin is not None:
        if args.builtin == "gbpm-files":
            return load_gbpm_files().graph
        return load_gbpm().graph
    return read_graph(args.graph)


# --------------------------------------------------------------------------
# output


def render(fmt_name: str, metadata: dict, columns: Sequence[str], rows: Sequence[Sequence], json_body: dict | None = None) -> str:
    if fmt_name == "json":
        doc = {"metadata": metadata}
        if json_body is None:
            doc["rows"] = [dict(zip(columns, r)) for r in rows]
        else:
            doc.update(json_body)
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    buf = io.StringIO()
    for key, value in metadata.items():
        buf.write(f"# {key}={_meta_text(value)}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([fmt(v) if isinstance(v, float) else v for v in r])
    return buf.getvalue()


def _meta_text(value) -> str:
    if isinstance(value, float):
        return fmt(value)
    if isinstance(value, (list, tuple)):
        return " ".join(_meta_text(v) for v in value)
    return str(value)


def emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


# --------------------------------------------------------------------------
# commands


def cmd_rank(args: argparse.Namespace) -> int:
    g = load_input(args)
    a = analyze(g, args.alpha, args.tol, args.max_iter)
    pr, ch = a.pagerank, a.cheirank
    meta = {
        "n": g.n,
        "links": g.link_count,
        "alpha": args.alpha,
        "tol": args.tol,
        "iterations_pagerank": pr.iterations,
        "iterations_cheirank": ch.iterations,
        "kappa": _num(a.kappa),
    }
    try:
        nu = fit_powerlaw(degree_distribution(g, "in"))
        meta["nu_in"] = _num(nu)
        meta["expected_log_slope"] = _num(powerlaw_slope_annotation(nu))
    except InsufficientDataError:
        pass
    columns = ["index", "label", "P", "K", "Pstar", "Kstar", "K2"]
    rows = []
    for node in pr.by_rank:
        i = int(node) - 1
        rows.append(
            [i + 1, g.labels[i], _num(pr.p[i]), int(pr.k[i]), _num(ch.p[i]), int(ch.k[i]), int(a.twod.k2[i])]
        )
    emit(render(args.format, meta, columns, rows), args.out)
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace) -> int:
    g = load_input(args)
    if args.reversed:
        g = reverse(g)
    gm = GoogleMatrix.from_graph(g, args.alpha)
    s = full_spectrum(gm)
    fraction, lam2 = spectral_stats(s, 0.1)
    meta = {
        "n": g.n,
        "alpha": args.alpha,
        "matrix": "G*" if args.reversed else "G",
        "lambda2_modulus": _num(lam2),
        "fraction_above_0.1": _num(fraction),
        "trace_residual": _num(trace_check(gm, s)),
    }
    rows = [[_num(re_), _num(im), _num(mod)] for re_, im, mod in s.rows()]
    emit(render(args.format, meta, ["re", "im", "modulus"], rows), args.out)
    return EXIT_OK


def cmd_degrees(args: argparse.Namespace) -> int:
    g = load_input(args)
    meta: dict = {"n": g.n, "links": g.link_count}
    rows = []
    for direction in ("in", "out"):
        dist = degree_distribution(g, direction)
        rows.extend([direction, d, c] for d, c in dist.rows())
        if args.fit:
            try:
                meta[f"nu_{direction}"] = _num(fit_powerlaw(dist))
            except InsufficientDataError as exc:
                print(f"warning: {direction}-degree fit skipped: {exc}", file=sys.stderr)
    emit(render(args.format, meta, ["direction", "degree", "count"], rows), args.out)
    return EXIT_OK


def cmd_perturb(args: argparse.Namespace) -> int:
    if args.scenario is None:
        raise UsageError("perturb requires --scenario")
    g = load_input(args)
    try:
        data = json.loads(Path(args.scenario).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{args.scenario}: invalid JSON: {exc.msg}", exc.lineno) from exc
    scenario = Scenario.from_json(g, data)
    diff = diff_rankings(g, apply_scenario(scenario), args.alpha, args.tol, args.max_iter)
    report = diff.to_json()
    report["kappa_before"] = _num(report["kappa_before"])
    report["kappa_after"] = _num(report["kappa_after"])
    report["kendall_tau_pagerank"] = _num(report["kendall_tau_pagerank"])
    report["metadata"].update({"alpha": args.alpha, "tol": args.tol, "added": [list(x) for x in scenario.added], "removed": [list(x) for x in scenario.removed]})
    if args.format == "json":
        emit(json.dumps(report, indent=2) + "\n", args.out)
    else:
        meta = {k: v for k, v in report.items() if k not in ("nodes", "metadata")}
        meta.update({k: v for k, v in report["metadata"].items() if k not in ("added", "removed")})
        rows = [[r["node"], r["delta_k"], r["delta_kstar"], r["delta_k2"]] for r in report["nodes"]]
        emit(render("csv", meta, ["node", "delta_k", "delta_kstar", "delta_k2"], rows), args.out)
    return EXIT_OK


COMMANDS = {"rank": cmd_rank, "spectrum": cmd_spectrum, "degrees": cmd_degrees, "perturb": cmd_perturb}


def _alpha(text: str) -> float:
    try:
        return check_alpha(float(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _positive_float(text: str) -> float:
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return x


def _positive_int(text: str) -> int:
    x = int(text)
    if x < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return x


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="PATH", help="link-list text or JSON graph file")
    src.add_argument("--builtin", choices=["gbpm", "gbpm-files"], help="embedded corpus (gbpm-files reads the loose data files)")
    common.add_argument("--alpha", type=_alpha, default=DEFAULT_ALPHA)
    common.add_argument("--tol", type=_positive_float, default=DEFAULT_TOL)
    common.add_argument("--max-iter", type=_positive_int, default=DEFAULT_MAX_ITER)
    common.add_argument("--format", choices=["csv", "json"], default="csv")
    common.add_argument("--out", metavar="PATH", help="output file (default: stdout)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="rankforge", description="Google matrix ranking of directed graphs")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("rank", parents=[common], help="PageRank, CheiRank and 2DRank table")
    p = sub.add_parser("spectrum", parents=[common], help="eigenvalues of G")
    p.add_argument("--reversed", action="store_true", help="use G* of the link-reversed graph")
    p = sub.add_parser("degrees", parents=[common], help="in/out degree histograms")
    p.add_argument("--fit", action="store_true", help="append fitted power-law exponents")
    p = sub.add_parser("perturb", parents=[common], help="rank displacements under link edits")
    p.add_argument("--scenario", metavar="PATH", help='JSON {"add": [[s, t]], "remove": [[s, t]]}')
    return parser


def _fail(code: int, kind: str, message: str) -> int:
    print(json.dumps({"error": kind, "exit_code": code, "message": message}), file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return _fail(EXIT_USAGE, "UsageError", str(exc))
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        return _fail(EXIT_USAGE, "UsageError", str(exc))
    except (InputError, OSError) as exc:
        return _fail(EXIT_INPUT, type(exc).__name__, str(exc))
    except NumericalError as exc:
        return _fail(EXIT_NUMERIC, type(exc).__name__, str(exc))


if __name__ == "__main__":
    sys.exit(main())
