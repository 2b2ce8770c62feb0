"""Command-line surface.

Subcommands: ingest, rank, metric, distances, cluster, reproduce-gf.
Exit codes: 0 success, 1 reproduction failure, 2 usage error, 3 data error.
The FOCKRANK_PRECISION environment variable overrides the number of
display decimals (default 4); rounding is half-to-even everywhere.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

import numpy as np

from fockrank import __version__, boolquery, gfdata, lsimetric, rankers
from fockrank.corpus import build_index, left_matrix, query_vector, right_matrix
from fockrank.eigenkit import svd_via_gram
from fockrank.errors import (
    BadP,
    ClauseExplosion,
    FockrankError,
    QuerySyntaxError,
    UnsupportedQueryShape,
)
from fockrank.formats import format_fixed, matrix_csv_lines, read_corpus_jsonl
from fockrank.lsimetric import cluster_by_ron, distance_matrix, metric_tensor
from fockrank.rankers import RankedList

EXIT_OK = 0
EXIT_REPRODUCE_FAIL = 1
EXIT_USAGE = 2
EXIT_DATA = 3

_USAGE_ERRORS = (QuerySyntaxError, UnsupportedQueryShape, BadP, ClauseExplosion)

_MODELS = ("vsm", "boolean", "prob", "fuzzy", "fuzzy-alg", "extbool", "docspace", "lsi")
_AST_MODELS = frozenset({"boolean", "fuzzy", "fuzzy-alg", "extbool"})

#: flags that only make sense for specific models
_MODEL_FLAGS = {
    "measure": {"vsm"},
    "weights": {"vsm", "extbool"},
    "p": {"extbool"},
    "rank_r": {"lsi"},
}


class _UsageError(Exception):
    pass


def _rank_r_arg(value: str):
    if value == "auto":
        return "auto"
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("expected a positive integer or 'auto'")
    if n < 1:
        raise argparse.ArgumentTypeError("rank must be >= 1 or 'auto'")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fockrank",
        description="Occupation-number retrieval models over a JSON Lines corpus.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    ingest = sub.add_parser("ingest", help="build the index and report corpus statistics")
    ingest.add_argument("--corpus", required=True, help="JSON Lines corpus file")
    ingest.add_argument("--dump", choices=("A", "L", "R", "idf"),
                        help="export a matrix as headerless CSV instead of the summary")
    ingest.add_argument("--out", help="output file (default stdout)")

    rank = sub.add_parser("rank", help="score documents against a query")
    rank.add_argument("--corpus", required=True)
    rank.add_argument("--model", required=True, choices=_MODELS)
    rank.add_argument("--query", required=True,
                      help="boolean expression for boolean/fuzzy/fuzzy-alg/extbool, "
                           "free text otherwise")
    rank.add_argument("--measure", choices=("cosine", "cosine-squared"),
                      help="vsm only (default cosine)")
    rank.add_argument("--weights", choices=(rankers.TF_IDF, rankers.GOOD_PERFORMER, rankers.BINARY),
                      help="vsm and extbool only (defaults: tf_idf / binary)")
    rank.add_argument("--p", type=float, help="extbool only: Minkowski order, 'inf' allowed (default 2)")
    rank.add_argument("--rank-r", type=_rank_r_arg, help="lsi only: retained rank (default auto)")
    rank.add_argument("--explain", action="store_true",
                      help="print the parsed query and its DNF to stderr")
    rank.add_argument("--format", choices=("tsv", "csv", "json"), default="tsv")
    rank.add_argument("--out")

    metric = sub.add_parser("metric", help="export the metric tensor as CSV")
    metric.add_argument("--corpus", required=True)
    metric.add_argument("--rank-r", type=_rank_r_arg, default="auto")
    metric.add_argument("--out")

    dist = sub.add_parser("distances", help="export the unit-sphere distance matrix as CSV")
    dist.add_argument("--corpus", required=True)
    dist.add_argument("--rank-r", type=_rank_r_arg, default="auto")
    dist.add_argument("--with-query", metavar="TEXT",
                      help="include the query as an extra point labeled 'q'")
    dist.add_argument("--out")

    cluster = sub.add_parser("cluster", help="cluster points by neighborhood radius")
    cluster.add_argument("--corpus", required=True)
    cluster.add_argument("--ron", type=float, required=True, help="neighborhood radius")
    cluster.add_argument("--rank-r", type=_rank_r_arg, default="auto")
    cluster.add_argument("--with-query", metavar="TEXT")
    cluster.add_argument("--out")

    sub.add_parser("reproduce-gf",
                   help="recompute the bundled worked example and check every reference value")
    return parser


def _precision() -> int:
    raw = os.environ.get("FOCKRANK_PRECISION")
    if raw is None:
        return 4
    try:
        places = int(raw)
    except ValueError:
        places = -1
    if places < 0:
        raise _UsageError(f"FOCKRANK_PRECISION must be a non-negative integer, got {raw!r}")
    return places


def _write_lines(lines: Sequence[str], out: Optional[str]) -> None:
    text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_ranked(ranked: RankedList, fmt: str, places: int, model: str,
                 out: Optional[str]) -> None:
    if fmt == "json":
        payload = {
            "model": model,
            "results": [
                {"doc_id": doc_id, "score": score, "display": format_fixed(score, places)}
                for doc_id, score in ranked
            ],
        }
        _write_lines([json.dumps(payload)], out)
        return
    sep = "\t" if fmt == "tsv" else ","
    _write_lines([f"{doc_id}{sep}{format_fixed(score, places)}" for doc_id, score in ranked], out)


def _check_model_flags(args) -> None:
    for flag, models in _MODEL_FLAGS.items():
        if getattr(args, flag) is not None and args.model not in models:
            pretty = "--" + flag.replace("_", "-")
            raise _UsageError(f"{pretty} is not valid for model {args.model!r}")
    if args.model == "vsm" and args.weights == rankers.BINARY:
        raise _UsageError("--weights binary is only available for model 'extbool'")


def _load_index(path: str):
    return build_index(read_corpus_jsonl(path))


def _cmd_ingest(args, places: int) -> int:
    index = _load_index(args.corpus)
    if args.dump is None:
        total = sum(index.doc_lengths)
        _write_lines([
            f"documents: {index.N}",
            f"terms: {index.t}",
            f"tokens: {total}",
        ], args.out)
        return EXIT_OK
    if args.dump == "A":
        matrix = index.A
    elif args.dump == "L":
        matrix = left_matrix(index)
    elif args.dump == "R":
        matrix = right_matrix(index)
    else:
        matrix = index.idf.reshape(1, -1)
    _write_lines(matrix_csv_lines(matrix, places), args.out)
    return EXIT_OK


def _cmd_rank(args, places: int) -> int:
    _check_model_flags(args)
    index = _load_index(args.corpus)
    model = args.model

    ast = None
    if model in _AST_MODELS:
        ast = boolquery.parse(args.query)
        if args.explain:
            print(f"query: {boolquery.print_query(ast)}", file=sys.stderr)
            dnf = boolquery.to_dnf(ast)
            dnf_ast = dnf.to_ast()
            rendered = boolquery.print_query(dnf_ast) if dnf_ast else "<unsatisfiable>"
            print(f"dnf:   {rendered}", file=sys.stderr)

    if model == "vsm":
        measure = (args.measure or "cosine").replace("-", "_")
        ranked = rankers.vsm_rank(index, args.query,
                                  scheme=args.weights or rankers.TF_IDF, measure=measure)
    elif model == "boolean":
        selected = set(rankers.boolean_select(index, ast))
        ranked = RankedList.from_scores(
            (doc_id, 1.0 if doc_id in selected else 0.0) for doc_id in index.doc_ids)
    elif model == "prob":
        ranked = rankers.prob_rank(index, args.query)
    elif model == "fuzzy":
        ranked = rankers.fuzzy_rank_minmax(index, ast)
    elif model == "fuzzy-alg":
        mu = rankers.fuzzy_membership_corr(index, rankers.keyword_correlation(index))
        ranked = rankers.fuzzy_rank_algebraic(index, ast, mu)
    elif model == "extbool":
        p = args.p if args.p is not None else 2.0
        ranked = rankers.extbool_rank(index, ast, p, scheme=args.weights or rankers.BINARY)
    elif model == "docspace":
        ranked = rankers.docspace_rank(index, args.query)
    else:  # lsi
        ranked = lsimetric.lsi_rank(index, args.query, args.rank_r or "auto")

    _emit_ranked(ranked, args.format, places, model, args.out)
    return EXIT_OK


def _cmd_metric(args, places: int) -> int:
    index = _load_index(args.corpus)
    factors = svd_via_gram(index.A, args.rank_r)
    g = metric_tensor(factors)
    _write_lines(matrix_csv_lines(g.g, places), args.out)
    return EXIT_OK


def _labeled_points(index, with_query: Optional[str]):
    points = []
    if with_query is not None:
        points.append(("q", query_vector(index, with_query).to_array()))
    points.extend((doc_id, index.A[:, col]) for col, doc_id in enumerate(index.doc_ids))
    return points


def _cmd_distances(args, places: int) -> int:
    index = _load_index(args.corpus)
    factors = svd_via_gram(index.A, args.rank_r)
    g = metric_tensor(factors)
    dm = distance_matrix(g, _labeled_points(index, args.with_query))
    lines = ["," + ",".join(dm.labels)]
    for i, label in enumerate(dm.labels):
        lines.append(label + "," + ",".join(format_fixed(x, places) for x in dm.d[i]))
    _write_lines(lines, args.out)
    return EXIT_OK


def _cmd_cluster(args, places: int) -> int:
    index = _load_index(args.corpus)
    factors = svd_via_gram(index.A, args.rank_r)
    g = metric_tensor(factors)
    dm = distance_matrix(g, _labeled_points(index, args.with_query))
    assignment = cluster_by_ron(dm, args.ron)
    _write_lines([" ".join(members) for members in assignment.clusters], args.out)
    return EXIT_OK


# ------------------------------------------------------- worked example

def _reproduce_checks() -> list[tuple[str, bool, str]]:
    """Recompute every reference value of the bundled example.

    Tolerances: 5e-4 on singular values, 5e-3 on similarity coefficients
    and metric entries, 2e-3 on distances; rankings, clusterings, idf and
    memberships compare exactly after 3-decimal rounding.
    """
    checks: list[tuple[str, bool, str]] = []

    def add(name: str, ok: bool, detail: str = "") -> None:
        checks.append((name, ok, detail))

    index = build_index(gfdata.GF_DOCS)

    got_idf = tuple(round(float(x), 3) for x in index.idf)
    add("idf row (3 decimals)", got_idf == gfdata.GF_IDF_3DP, f"got {got_idf}")

    mu = rankers.fuzzy_membership(index).mu
    mu_ok = True
    detail = ""
    for col, doc_id in enumerate(index.doc_ids):
        got = tuple(round(float(x), 3) for x in mu[:, col])
        if got != gfdata.GF_MEMBERSHIP_3DP[doc_id]:
            mu_ok = False
            detail = f"{doc_id}: got {got}"
            break
    add("membership table (3 decimals)", mu_ok, detail)

    fuzzy = rankers.fuzzy_rank_minmax(index, boolquery.parse(gfdata.GF_FUZZY_QUERY))
    got_fuzzy = {doc_id: round(score, 3) for doc_id, score in fuzzy}
    add("fuzzy min/max query scores (3 decimals)",
        got_fuzzy == gfdata.GF_FUZZY_SCORES_3DP, f"got {got_fuzzy}")

    L = left_matrix(index)
    add("term-term matrix", np.array_equal(L, np.array(gfdata.GF_LEFT_MATRIX)), "")

    factors = svd_via_gram(index.A, "auto")
    ref_s = np.array(gfdata.GF_SINGULAR_VALUES)
    s_ok = factors.r == len(ref_s) and np.all(np.abs(factors.S - ref_s) <= 5e-4)
    add("singular values (tol 5e-4)", bool(s_ok),
        f"got {tuple(round(float(s), 4) for s in factors.S)}")

    for r, ref in ((3, gfdata.GF_METRIC_R3), (2, gfdata.GF_METRIC_R2)):
        g = metric_tensor(factors, r).g
        diff = float(np.abs(g - np.array(ref)).max())
        add(f"metric tensor r={r} (tol 5e-3)", diff <= 5e-3, f"max entry diff {diff:.2e}")

    q = query_vector(index, gfdata.GF_QUERY).to_array()
    for r, ref_sc in ((3, gfdata.GF_LSI_SC_R3), (2, gfdata.GF_LSI_SC_R2)):
        g = metric_tensor(factors, r)
        sc = {doc_id: lsimetric.lsi_sc(g, index.A[:, col], q)
              for col, doc_id in enumerate(index.doc_ids)}
        worst = max(abs(sc[d] - ref_sc[d]) for d in ref_sc)
        add(f"similarity coefficients r={r} (tol 5e-3)", worst <= 5e-3,
            f"got {[round(sc[d], 4) for d in sorted(sc)]}")
        order = RankedList.from_scores(sc).doc_ids
        add(f"ranking order r={r}", order == gfdata.GF_LSI_ORDER, f"got {order}")

    g2 = metric_tensor(factors, 2)
    dm = distance_matrix(g2, _labeled_points(index, gfdata.GF_QUERY))
    dist_ok = True
    detail = ""
    for (x, y), ref in gfdata.GF_DISTANCES_R2.items():
        got = dm.value(x, y)
        if abs(got - ref) > 2e-3:
            dist_ok = False
            detail += f"d({x},{y}) = {got:.4f} vs {ref} (diff {abs(got - ref):.2e}); "
    add("distance table r=2 (tol 2e-3)", dist_ok, detail.strip())

    for ron, ref in ((0.52, gfdata.GF_CLUSTERS_RON_052), (0.2, gfdata.GF_CLUSTERS_RON_02)):
        got = cluster_by_ron(dm, ron).clusters
        add(f"clusters at ron={ron}", got == ref, f"got {got}")

    return checks


def _cmd_reproduce(args, places: int) -> int:
    checks = _reproduce_checks()
    failed = 0
    for name, ok, detail in checks:
        status = "PASS" if ok else "FAIL"
        line = f"{status}  {name}"
        if not ok and detail:
            line += f"  [{detail}]"
        print(line)
        failed += 0 if ok else 1
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_REPRODUCE_FAIL


_COMMANDS = {
    "ingest": _cmd_ingest,
    "rank": _cmd_rank,
    "metric": _cmd_metric,
    "distances": _cmd_distances,
    "cluster": _cmd_cluster,
    "reproduce-gf": _cmd_reproduce,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        places = _precision()
        return _COMMANDS[args.command](args, places)
    except _UsageError as exc:
        print(f"fockrank: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _USAGE_ERRORS as exc:
        print(f"fockrank: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FockrankError as exc:
        print(f"fockrank: error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
