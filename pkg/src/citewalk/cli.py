"""Command-line front end.

Subcommands: compute (pair scores on a citation graph), authorsim
(author-level aggregation), eval (AUC reports and diagnostics), bench
(runtime sweeps on generated networks), gen-sbm (network generation).

Every run prints a JSON manifest (inputs hashed, full config, seed) and
writes it next to the primary output, so a run can be reproduced exactly.
Exit codes: 0 success, 2 bad input or configuration, 3 computation
refused by a size guard, 1 internal error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .authors import (
    AuthorProfile,
    author_similarity,
    build_collab_pairs,
    derive_collaborations,
    load_collaborations,
    load_corpus,
    select_author_papers,
)
from .errors import GuardExceeded, ParseError
from .evaluate import (
    align_scores,
    bootstrap_auc,
    degree_correlation,
    discipline_matrix,
    histogram_bins,
    log_transform,
    piecewise_fit,
)
from .exact import DEFAULT_MAX_NODES
from .graph import build_graph, clean_pipeline, load_edge_list
from .measures import default_workers, score_pairs, similarity_values
from .sbm import (
    BENCH_DENSE_GUARD,
    SBMSpec,
    generate_sbm,
    probs_for_mean_degree,
    run_benchmark,
    summarize_benchmark,
    write_benchmark_csv,
)
from .scores import MEASURES, read_pair_set, read_scores, write_scores
from .spectral import DENSE_CUTOFF
from .walks import WalkConfig

DEFAULT_STEPS = 10
DEFAULT_WALKERS = 1000
DEFAULT_MIN_DEGREE = 3
DEFAULT_BOOTSTRAP = 1000
PAIR_CAP = 5_000_000

# probability-valued measures are log-transformed for evaluation by default
LOG_MEASURES = ("walk_exact", "walk_estimate", "path_weight")


def _sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


def _emit_manifest(command: str, config: dict, inputs, outputs, extra: dict | None = None) -> None:
    manifest = {
        "command": command,
        "version": __version__,
        "config": config,
        "inputs": {str(p): _sha256(Path(p)) for p in inputs},
        "outputs": [str(p) for p in outputs],
    }
    if extra:
        manifest["report"] = extra
    text = json.dumps(manifest, indent=2, sort_keys=True)
    print(text)
    if outputs:
        Path(str(outputs[0]) + ".manifest.json").write_text(text + "\n")


def _check_overwrite(path: Path, force: bool) -> None:
    if path.exists() and not force:
        raise FileExistsError(f"{path} exists; rerun with --force to overwrite")


def _load_clean_graph(path: str, min_degree: int):
    g = build_graph(load_edge_list(path))
    if min_degree > 0:
        g = clean_pipeline(g, min_degree=min_degree)
    return g


def _walk_config(args) -> WalkConfig:
    return WalkConfig(steps=args.steps, walkers=args.walkers, seed=args.seed)


def _add_measure_options(sub, default_measure: str = "walk_exact") -> None:
    sub.add_argument("--measure", choices=MEASURES, default=default_measure)
    sub.add_argument("--steps", type=int, default=DEFAULT_STEPS, help="walk length")
    sub.add_argument("--walkers", type=int, default=DEFAULT_WALKERS, help="walkers per source")
    sub.add_argument("--dim", type=int, default=64, help="embedding dimension")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--workers", type=int, default=None, help="thread count (default: CITEWALK_WORKERS or cores)")
    sub.add_argument("--dense-cutoff", type=int, default=DENSE_CUTOFF, help="dense eigensolver below this many nodes")
    sub.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES, help="dense matrix size guard")


def _cmd_compute(args) -> int:
    out = Path(args.out)
    _check_overwrite(out, args.force)
    g = _load_clean_graph(args.graph, args.min_degree)
    inputs = [args.graph]
    if args.pairs:
        id_pairs = load_edge_list(args.pairs).records
        inputs.append(args.pairs)
    elif args.sources:
        sources = [s for s in args.sources.split(",") if s]
        id_pairs = [(s, t) for s in sources for t in g.ids if t != s]
    else:
        id_pairs = [(a, b) for i, a in enumerate(g.ids) for b in g.ids[i + 1 :]]
    if len(id_pairs) > PAIR_CAP:
        raise GuardExceeded(f"{len(id_pairs)} pairs exceed the {PAIR_CAP} pair cap")
    rows = score_pairs(
        g,
        args.measure,
        id_pairs,
        walk_cfg=_walk_config(args),
        dim=args.dim,
        workers=args.workers or default_workers(),
        dense_cutoff=args.dense_cutoff,
        max_nodes=args.max_nodes,
    )
    write_scores(out, rows, force=args.force)
    _emit_manifest(
        "compute",
        {
            "measure": args.measure,
            "steps": args.steps,
            "walkers": args.walkers,
            "dim": args.dim,
            "seed": args.seed,
            "min_degree": args.min_degree,
            "pair_source": args.pairs or args.sources or "all-pairs",
            "graph_nodes": g.node_count,
            "graph_edges": g.edge_count,
        },
        inputs,
        [out],
    )
    return 0


def _cmd_authorsim(args) -> int:
    out = Path(args.out)
    _check_overwrite(out, args.force)
    corpus = load_corpus(args.corpus)
    g = _load_clean_graph(args.graph, args.min_degree)
    inputs = [args.corpus, args.graph]

    pair_labels: dict[tuple[str, str], str] = {}
    if args.collab_task:
        if args.collab_file:
            collabs = load_collaborations(args.collab_file)
            inputs.append(args.collab_file)
        else:
            collabs = derive_collaborations(corpus)
        pair_set = build_collab_pairs(
            corpus, collabs, args.focal_year, window_years=args.window, seed=args.seed
        )
        author_pairs = [(a, b) for a, b, _ in pair_set.pairs]
        pair_labels = {(a, b): label for a, b, label in pair_set.pairs}
    elif args.pairs:
        author_pairs = load_edge_list(args.pairs).records
        inputs.append(args.pairs)
    else:
        raise ValueError("authorsim needs --pairs FILE or --collab-task")

    profiles: dict[str, AuthorProfile] = {}
    excluded: dict[str, str] = {}
    for author in sorted({a for pair in author_pairs for a in pair}):
        if author not in corpus.author_index:
            excluded[author] = "not in corpus"
            continue
        prof = select_author_papers(corpus, author, args.focal_year, window_years=args.window)
        if prof.empty:
            excluded[author] = "no first/last-authored papers in window"
            continue
        in_graph = tuple(p for p in prof.paper_ids if p in g.id_to_index)
        if not in_graph:
            excluded[author] = "profile papers missing from graph"
            continue
        profiles[author] = AuthorProfile(author, args.focal_year, in_graph)

    scored = [(a, b) for a, b in author_pairs if a in profiles and b in profiles]
    scored_set = set(scored)
    skipped = [(a, b) for a, b in author_pairs if (a, b) not in scored_set]
    include_shared = not args.exclude_shared
    wanted: list[tuple[str, str]] = []
    seen = set()
    for a, b in scored:
        for p in profiles[a].paper_ids:
            for q in profiles[b].paper_ids:
                if (not include_shared and p == q) or (p, q) in seen:
                    continue
                seen.add((p, q))
                wanted.append((p, q))
    table = {}
    if wanted:
        rows = score_pairs(
            g,
            args.measure,
            wanted,
            walk_cfg=_walk_config(args),
            dim=args.dim,
            workers=args.workers or default_workers(),
            dense_cutoff=args.dense_cutoff,
            max_nodes=args.max_nodes,
        )
        table = {(r.source_id, r.target_id): r.value for r in rows}

    out_rows = []
    for a, b in scored:
        value = author_similarity(
            profiles[a], profiles[b], lambda p, q: table[(p, q)], include_shared=include_shared
        )
        n_pairs = len(profiles[a].paper_ids) * len(profiles[b].paper_ids)
        if not include_shared:
            n_pairs -= len(set(profiles[a].paper_ids) & set(profiles[b].paper_ids))
        row = [a, b, repr(value), n_pairs]
        if pair_labels:
            row.append(pair_labels[(a, b)])
        out_rows.append(row)

    with open(out, "w", newline="") as fh:
        writer = csv.writer(fh)
        header = ["author_a", "author_b", "value", "paper_pairs"]
        if pair_labels:
            header.append("label")
        writer.writerow(header)
        writer.writerows(out_rows)

    _emit_manifest(
        "authorsim",
        {
            "measure": args.measure,
            "steps": args.steps,
            "walkers": args.walkers,
            "dim": args.dim,
            "seed": args.seed,
            "focal_year": args.focal_year,
            "window": args.window,
            "min_degree": args.min_degree,
            "include_shared": include_shared,
            "collab_task": bool(args.collab_task),
        },
        inputs,
        [out],
        extra={
            "excluded_authors": excluded,
            "scored_pairs": len(scored),
            "skipped_pairs": [list(p) for p in skipped],
        },
    )
    return 0


def _cmd_eval(args) -> int:
    out = Path(args.out)
    _check_overwrite(out, args.force)
    scores = read_scores(args.scores)
    if not scores:
        raise ValueError(f"{args.scores} holds no score rows")
    measures_present = sorted({s.measure for s in scores})
    if len(measures_present) > 1:
        raise ValueError(f"scores mix measures {measures_present}; evaluate one at a time")
    measure = measures_present[0]
    pair_set = read_pair_set(args.labels, provenance=args.provenance)
    values, is_pos = align_scores(pair_set, scores)
    zero_flags = {(s.source_id, s.target_id): s.is_zero_estimate for s in scores}
    zero_fraction = float(
        np.mean(
            [
                zero_flags.get((a, b), zero_flags.get((b, a), False))
                for a, b, _ in pair_set.pairs
            ]
        )
    )
    oriented = similarity_values(measure, values)
    use_log = measure in LOG_MEASURES and not args.no_log
    evaluated = log_transform(oriented) if use_log else oriented
    result = bootstrap_auc(
        evaluated[is_pos],
        evaluated[~is_pos],
        replicates=args.bootstrap,
        seed=args.seed,
        alpha=args.alpha,
    )
    report = {
        "measure": measure,
        "auc": result.auc,
        "ci_low": result.ci_low,
        "ci_high": result.ci_high,
        "bootstrap_replicates": result.replicates,
        "n_pairs": len(pair_set.pairs),
        "n_positive": int(is_pos.sum()),
        "zero_fraction": zero_fraction,
        "log_transform": use_log,
    }
    inputs = [args.scores, args.labels]
    outputs = [out]

    if args.entity_labels:
        inputs.append(args.entity_labels)
        tags = _read_entity_labels(args.entity_labels)
        pair_tags = []
        for a, b, _ in pair_set.pairs:
            if a not in tags or b not in tags:
                missing = a if a not in tags else b
                raise ValueError(f"entity {missing!r} missing from {args.entity_labels}")
            pair_tags.append((tags[a], tags[b]))
        ordering = args.matrix_order.split(",") if args.matrix_order else sorted(set(tags.values()))
        matrix = discipline_matrix(pair_tags, evaluated, ordering)
        report["discipline_ordering"] = ordering
        report["discipline_matrix"] = [[float(v) for v in row] for row in matrix]
        if args.matrix_out:
            matrix_path = Path(args.matrix_out)
            _check_overwrite(matrix_path, args.force)
            with open(matrix_path, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow([""] + ordering)
                for tag, row in zip(ordering, matrix):
                    writer.writerow([tag] + [repr(float(v)) for v in row])
            outputs.append(matrix_path)

    if args.degree_corr_graph:
        inputs.append(args.degree_corr_graph)
        g = build_graph(load_edge_list(args.degree_corr_graph))
        target_degrees = []
        for a, b, _ in pair_set.pairs:
            if b not in g.id_to_index:
                raise ValueError(f"pair target {b!r} not in {args.degree_corr_graph}")
            target_degrees.append(g.degrees[g.index_of(b)])
        report["degree_correlation"] = degree_correlation(evaluated, target_degrees)

    if args.piecewise_against:
        inputs.append(args.piecewise_against)
        other = read_scores(args.piecewise_against)
        other_measures = sorted({s.measure for s in other})
        if len(other_measures) != 1:
            raise ValueError("piecewise comparison file must hold a single measure")
        other_values, _ = align_scores(pair_set, other)
        other_oriented = similarity_values(other_measures[0], other_values)
        if other_measures[0] in LOG_MEASURES and not args.no_log:
            other_oriented = log_transform(other_oriented)
        fit = piecewise_fit(evaluated, other_oriented)
        report["piecewise"] = {
            "against_measure": other_measures[0],
            "slope_low": fit.slope_low,
            "intercept_low": fit.intercept_low,
            "slope_high": fit.slope_high,
            "intercept_high": fit.intercept_high,
            "split_value": fit.split_value,
        }

    if args.histogram_out:
        hist_path = Path(args.histogram_out)
        _check_overwrite(hist_path, args.force)
        counts, edges = histogram_bins(evaluated, bins=args.bins)
        with open(hist_path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["bin_low", "bin_high", "count"])
            for i, c in enumerate(counts):
                writer.writerow([repr(float(edges[i])), repr(float(edges[i + 1])), int(c)])
        outputs.append(hist_path)

    out.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
    _emit_manifest(
        "eval",
        {
            "bootstrap": args.bootstrap,
            "seed": args.seed,
            "alpha": args.alpha,
            "no_log": args.no_log,
            "provenance": args.provenance,
        },
        inputs,
        outputs,
    )
    return 0


def _read_entity_labels(path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    with open(path, newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or row[0].startswith("#"):
                continue
            if len(row) != 2:
                raise ParseError(f"{path}:{lineno}: expected 2 fields, got {len(row)}")
            out[row[0].strip()] = row[1].strip()
    if not out:
        raise ParseError(f"{path}: no entity labels found")
    return out


def _parse_block_sizes(args) -> tuple[int, ...]:
    if args.block_sizes:
        return tuple(int(s) for s in args.block_sizes.split(","))
    if args.blocks and args.block_size:
        return (args.block_size,) * args.blocks
    raise ValueError("specify --block-sizes or both --blocks and --block-size")


def _resolve_probs(args, sizes: tuple[int, ...]) -> tuple[float, float]:
    if args.p_in is not None and args.p_out is not None:
        return args.p_in, args.p_out
    if args.mean_degree is not None and args.ratio is not None:
        if len(set(sizes)) != 1:
            raise ValueError("--mean-degree/--ratio require equal block sizes")
        return probs_for_mean_degree(len(sizes), sizes[0], args.mean_degree, args.ratio)
    raise ValueError("specify --p-in/--p-out or --mean-degree/--ratio")


def _cmd_gen_sbm(args) -> int:
    out = Path(args.out)
    _check_overwrite(out, args.force)
    sizes = _parse_block_sizes(args)
    p_in, p_out = _resolve_probs(args, sizes)
    spec = SBMSpec(
        block_sizes=sizes,
        p_in=p_in,
        p_out=p_out,
        seed=args.seed,
        assortative=not args.non_assortative,
    )
    g, labels = generate_sbm(spec, clean=args.clean, min_degree=args.min_degree)
    with open(out, "w") as fh:
        fh.write(f"# block model: sizes={list(sizes)} p_in={p_in} p_out={p_out} seed={args.seed}\n")
        for i in range(g.node_count):
            for j in g.neighbors(i):
                if i < j:
                    fh.write(f"{g.ids[i]}\t{g.ids[int(j)]}\n")
    outputs = [out]
    if args.labels_out:
        labels_path = Path(args.labels_out)
        _check_overwrite(labels_path, args.force)
        with open(labels_path, "w", newline="") as fh:
            writer = csv.writer(fh)
            for i in range(g.node_count):
                writer.writerow([g.ids[i], int(labels[i])])
        outputs.append(labels_path)
    _emit_manifest(
        "gen-sbm",
        {
            "block_sizes": list(sizes),
            "p_in": p_in,
            "p_out": p_out,
            "seed": args.seed,
            "clean": args.clean,
            "min_degree": args.min_degree,
            "nodes": g.node_count,
            "edges": g.edge_count,
        },
        [],
        outputs,
    )
    return 0


def _cmd_bench(args) -> int:
    out_csv = Path(args.out_csv)
    _check_overwrite(out_csv, args.force)
    out_json = Path(args.out_json) if args.out_json else None
    if out_json:
        _check_overwrite(out_json, args.force)
    sizes = [int(s) for s in args.sizes.split(",")]
    specs = []
    for n in sizes:
        if n % args.blocks != 0:
            raise ValueError(f"size {n} not divisible by {args.blocks} blocks")
        block_size = n // args.blocks
        p_in, p_out = probs_for_mean_degree(args.blocks, block_size, args.mean_degree, args.ratio)
        specs.append(SBMSpec(block_sizes=(block_size,) * args.blocks, p_in=p_in, p_out=p_out))
    methods = tuple(args.methods.split(","))
    records = run_benchmark(
        specs,
        methods=methods,
        replicates=args.replicates,
        workload_sources=args.workload,
        walk_cfg=_walk_config(args),
        dim=args.dim,
        seed=args.seed,
        dense_guard=args.dense_guard,
    )
    write_benchmark_csv(out_csv, records, force=args.force)
    summary = summarize_benchmark(records)
    config = {
        "sizes": sizes,
        "blocks": args.blocks,
        "mean_degree": args.mean_degree,
        "ratio": args.ratio,
        "methods": list(methods),
        "replicates": args.replicates,
        "workload_sources": args.workload,
        "steps": args.steps,
        "walkers": args.walkers,
        "dim": args.dim,
        "seed": args.seed,
        "dense_guard": args.dense_guard,
    }
    outputs = [out_csv]
    if out_json:
        out_json.write_text(
            json.dumps({"config": config, "summary": summary}, indent=2, sort_keys=True) + "\n"
        )
        outputs.append(out_json)
    _emit_manifest("bench", config, [], outputs)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="citewalk",
        description="Random-walk similarity measures on citation networks",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="score node pairs on a graph")
    p_compute.add_argument("graph", help="edge-list file")
    p_compute.add_argument("--out", required=True, help="output scores CSV")
    group = p_compute.add_mutually_exclusive_group()
    group.add_argument("--pairs", help="pair file (two ids per line)")
    group.add_argument("--sources", help="comma-separated source ids, scored against all nodes")
    group.add_argument("--all-pairs", action="store_true", help="score every unordered pair")
    _add_measure_options(p_compute)
    p_compute.add_argument("--min-degree", type=int, default=DEFAULT_MIN_DEGREE,
                           help="cleaning threshold; 0 disables cleaning")
    p_compute.add_argument("--force", action="store_true")
    p_compute.set_defaults(run=_cmd_compute)

    p_auth = sub.add_parser("authorsim", help="aggregate paper scores to author pairs")
    p_auth.add_argument("corpus", help="paper table: paper_id, year, authors, labels")
    p_auth.add_argument("graph", help="citation edge-list over paper ids")
    p_auth.add_argument("--out", required=True)
    p_auth.add_argument("--focal-year", type=int, required=True)
    p_auth.add_argument("--window", type=int, default=5, help="profile window in calendar years")
    pair_group = p_auth.add_mutually_exclusive_group()
    pair_group.add_argument("--pairs", help="author pairs to score (two ids per line)")
    pair_group.add_argument("--collab-task", action="store_true",
                            help="build labeled next-year collaboration pairs")
    p_auth.add_argument("--collab-file", help="external collaboration records (author, author, year)")
    _add_measure_options(p_auth)
    p_auth.add_argument("--min-degree", type=int, default=0,
                        help="cleaning threshold; default keeps the whole graph")
    p_auth.add_argument("--exclude-shared", action="store_true",
                        help="drop same-paper pairs from the aggregation")
    p_auth.add_argument("--force", action="store_true")
    p_auth.set_defaults(run=_cmd_authorsim)

    p_eval = sub.add_parser("eval", help="AUC report for scored, labeled pairs")
    p_eval.add_argument("--scores", required=True, help="scores CSV from compute/authorsim")
    p_eval.add_argument("--labels", required=True, help="labeled pairs CSV (a, b, label)")
    p_eval.add_argument("--out", required=True, help="JSON report path")
    p_eval.add_argument("--provenance", choices=("synthetic", "collab", "coclass"),
                        default="synthetic")
    p_eval.add_argument("--bootstrap", type=int, default=DEFAULT_BOOTSTRAP)
    p_eval.add_argument("--alpha", type=float, default=0.05)
    p_eval.add_argument("--seed", type=int, default=0)
    p_eval.add_argument("--no-log", action="store_true",
                        help="skip the log transform of probability measures")
    p_eval.add_argument("--entity-labels", help="CSV of id, discipline for the matrix")
    p_eval.add_argument("--matrix-order", help="comma-separated discipline order")
    p_eval.add_argument("--matrix-out", help="discipline matrix CSV path")
    p_eval.add_argument("--degree-corr-graph", help="edge list; adds Pearson(score, target degree)")
    p_eval.add_argument("--piecewise-against", help="second scores CSV for the two-slope fit")
    p_eval.add_argument("--histogram-out", help="binned score distribution CSV")
    p_eval.add_argument("--bins", type=int, default=50)
    p_eval.add_argument("--force", action="store_true")
    p_eval.set_defaults(run=_cmd_eval)

    p_bench = sub.add_parser("bench", help="runtime sweep on generated networks")
    p_bench.add_argument("--sizes", default="1000,4000,16000")
    p_bench.add_argument("--blocks", type=int, default=10)
    p_bench.add_argument("--mean-degree", type=float, default=15.0)
    p_bench.add_argument("--ratio", type=float, default=20.0)
    p_bench.add_argument("--methods", default="walk_exact,walk_estimate,path_weight")
    p_bench.add_argument("--replicates", type=int, default=10)
    p_bench.add_argument("--workload", type=int, default=100, help="source nodes per network")
    p_bench.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    p_bench.add_argument("--walkers", type=int, default=DEFAULT_WALKERS)
    p_bench.add_argument("--dim", type=int, default=64)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--dense-guard", type=int, default=BENCH_DENSE_GUARD,
                         help="skip the dense matrix above this many nodes")
    p_bench.add_argument("--out-csv", required=True)
    p_bench.add_argument("--out-json")
    p_bench.add_argument("--force", action="store_true")
    p_bench.set_defaults(run=_cmd_bench)

    p_gen = sub.add_parser("gen-sbm", help="generate a block-model network")
    p_gen.add_argument("--out", required=True, help="edge-list output path")
    p_gen.add_argument("--labels-out", help="node block labels CSV")
    p_gen.add_argument("--block-sizes", help="comma-separated sizes")
    p_gen.add_argument("--blocks", type=int, help="number of equal blocks")
    p_gen.add_argument("--block-size", type=int, help="size of each equal block")
    p_gen.add_argument("--p-in", type=float)
    p_gen.add_argument("--p-out", type=float)
    p_gen.add_argument("--mean-degree", type=float)
    p_gen.add_argument("--ratio", type=float)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--clean", action="store_true", help="apply the cleaning pipeline")
    p_gen.add_argument("--min-degree", type=int, default=DEFAULT_MIN_DEGREE)
    p_gen.add_argument("--non-assortative", action="store_true")
    p_gen.add_argument("--force", action="store_true")
    p_gen.set_defaults(run=_cmd_gen_sbm)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except GuardExceeded as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 3
    except (ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
