"""Run domcover from the command line.

Every input produces one JSON object on stdout. Diagnostics go to stderr. The exit code is 0
whenever every input received a verdict (member or not) and 2 if any input was rejected.

Usage:
    run.py recognize <graph file>... --class <B|Cgb> [options]
    run.py oracle <graph file>... [options]
    run.py tree gen --steps <k> [--seed <s>] [--out <prefix>] [options]
    run.py tree check <graph file>... [options]
    run.py tree deconstruct <graph file>... [options]
    run.py grid <grid file>... [--oracle] [options]
    run.py bench --sizes <n>... [--plot <png>] [options]
    run.py (-h | --help)

Options:
    --jobs <k>          Process up to k input files (or benchmark sizes) concurrently.
    --cap <n>           Largest graph the exact oracles will touch.
    --seed <s>          Seed for random generation.
    --log_stats         Append one CSV row per verdict to `benchmark/data/`.
    --debug <0|1|2>     Verbosity of stderr diagnostics.

Notes:
    Graph files hold `p <n> <m>` followed by `e <u> <v>` lines (`c` starts a comment).
    Grid files hold `H <y> <x1> <x2>` / `V <x> <y1> <y2>` lines (`#` starts a comment).
    Build scripts hold `O1 <attacher>` to `O4 <attacher>` lines in encounter ids.

"""

import argparse
import sys
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Any

from domcover.core.grid_guarding import intersection_graph, is_extremal, min_patrolling_set
from domcover.core.kwargs import check_assemble_kwargs
from domcover.core.oracles import alpha, beta, gamma
from domcover.core.recognition import bench_worstcase, recognize_b_class, recognize_cgb_poly
from domcover.core.tree_family import (
    as_tree,
    check_tree_conditions,
    deconstruct,
    generate_tmax,
    script_to_text,
    tree_gamma,
)
from domcover.input.graph_files import graph_to_text, read_graph_file
from domcover.input.grid_files import read_grid_file
from domcover.utils.classes import BuildScript, Colors, VerdictReport
from domcover.utils.core import datetime_manager, elapsed_ms
from domcover.utils.errors import DomcoverError
from domcover.utils.read_write import (
    emit_report,
    labels_to_dict,
    oracle_to_dict,
    prep_stats_n_log,
    script_to_dict,
    verdict_report,
)
from domcover.vis.bench import plot_scaling

# A worker returns the report plus the input's size, for stats logging
Outcome = tuple[VerdictReport | dict[str, Any], int, int]


###########
# WORKERS #
###########
def recognize_file(path: str, cls: str, **kwargs) -> Outcome:
    """Recognize one graph file as a member of class B or Cgb."""
    g, labels = read_graph_file(path)
    t_1, _ = datetime_manager()
    recognizer = recognize_b_class if cls == "B" else recognize_cgb_poly
    verdict = recognizer(g, dense_threshold=kwargs["dense_threshold"], debug=kwargs["debug"])
    report = verdict_report("recognize", path, cls, verdict, elapsed_ms(t_1), labels=labels)
    return report, g.n, g.edge_count


def oracle_file(path: str, **kwargs) -> Outcome:
    """Compute γ, β and α of one graph file."""
    g, labels = read_graph_file(path)
    t_1, _ = datetime_manager()
    oracles = {"gamma": gamma, "beta": beta, "alpha": alpha}
    results = {name: fn(g, cap=kwargs["cap"]) for name, fn in oracles.items()}
    if results["alpha"].value + results["beta"].value != g.n:
        raise RuntimeError(f"ERROR @ oracle_file. α + β != n for {path}.")

    report: dict[str, Any] = {
        "command": "oracle",
        "input": path,
        **{name: oracle_to_dict(result, labels) for name, result in results.items()},
        "labels": labels_to_dict(labels),
        "stats": {
            "pair_checks": 0,
            "oracle_nodes": sum(r.explored for r in results.values()),
            "elapsed_ms": elapsed_ms(t_1),
        },
    }
    return report, g.n, g.edge_count


def tree_file(path: str, action: str, **kwargs) -> Outcome:
    """Check or deconstruct one tree file."""
    g, labels = read_graph_file(path)
    t = as_tree(g)
    t_1, _ = datetime_manager()
    verdict = check_tree_conditions(t)
    details: dict[str, Any] = {
        "gamma": tree_gamma(t).value,
        "size_a": len(t.bipartition.side_a),
    }
    if action == "deconstruct":
        outcome = deconstruct(t, debug=kwargs["debug"])
        if isinstance(outcome, BuildScript) != verdict.member:
            raise RuntimeError(f"ERROR @ tree_file. Check and deconstruction disagree on {path}.")
        if isinstance(outcome, BuildScript):
            details["script"] = script_to_dict(outcome)

    report = verdict_report(
        f"tree {action}", path, "Tmax", verdict, elapsed_ms(t_1), details=details, labels=labels
    )
    return report, g.n, g.edge_count


def grid_file(path: str, **kwargs) -> Outcome:
    """Decide extremality of one grid file."""
    grid, line_numbers = read_grid_file(path)
    t_1, _ = datetime_manager()
    gg = intersection_graph(grid)
    verdict = is_extremal(gg, debug=kwargs["debug"])
    details: dict[str, Any] = {
        "vertical": len(grid.vertical_ids),
        "horizontal": len(grid.horizontal_ids),
        "m": gg.graph.edge_count,
        "line_numbers": line_numbers,
        "sweep": {
            "queries": gg.stats.queries,
            "reported": gg.stats.reported,
            "visited": gg.stats.visited,
            "probes": gg.stats.probes,
            "max_active": gg.stats.max_active,
        },
    }

    oracle_nodes = 0
    if kwargs.get("oracle"):
        result = min_patrolling_set(gg, cap=kwargs["cap"])
        details["patrolling"] = oracle_to_dict(result)
        oracle_nodes = result.explored
        if verdict.member != (result.value == len(gg.bipartition.side_a)):
            raise RuntimeError(f"ERROR @ grid_file. Recognizer and oracle disagree on {path}.")

    report = verdict_report(
        "grid",
        path,
        "extremal-grid",
        verdict,
        elapsed_ms(t_1),
        oracle_nodes=oracle_nodes,
        details=details,
    )
    return report, gg.graph.n, gg.graph.edge_count


####################
# COMMAND HANDLERS #
####################
def run_batch(worker: Callable[..., Outcome], paths: list[str], **kwargs) -> int:
    """Run a worker over every input and emit the reports in input order.

    Returns:
        exit_code: 0 if every input produced a report, 2 otherwise.

    """

    call = partial(run_one, worker, **kwargs)
    if kwargs["jobs"] > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=kwargs["jobs"]) as pool:
            outcomes = list(pool.map(call, paths))
    else:
        outcomes = [call(p) for p in paths]

    exit_code = 0
    for path, outcome in zip(paths, outcomes):
        if isinstance(outcome, str):
            print(f"{Colors.RED}{path}: {outcome}{Colors.RESET}", file=sys.stderr)
            exit_code = 2
            continue
        report, n, m = outcome
        emit_report(report, debug=kwargs["debug"])
        if kwargs["log_stats"] and "member" in report:
            prep_stats_n_log("verdicts", report, n, m, **kwargs)
    return exit_code


def run_one(worker: Callable[..., Outcome], path: str, **kwargs) -> Outcome | str:
    """Call a worker, turning input errors into their message."""
    try:
        return worker(path, **kwargs)
    except (DomcoverError, OSError) as e:
        return str(e)


def run_tree_gen(**kwargs) -> int:
    """Generate one random tree, emit it, and optionally write it to files."""
    t, script = generate_tmax(
        kwargs["steps"],
        rng_seed=kwargs["seed"],
        retry_cap=kwargs["retry_cap"],
        debug=kwargs["debug"],
    )
    verdict = check_tree_conditions(t)
    details = {
        "gamma": tree_gamma(t).value,
        "size_a": len(t.bipartition.side_a),
        "edges": [list(e) for e in t.graph.edges()],
        "script": script_to_dict(script),
        "script_text": script_to_text(script),
    }
    if kwargs.get("out"):
        comment = f"seed {kwargs['seed']}, {kwargs['steps']} steps"
        Path(f"{kwargs['out']}.graph").write_text(graph_to_text(t.graph, comment=comment))
        Path(f"{kwargs['out']}.script").write_text(script_to_text(script))

    report = verdict_report("tree gen", f"seed={kwargs['seed']}", "Tmax", verdict, 0.0, details=details)
    emit_report(report, debug=kwargs["debug"])
    return 0


def run_bench(**kwargs) -> int:
    """Run the worst-case benchmark and emit its table."""
    table = bench_worstcase(
        kwargs["sizes"], jobs=kwargs["jobs"], dense_threshold=kwargs["dense_threshold"]
    )
    print(table.to_string(index=False), file=sys.stderr)

    rows = table.drop(columns="ratio").to_dict(orient="records")
    emit_report({"command": "bench", "family": "worstcase", "rows": rows})
    if kwargs["log_stats"]:
        for row in rows:
            report = {"input": "worstcase", "member": row["member"], "stats": row}
            prep_stats_n_log("bench", report, row["n"], row["m"], **kwargs)

    if kwargs.get("plot"):
        plot_scaling(table, kwargs["plot"])
    return 0


##########
# PARSER #
##########
def build_parser() -> argparse.ArgumentParser:
    """Command-line parser with one subcommand per operation."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--cap", type=int, default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--log_stats", action="store_true")
    common.add_argument("--debug", type=int, default=0, choices=(0, 1, 2))

    parser = argparse.ArgumentParser(
        prog="domcover", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter
    )
    sub = parser.add_subparsers(dest="command", required=True)

    recognize = sub.add_parser("recognize", parents=[common])
    recognize.add_argument("paths", nargs="+")
    recognize.add_argument("--class", dest="cls", choices=("B", "Cgb"), required=True)

    oracle = sub.add_parser("oracle", parents=[common])
    oracle.add_argument("paths", nargs="+")

    tree = sub.add_parser("tree")
    tree_sub = tree.add_subparsers(dest="action", required=True)
    gen = tree_sub.add_parser("gen", parents=[common])
    gen.add_argument("--steps", type=int, required=True)
    gen.add_argument("--out", default=None)
    for action in ("check", "deconstruct"):
        tree_sub.add_parser(action, parents=[common]).add_argument("paths", nargs="+")

    grid = sub.add_parser("grid", parents=[common])
    grid.add_argument("paths", nargs="+")
    grid.add_argument("--oracle", action="store_true")

    bench = sub.add_parser("bench", parents=[common])
    bench.add_argument("--sizes", type=int, nargs="+", required=True)
    bench.add_argument("--plot", default=None)

    return parser


####################
# MAIN RUN MANAGER #
####################
def run(argv: list[str] | None = None) -> int:
    """Execute a command-line instruction.

    Args:
        argv (optional): Arguments without the program name. Defaults to `sys.argv[1:]`.

    Returns:
        exit_code: 0 on success (any verdict), 2 on rejected input.

    """

    args = vars(build_parser().parse_args(argv))
    kwargs = check_assemble_kwargs(
        **{k: v for k, v in args.items() if k not in ("command", "action", "paths")}
    )

    try:
        if args["command"] == "recognize":
            return run_batch(recognize_file, args["paths"], **kwargs)
        if args["command"] == "oracle":
            return run_batch(oracle_file, args["paths"], **kwargs)
        if args["command"] == "grid":
            return run_batch(grid_file, args["paths"], **kwargs)
        if args["command"] == "bench":
            return run_bench(**kwargs)
        if args["action"] == "gen":
            return run_tree_gen(**kwargs)
        return run_batch(tree_file, args["paths"], action=args["action"], **kwargs)
    except DomcoverError as e:
        print(f"{Colors.RED}{e}{Colors.RESET}", file=sys.stderr)
        return 2


def main():
    """Console entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
