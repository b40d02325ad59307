"""Util facilities for emitting reports and logging stats.

Usage:
    Call any function/class from a separate script.

"""

import csv
import json
import os
import sys
from pathlib import Path
from typing import Any

from domcover.utils.classes import (
    BuildScript,
    Certificate,
    Colors,
    OracleResult,
    Verdict,
    VerdictReport,
    WitnessGammaSet,
)

#############
# CONSTANTS #
#############
STATS_DIR: Path = Path(__file__).resolve().parent.parent.parent.parent / "benchmark/data"

HEADER_VERDICT_STATS = [
    "unique_run_id",
    "command",
    "class",
    "input",
    "member",
    "condition",
    "n",
    "m",
    "pair_checks",
    "oracle_nodes",
    "elapsed_ms",
]

HEADER_BENCH_STATS = [
    "unique_run_id",
    "family",
    "n",
    "m",
    "member",
    "pair_checks",
    "elapsed_ms",
]


#############
# SERIALIZE #
#############
def to_labels(vertices: Any, labels: dict[int, int] | None) -> list[int]:
    """Translate dense ids back to file labels, keeping order (sorted for sets)."""
    ordered = sorted(vertices) if isinstance(vertices, frozenset | set) else list(vertices)
    if not labels:
        return ordered
    inverse = {v: label for label, v in labels.items()}
    return [inverse[v] for v in ordered]


def certificate_to_dict(cert: Certificate, labels: dict[int, int] | None = None) -> dict[str, Any]:
    """JSON-ready form of a verdict certificate."""
    if isinstance(cert, WitnessGammaSet):
        return {"kind": "gamma-set", "vertices": to_labels(cert.vertices, labels)}
    return {
        "kind": "violated",
        "condition": cert.condition,
        "vertices": to_labels(cert.vertices, labels),
    }


def oracle_to_dict(result: OracleResult, labels: dict[int, int] | None = None) -> dict[str, Any]:
    """JSON-ready form of an oracle result."""
    return {
        "value": result.value,
        "witness": to_labels(result.witness, labels),
        "explored": result.explored,
    }


def script_to_dict(script: BuildScript) -> dict[str, Any]:
    """JSON-ready form of a build script."""
    return {
        "base": list(script.base),
        "ops": [
            {"kind": op.kind, "attacher": op.attacher, "new_ids": list(op.new_ids)}
            for op in script.ops
        ],
    }


def verdict_report(
    command: str,
    source: str,
    cls: str,
    verdict: Verdict,
    elapsed: float,
    oracle_nodes: int = 0,
    details: dict[str, Any] | None = None,
    labels: dict[int, int] | None = None,
) -> VerdictReport:
    """Assemble the JSON object for one verdict.

    Args:
        command: The subcommand that produced it.
        source: Path or description of the input.
        cls: Class name, one of "B", "Cgb", "Tmax", "extremal-grid".
        verdict: The verdict.
        elapsed: Milliseconds spent.
        oracle_nodes (optional): Search nodes visited by any oracle consulted.
        details (optional): Command-specific extras.
        labels (optional): File label to dense id map. Certificates are reported in file
            labels and the map itself is recorded under "labels".

    Returns:
        report: The report, ready for `emit_report`.

    """

    report: VerdictReport = {
        "command": command,
        "input": source,
        "class": cls,
        "member": verdict.member,
        "certificate": certificate_to_dict(verdict.certificate, labels),
        "stats": {
            "pair_checks": verdict.pair_checks,
            "oracle_nodes": oracle_nodes,
            "elapsed_ms": elapsed,
        },
        "details": details or {},
    }
    if labels is not None:
        report["labels"] = labels_to_dict(labels)
    return report


def labels_to_dict(labels: dict[int, int]) -> dict[str, int]:
    """File label to dense id map with string keys, as JSON needs."""
    return {str(label): v for label, v in labels.items()}


def emit_report(report: VerdictReport | dict[str, Any], debug: int = 0):
    """Print one report as a single JSON line on stdout, and a coloured summary on stderr."""
    print(json.dumps(report, sort_keys=True), flush=True)
    if debug >= 1 and "member" in report:
        colour = Colors.GREEN if report["member"] else Colors.YELLOW
        print(
            f"{colour}{report.get('command')} {report.get('input')}: member={report['member']}.{Colors.RESET}",
            file=sys.stderr,
        )


#########
# STATS #
#########
def prep_stats_n_log(
    stats_type: str,
    report: VerdictReport | dict[str, Any],
    n: int,
    m: int,
    **kwargs,
):
    """Order the fields of a report for the stats file of the given type and log them.

    Args:
        stats_type: "verdicts" or "bench".
        report: The report just emitted.
        n: Vertices (or segments) in the input.
        m: Edges in the input.
        **kwargs: See `./kwargs.py`; needs `log_stats_id`.

    """

    cert = report.get("certificate", {})
    stats = report.get("stats", {})
    if stats_type == "bench":
        line = [
            kwargs["log_stats_id"],
            report.get("input"),
            n,
            m,
            report.get("member"),
            stats.get("pair_checks", 0),
            stats.get("elapsed_ms", 0.0),
        ]
        header = HEADER_BENCH_STATS
    else:
        line = [
            kwargs["log_stats_id"],
            report.get("command"),
            report.get("class"),
            report.get("input"),
            report.get("member"),
            cert.get("condition", ""),
            n,
            m,
            stats.get("pair_checks", 0),
            stats.get("oracle_nodes", 0),
            stats.get("elapsed_ms", 0.0),
        ]
        header = HEADER_VERDICT_STATS

    log_stats(line, stats_type, opt_header=header)


def log_stats(stats_line: list[Any], stats_type: str, opt_header: list[str] | None = None):
    """Append a line to `<STATS_DIR>/<stats_type>.csv`, writing the header on first use.

    Args:
        stats_line: A full stats object formatted as a single line for a CSV data file.
        stats_type: The type of statistics being logged, which matches the name of recipient file.
        opt_header (optional): A line to use as header.

    """

    stats_dir_path = STATS_DIR
    os.makedirs(stats_dir_path, exist_ok=True)

    path_to_file = stats_dir_path / f"{stats_type}.csv"
    if not path_to_file.exists():
        with open(path_to_file, "w", newline="") as f:
            writer = csv.writer(f, delimiter=";")
            writer.writerow(opt_header or [])

    with open(path_to_file, "a", newline="") as f:
        writer = csv.writer(f, delimiter=";")
        writer.writerow(stats_line)
