"""RFC-4180 tables of experiment reports."""

import csv
import io
from pathlib import Path
from typing import Iterable, List, Sequence, Union

from ...experiment.report import ExperimentReport, SweepSeries
from .atomic import write_text_atomic


def _table(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    """CSV text with CRLF line endings and minimal quoting.

    Parameters
    ----------
    header : sequence of str
        Column names.
    rows : iterable of sequence
        Rows.

    Returns
    -------
    str
        CSV text.
    """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _value(report: ExperimentReport) -> str:
    """Sweep value column, empty outside sweeps.

    Parameters
    ----------
    report : ExperimentReport
        Report.

    Returns
    -------
    str
        Sweep value.
    """
    return "" if report.sweep_value is None else repr(report.sweep_value)


def write_csv(
    out_dir: Path, report: Union[ExperimentReport, SweepSeries]
) -> List[Path]:
    """
    Write the throughput, scheduled-count and power tables of a report.

    Files are named `<experiment>_throughput.csv`, `<experiment>_sched_counts.csv`
    and `<experiment>_p2.csv`. A sweep writes one row block per value; an empty sweep
    writes headers only.

    Parameters
    ----------
    out_dir : pathlib.Path
        Output directory, created if needed.
    report : ExperimentReport or SweepSeries
        Report to write.

    Returns
    -------
    list of pathlib.Path
        Written files.
    """
    if isinstance(report, SweepSeries):
        reports = report.reports
        group_names = report.group_names
    else:
        reports = [report]
        group_names = report.group_names
    stem = report.experiment_name

    throughput_rows = [
        (_value(r), user, group, repr(value))
        for r in reports
        for user, (group, value) in enumerate(
            zip(r.user_groups, r.per_user_throughput)
        )
    ]
    count_rows = [
        (_value(r), *entry.counts, repr(entry.probability))
        for r in reports
        for entry in r.sched_count_dist
    ]
    p2_rows = [
        (_value(r), bucket, repr(probability))
        for r in reports
        for bucket, probability in r.p2_dist.items()
    ]

    tables = {
        "throughput": _table(
            ("sweep_value", "user_id", "group", "throughput"), throughput_rows
        ),
        "sched_counts": _table(
            ("sweep_value", *(f"k_{g}" for g in group_names), "probability"),
            count_rows,
        ),
        "p2": _table(("sweep_value", "bucket", "probability"), p2_rows),
    }

    paths = []
    for name, text in tables.items():
        path = Path(out_dir) / f"{stem}_{name}.csv"
        write_text_atomic(path, text)
        paths.append(path)
    return paths
