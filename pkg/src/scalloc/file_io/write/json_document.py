"""JSON documents of experiment reports."""

import json
from pathlib import Path
from typing import List, Union

from ...experiment.report import ExperimentReport, SweepSeries
from .atomic import write_text_atomic


def write_json(
    out_dir: Path, report: Union[ExperimentReport, SweepSeries]
) -> List[Path]:
    """
    Write a report as `<experiment>.json`, UTF-8 with sorted keys.

    The document parses back into an equal report with `model_validate_json`.

    Parameters
    ----------
    out_dir : pathlib.Path
        Output directory, created if needed.
    report : ExperimentReport or SweepSeries
        Report to write.

    Returns
    -------
    list of pathlib.Path
        Written file.
    """
    path = Path(out_dir) / f"{report.experiment_name}.json"
    text = json.dumps(
        report.model_dump(mode="json"), sort_keys=True, indent=2, ensure_ascii=False
    )
    write_text_atomic(path, text + "\n")
    return [path]
