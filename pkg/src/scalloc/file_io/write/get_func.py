"""Module to get write functions."""

from pathlib import Path
from typing import Dict, List, Literal, Protocol, Union

from ...config.support import SupportedFormat
from ...experiment.report import ExperimentReport, SweepSeries
from .csv_tables import write_csv
from .json_document import write_json

SupportedWriteType = Literal["csv", "json"]


class WriteFunc(Protocol):
    """Protocol for type hinting write functions."""

    def __call__(
        self, out_dir: Path, report: Union[ExperimentReport, SweepSeries]
    ) -> List[Path]:
        """
        Type hinted callables must match this function signature (not including self).

        Parameters
        ----------
        out_dir : pathlib.Path
            Output directory.
        report : ExperimentReport or SweepSeries
            Report to write.

        Returns
        -------
        list of pathlib.Path
            Written files.
        """


WRITE_FUNCS: Dict[SupportedFormat, WriteFunc] = {
    SupportedFormat.CSV: write_csv,
    SupportedFormat.JSON: write_json,
}


def get_write_func(data_format: SupportedWriteType) -> WriteFunc:
    """
    Get the write function for a format.

    Parameters
    ----------
    data_format : {"csv", "json"}
        Output format.

    Returns
    -------
    callable
        Write function.
    """
    # error raised here if not supported
    return WRITE_FUNCS[SupportedFormat(data_format)]


def emit(
    report: Union[ExperimentReport, SweepSeries],
    data_format: SupportedWriteType,
    out_dir: Union[str, Path],
) -> List[Path]:
    """
    Write a report in the requested format.

    Parameters
    ----------
    report : ExperimentReport or SweepSeries
        Report to write.
    data_format : {"csv", "json"}
        Output format.
    out_dir : str or pathlib.Path
        Output directory.

    Returns
    -------
    list of pathlib.Path
        Written files.
    """
    return get_write_func(data_format)(Path(out_dir), report)
