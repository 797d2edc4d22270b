"""
Logging submodule.

Console loggers shared by the simulator and the command line, and a progress bar for
long block-fading simulations.
"""

import logging
import sys
import time
from pathlib import Path
from typing import Optional, TextIO, Union

LOGGERS: dict = {}


def get_logger(
    name: str,
    log_level: int = logging.INFO,
    log_path: Optional[Union[str, Path]] = None,
) -> logging.Logger:
    """
    Create a python logger instance with configured handlers.

    Loggers are configured once per name; children of an already configured logger
    (e.g. `scalloc.experiment.runner` after `scalloc`) are returned untouched.

    Parameters
    ----------
    name : str
        Name of the logger.
    log_level : int, optional
        Log level (info, error etc.), by default logging.INFO.
    log_path : Optional[Union[str, Path]], optional
        Path in which to save the log, by default None.

    Returns
    -------
    logging.Logger
        Logger.
    """
    logger = logging.getLogger(name)
    if name in LOGGERS:
        return logger

    if any(name.startswith(f"{n}.") for n in LOGGERS):
        # handled by the configured parent
        logger.propagate = True
        return logger

    logger.propagate = False

    handlers: list = [logging.StreamHandler()]
    if log_path:
        handlers.append(logging.FileHandler(log_path))

    formatter = logging.Formatter("%(message)s")
    for handler in handlers:
        handler.setFormatter(formatter)
        handler.setLevel(log_level)
        logger.addHandler(handler)

    logger.setLevel(log_level)
    LOGGERS[name] = True

    return logger


class ProgressBar:
    """
    Progress bar for simulated blocks.

    The bar is redrawn in place on terminals and printed once per update otherwise.
    Redraws are throttled to `interval` seconds.

    Parameters
    ----------
    max_value : int
        Number of blocks to simulate.
    label : str, optional
        Text shown before the bar, by default "Simulating".
    width : int, optional
        Width of the bar in characters, by default 30.
    interval : float, optional
        Minimum time between redraws in seconds, by default 0.1.
    stream : TextIO, optional
        Output stream, by default `sys.stdout`.
    """

    def __init__(
        self,
        max_value: int,
        label: str = "Simulating",
        width: int = 30,
        interval: float = 0.1,
        stream: Optional[TextIO] = None,
    ) -> None:
        self.max_value = max(int(max_value), 1)
        self.label = label
        self.width = width
        self.interval = interval
        self.stream = stream if stream is not None else sys.stdout
        self._dynamic_display = hasattr(self.stream, "isatty") and self.stream.isatty()
        self._start = time.time()
        self._last_update = 0.0
        self.current = 0

    def update(self, current: int) -> None:
        """
        Move the bar to block `current`.

        Parameters
        ----------
        current : int
            Number of blocks simulated so far.
        """
        self.current = min(int(current), self.max_value)
        now = time.time()
        finished = self.current >= self.max_value
        if not finished and now - self._last_update < self.interval:
            return
        self._last_update = now

        filled = int(self.width * self.current / self.max_value)
        bar = "=" * filled + "." * (self.width - filled)
        elapsed = now - self._start
        rate = self.current / elapsed if elapsed > 0 else 0.0
        line = (
            f"{self.label} {self.current}/{self.max_value} [{bar}] "
            f"{rate:.0f} blocks/s"
        )

        if self._dynamic_display:
            self.stream.write("\r" + line)
            if finished:
                self.stream.write("\n")
        else:
            self.stream.write(line + "\n")
        self.stream.flush()

    def add(self, n: int = 1) -> None:
        """
        Advance the bar by `n` blocks.

        Parameters
        ----------
        n : int, optional
            Number of blocks, by default 1.
        """
        self.update(self.current + n)
