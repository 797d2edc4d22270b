"""Atomic text file replacement."""

import os
import tempfile
from pathlib import Path


def write_text_atomic(file_path: Path, text: str) -> None:
    """
    Write `text` to a temporary file next to `file_path`, then rename it.

    Readers never observe a partially written file.

    Parameters
    ----------
    file_path : pathlib.Path
        Destination.
    text : str
        UTF-8 content.
    """
    file_path.parent.mkdir(parents=True, exist_ok=True)
    descriptor, temporary = tempfile.mkstemp(
        dir=file_path.parent, prefix=f".{file_path.name}.", suffix=".tmp"
    )
    try:
        with os.fdopen(descriptor, "w", encoding="utf-8", newline="") as f:
            f.write(text)
        os.replace(temporary, file_path)
    except BaseException:
        Path(temporary).unlink(missing_ok=True)
        raise
