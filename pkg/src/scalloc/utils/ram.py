"""Memory figures reported alongside simulation run-time statistics."""

import psutil


def get_process_memory() -> float:
    """Resident memory of the current process in MB.

    Returns
    -------
    float
        Resident set size in MB.
    """
    return psutil.Process().memory_info().rss / 1024**2


def get_available_memory() -> float:
    """Available system memory in MB.

    Returns
    -------
    float
        Available RAM in MB.
    """
    return psutil.virtual_memory().available / 1024**2
