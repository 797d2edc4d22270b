"""Command line interface of scalloc.

The entrypoint is `scalloc.cli.main:run`.
"""
