"""Shared exception types."""

from __future__ import annotations


class InternalInvariantError(RuntimeError):
    """A structural self-check failed (budget identity, classification
    partition, fixture cross-validation).  Carries a diagnostic payload so
    the CLI can dump it before exiting with code 3."""

    def __init__(self, message: str, details=None):
        super().__init__(message)
        self.details = details or {}
