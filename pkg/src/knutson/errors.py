"""Shared exception types."""


class CapExceededError(Exception):
    """A computation was requested beyond its configured resource cap."""


class TableError(Exception):
    """A constructed character table failed an exact consistency check.

    Raised e.g. when an orthogonality relation fails, which for the
    transcribed SL2(q) tables indicates a transcription mistake.
    """
