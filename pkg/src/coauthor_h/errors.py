"""Exception hierarchy.

Everything raised for bad *data* derives from :class:`DataError`, which the
command line maps to exit status 1.
"""


class DataError(Exception):
    """Base class for errors caused by input data rather than by usage."""


class CorpusError(DataError, ValueError):
    """A publication file or record violates the corpus contract."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownAuthorError(DataError, LookupError):
    def __init__(self, author):
        self.author = author
        super().__init__(f"unknown author: {author!r}")

    def __str__(self):
        return self.args[0]


class MatrixError(DataError, ValueError):
    """Matrix input is malformed (not square, not symmetric, bad file)."""


class ConvergenceError(RuntimeError):
    """The eigensolver hit its sweep cap. Indicates a bug, not bad data."""
