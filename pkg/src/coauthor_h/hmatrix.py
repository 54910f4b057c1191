"""The co-authorship popularity H-matrix.

Diagonal entries are individual h-indices, off-diagonal entries the pairwise
joint h-indices. The matrix is symmetric by construction. Author order is the
caller's unless :func:`order_by_h` is applied.

Fixture file format (plain text)::

    # authors: MAU, PCL
    2
    35 10
    10 11

Lines starting with ``#`` are comments; ``# key: value`` comments are kept as
metadata.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from .corpus import Corpus
from .errors import MatrixError, UnknownAuthorError
from .metrics import joint_count, joint_h


@dataclass(frozen=True, eq=False)
class HMatrix:
    """Symmetric co-authorship matrix with author labels.

    Attributes
    ----------
    authors : tuple of str
    entries : ndarray, shape (n, n)
        Read-only float array.
    joint_counts : mapping frozenset -> int
        Joint-paper counts N for every pair and for the full author set.
    label : str
        "plain" for the classical builder, otherwise the fractional scheme.
    clamped : tuple of (str, str)
        Pairs whose fractional value was capped at the plain entry.
    """

    authors: tuple[str, ...]
    entries: np.ndarray
    joint_counts: Mapping[frozenset, int] = field(default_factory=dict)
    label: str = "plain"
    clamped: tuple = ()

    def __post_init__(self):
        a = np.array(self.entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise MatrixError(f"H-matrix must be square and non-empty, got {a.shape}")
        if len(self.authors) != a.shape[0]:
            raise MatrixError(
                f"{len(self.authors)} author labels for a {a.shape[0]}x{a.shape[0]} matrix"
            )
        if len(set(self.authors)) != len(self.authors):
            raise MatrixError("duplicate author label")
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)
        object.__setattr__(self, "authors", tuple(self.authors))

    @property
    def n(self) -> int:
        return len(self.authors)

    @property
    def diagonal(self) -> np.ndarray:
        return np.diag(self.entries).copy()

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries))

    def index(self, author: str) -> int:
        return self.authors.index(author)

    def entry(self, a: str, b: str) -> float:
        return float(self.entries[self.index(a), self.index(b)])

    def n_joint(self, *authors: str) -> int | None:
        return self.joint_counts.get(frozenset(authors))

    def submatrix(self, authors: Sequence[str]) -> "HMatrix":
        """Principal submatrix for `authors` (order as given).

        Since every entry depends only on its own row/column authors, this
        equals building the smaller matrix from the corpus directly.
        """
        idx = [self.index(a) for a in authors]
        counts = {
            k: v for k, v in self.joint_counts.items() if k.issubset(authors)
        }
        return HMatrix(tuple(authors), self.entries[np.ix_(idx, idx)], counts,
                       self.label)

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.entries, self.entries.T))

    def __eq__(self, other):
        if not isinstance(other, HMatrix):
            return NotImplemented
        return (
            self.authors == other.authors
            and np.array_equal(self.entries, other.entries)
            and dict(self.joint_counts) == dict(other.joint_counts)
        )

    def __repr__(self):
        return f"HMatrix(authors={self.authors!r}, entries={self.entries.tolist()!r})"


def _check_author_list(corpus: Corpus, authors) -> tuple[str, ...]:
    authors = tuple(authors)
    if not authors:
        raise ValueError("need at least one author")
    if len(set(authors)) != len(authors):
        dup = next(a for a in authors if authors.count(a) > 1)
        raise ValueError(f"author {dup!r} listed twice")
    for a in authors:
        if a not in corpus:
            raise UnknownAuthorError(a)
    return authors


def build(corpus: Corpus, authors: Sequence[str]) -> HMatrix:
    """Assemble the H-matrix for `authors`, preserving their order."""
    authors = _check_author_list(corpus, authors)
    n = len(authors)
    m = np.zeros((n, n))
    counts = {}
    for i, a in enumerate(authors):
        m[i, i] = joint_h(corpus, [a]).value
    for i, j in combinations(range(n), 2):
        pair = (authors[i], authors[j])
        m[i, j] = m[j, i] = joint_h(corpus, pair).value
        counts[frozenset(pair)] = joint_count(corpus, pair)
    counts[frozenset(authors)] = joint_count(corpus, authors)
    return HMatrix(authors, m, counts)


def order_by_h(m: HMatrix) -> HMatrix:
    """Relabel so the diagonal is non-increasing (stable for ties)."""
    perm = sorted(range(m.n), key=lambda i: -m.entries[i, i])
    return HMatrix(
        tuple(m.authors[i] for i in perm),
        m.entries[np.ix_(perm, perm)],
        dict(m.joint_counts),
        m.label,
        m.clamped,
    )


# -- fixture files -----------------------------------------------------------

def parse_matrix_text(text: str) -> tuple[HMatrix, dict[str, str]]:
    """Parse the plain-text matrix format; return the matrix and its metadata."""
    meta: dict[str, str] = {}
    rows: list[list[float]] = []
    n = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            key, sep, value = body.partition(":")
            if sep:
                k = key.strip().lower()
                meta[k] = (meta[k] + " " + value.strip()) if k in meta else value.strip()
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise MatrixError(f"line {lineno}: expected matrix size, got {line!r}") from None
            if n < 1:
                raise MatrixError(f"line {lineno}: matrix size must be >= 1")
            continue
        try:
            row = [float(tok) for tok in line.split()]
        except ValueError:
            raise MatrixError(f"line {lineno}: non-numeric entry in {line!r}") from None
        if len(row) != n:
            raise MatrixError(f"line {lineno}: expected {n} entries, found {len(row)}")
        rows.append(row)
    if n is None:
        raise MatrixError("no matrix size line found")
    if len(rows) != n:
        raise MatrixError(f"expected {n} rows, found {len(rows)}")
    if "authors" in meta:
        authors = tuple(a.strip() for a in meta["authors"].replace(",", " ").split())
        if len(authors) != n:
            raise MatrixError(f"'# authors:' names {len(authors)} authors for n={n}")
    else:
        authors = tuple(f"a{i + 1}" for i in range(n))
    counts = {}
    if "joint papers" in meta:
        counts[frozenset(authors)] = int(meta["joint papers"])
    return HMatrix(authors, np.array(rows), counts), meta


def load_matrix(source) -> HMatrix:
    return read_matrix_file(source)[0]


def read_matrix_file(source) -> tuple[HMatrix, dict[str, str]]:
    if isinstance(source, (str, os.PathLike)):
        return parse_matrix_text(Path(source).read_text(encoding="utf-8"))
    return parse_matrix_text(source.read())


def format_matrix(m: HMatrix) -> str:
    """Inverse of :func:`parse_matrix_text` (authors line included)."""
    buf = io.StringIO()
    buf.write(f"# authors: {', '.join(m.authors)}\n{m.n}\n")
    for row in m.entries:
        buf.write(" ".join(_num(x) for x in row) + "\n")
    return buf.getvalue()


def _num(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else repr(float(x))
