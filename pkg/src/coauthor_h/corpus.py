"""Publication records, loading and validation.

A :class:`Corpus` is an immutable set of :class:`Paper` records together with
an index from each author to their papers, ranked by citations (descending,
ties broken by ascending ``paper_id``).

Two on-disk formats are accepted, both UTF-8:

* CSV with header ``paper_id,title,year,citations,authors`` where ``authors``
  is a ``;``-separated, ordered list of author tokens.
* JSON: an array of objects with the same keys; ``authors`` is an array.

``year`` may be empty (CSV) or ``null`` (JSON).
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import IO, Iterable, Mapping, Sequence

from .errors import CorpusError, UnknownAuthorError

FIELDS = ("paper_id", "title", "year", "citations", "authors")


@dataclass(frozen=True)
class Paper:
    """One publication. ``authors`` keeps byline order (position 1 first)."""

    paper_id: str
    title: str
    year: int | None
    citations: int
    authors: tuple[str, ...]

    def position(self, author: str) -> int:
        """1-based byline position of `author`."""
        return self.authors.index(author) + 1

    def to_dict(self) -> dict:
        return {
            "paper_id": self.paper_id,
            "title": self.title,
            "year": self.year,
            "citations": self.citations,
            "authors": list(self.authors),
        }


def rank_key(paper: Paper):
    return (-paper.citations, paper.paper_id)


@dataclass(frozen=True)
class Corpus:
    """Immutable collection of papers indexed by author.

    Build one with :meth:`from_papers` (validating) or :func:`load_corpus`.
    The raw constructor performs no checks so that :func:`validate` can be
    exercised on deliberately broken corpora.
    """

    papers: tuple[Paper, ...]
    author_index: Mapping[str, tuple[str, ...]]
    provenance: Mapping[str, str] = field(
        default_factory=lambda: MappingProxyType({}), compare=False
    )

    @classmethod
    def from_papers(cls, papers: Iterable[Paper], provenance=None) -> "Corpus":
        papers = tuple(sorted(papers, key=lambda p: p.paper_id))
        seen = Counter(p.paper_id for p in papers)
        dupes = sorted(pid for pid, n in seen.items() if n > 1)
        if dupes:
            raise CorpusError(f"duplicate paper_id {dupes[0]!r}")
        for p in papers:
            problem = _paper_problem(p)
            if problem:
                raise CorpusError(f"paper {p.paper_id!r}: {problem}")
        corpus = cls(
            papers=papers,
            author_index=build_index(papers),
            provenance=MappingProxyType(dict(provenance or {})),
        )
        return corpus

    @property
    def authors(self) -> tuple[str, ...]:
        return tuple(sorted(self.author_index))

    def __contains__(self, author) -> bool:
        return author in self.author_index

    def paper(self, paper_id: str) -> Paper:
        return self._by_id[paper_id]

    @property
    def _by_id(self) -> dict[str, Paper]:
        # frozen dataclass: cache through object.__setattr__
        try:
            return self.__dict__["_by_id_cache"]
        except KeyError:
            cache = {p.paper_id: p for p in self.papers}
            object.__setattr__(self, "_by_id_cache", cache)
            return cache

    def papers_of(self, author: str) -> list[Paper]:
        """The author's papers, ranked (citations desc, paper_id asc)."""
        if author not in self.author_index:
            raise UnknownAuthorError(author)
        by_id = self._by_id
        return [by_id[pid] for pid in self.author_index[author]]

    def citations_of(self, author: str) -> list[int]:
        return [p.citations for p in self.papers_of(author)]

    def to_records(self) -> list[dict]:
        return [p.to_dict() for p in self.papers]

    def digest(self) -> str:
        """SHA-256 over the canonical JSON form of the papers."""
        blob = json.dumps(self.to_records(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class AuthorStats:
    author: str
    h: int
    most_cited: int
    citations_in_h_core: int
    n_coauthors: int
    n_papers_with_best_coauthor: int
    n_publications: int


def build_index(papers: Iterable[Paper]) -> MappingProxyType:
    buckets: dict[str, list[Paper]] = {}
    for p in papers:
        for a in p.authors:
            buckets.setdefault(a, []).append(p)
    return MappingProxyType(
        {
            a: tuple(p.paper_id for p in sorted(ps, key=rank_key))
            for a, ps in sorted(buckets.items())
        }
    )


def _paper_problem(p: Paper) -> str | None:
    if not isinstance(p.paper_id, str) or not p.paper_id.strip():
        return "empty paper_id"
    if not p.authors:
        return "empty author list"
    for a in p.authors:
        if not isinstance(a, str) or not a or a != a.strip():
            return f"invalid author token {a!r}"
    if len(set(p.authors)) != len(p.authors):
        dup = next(a for a, n in Counter(p.authors).items() if n > 1)
        return f"duplicate author {dup!r}"
    if isinstance(p.citations, bool) or not isinstance(p.citations, int):
        return f"citations must be an integer, got {p.citations!r}"
    if p.citations < 0:
        return f"negative citation count {p.citations}"
    return None


def validate(corpus: Corpus) -> list[str]:
    """Return a list of invariant violations; empty means the corpus is sound.

    Each entry names the offending paper or author and the broken rule.
    """
    problems = []
    counts = Counter(p.paper_id for p in corpus.papers)
    for pid, n in sorted(counts.items()):
        if n > 1:
            problems.append(f"paper {pid!r}: paper_id appears {n} times")
    for p in corpus.papers:
        problem = _paper_problem(p)
        if problem:
            problems.append(f"paper {p.paper_id!r}: {problem}")

    expected = build_index(corpus.papers)
    actual = corpus.author_index
    for a in sorted(set(expected) - set(actual)):
        problems.append(f"author {a!r}: missing from author index")
    for a in sorted(set(actual) - set(expected)):
        problems.append(f"author {a!r}: indexed but appears on no paper")
    for a in sorted(set(expected) & set(actual)):
        if set(actual[a]) != set(expected[a]):
            problems.append(f"author {a!r}: index lists the wrong papers")
        elif tuple(actual[a]) != expected[a]:
            problems.append(
                f"author {a!r}: index not sorted by (citations desc, paper_id asc)"
            )
    return problems


def author_stats(corpus: Corpus, author: str) -> AuthorStats:
    """Productivity summary for one author (h, h-core size, co-author counts)."""
    from .metrics import h_index

    papers = corpus.papers_of(author)
    cites = [p.citations for p in papers]
    h = h_index(cites).value
    shared = Counter(a for p in papers for a in p.authors if a != author)
    return AuthorStats(
        author=author,
        h=h,
        most_cited=max(cites, default=0),
        citations_in_h_core=sum(cites[:h]),
        n_coauthors=len(shared),
        n_papers_with_best_coauthor=max(shared.values(), default=0),
        n_publications=len(papers),
    )


# -- loading -----------------------------------------------------------------

def _parse_int(text, what, line, allow_empty=False):
    if isinstance(text, bool):
        raise CorpusError(f"{what} must be an integer, got {text!r}", line)
    if isinstance(text, int):
        return text
    if text is None or (isinstance(text, str) and not text.strip()):
        if allow_empty:
            return None
        raise CorpusError(f"missing {what}", line)
    if isinstance(text, float) and text.is_integer():
        return int(text)
    try:
        return int(str(text).strip())
    except ValueError:
        raise CorpusError(f"{what} must be an integer, got {text!r}", line) from None


def _make_paper(pid, title, year, citations, authors, line) -> Paper:
    if not isinstance(pid, str) or not pid.strip():
        raise CorpusError("empty paper_id", line)
    pid = pid.strip()
    year = _parse_int(year, "year", line, allow_empty=True)
    citations = _parse_int(citations, "citations", line)
    if citations < 0:
        raise CorpusError(f"negative citation count {citations}", line)
    authors = tuple(a.strip() if isinstance(a, str) else a for a in authors)
    if not authors:
        raise CorpusError(f"paper {pid!r} has an empty author list", line)
    for a in authors:
        if not isinstance(a, str) or not a:
            raise CorpusError(f"paper {pid!r} has an empty author token", line)
    if len(set(authors)) != len(authors):
        raise CorpusError(f"paper {pid!r} lists an author twice", line)
    return Paper(pid, title or "", year, citations, authors)


def _read_csv(fh: IO[str]) -> list[tuple[int, Paper]]:
    reader = csv.reader(fh)
    try:
        header = next(reader)
    except StopIteration:
        raise CorpusError("empty file, header required", 1) from None
    header = [h.strip().lstrip("﻿") for h in header]
    missing = [f for f in FIELDS if f not in header]
    if missing:
        raise CorpusError(f"header lacks column(s) {', '.join(missing)}", 1)
    col = {name: header.index(name) for name in FIELDS}
    out = []
    for row in reader:
        line = reader.line_num
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != len(header):
            raise CorpusError(
                f"expected {len(header)} fields, found {len(row)}", line
            )
        raw_authors = row[col["authors"]]
        authors = [a for a in raw_authors.split(";")] if raw_authors.strip() else []
        out.append(
            (
                line,
                _make_paper(
                    row[col["paper_id"]],
                    row[col["title"]],
                    row[col["year"]],
                    row[col["citations"]],
                    authors,
                    line,
                ),
            )
        )
    return out


def _read_json(fh: IO[str]) -> list[tuple[int, Paper]]:
    try:
        data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise CorpusError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, list):
        raise CorpusError("top level must be an array of paper objects")
    out = []
    for i, rec in enumerate(data, start=1):
        if not isinstance(rec, dict):
            raise CorpusError(f"record {i} is not an object")
        missing = [f for f in ("paper_id", "citations", "authors") if f not in rec]
        if missing:
            raise CorpusError(f"record {i} lacks {', '.join(missing)}")
        authors = rec["authors"]
        if not isinstance(authors, list):
            raise CorpusError(f"record {i}: authors must be an array")
        try:
            paper = _make_paper(
                rec["paper_id"], rec.get("title", ""), rec.get("year"),
                rec["citations"], authors, None,
            )
        except CorpusError as exc:
            raise CorpusError(f"record {i}: {exc}") from None
        out.append((i, paper))
    return out


def load_corpus(source, fmt: str | None = None, provenance=None) -> Corpus:
    """Load and validate a corpus from a path or an open text file.

    Parameters
    ----------
    source : str, os.PathLike or text file
    fmt : {"csv", "json"}, optional
        Inferred from the file suffix when omitted.

    Raises
    ------
    CorpusError
        On malformed rows (with line number), duplicate ``paper_id``,
        empty author lists or negative citation counts.
    """
    if isinstance(source, (str, os.PathLike)):
        path = Path(source)
        fmt = fmt or path.suffix.lstrip(".").lower()
        with open(path, encoding="utf-8", newline="") as fh:
            return load_corpus(fh, fmt, provenance or {"source": str(path)})
    if fmt not in ("csv", "json"):
        raise CorpusError(f"unknown corpus format {fmt!r} (expected csv or json)")
    rows = _read_csv(source) if fmt == "csv" else _read_json(source)
    first_seen: dict[str, int] = {}
    for line, p in rows:
        if p.paper_id in first_seen:
            where = "line" if fmt == "csv" else "record"
            raise CorpusError(
                f"duplicate paper_id {p.paper_id!r} (first at {where} "
                f"{first_seen[p.paper_id]})",
                line if fmt == "csv" else None,
            )
        first_seen[p.paper_id] = line
    return Corpus.from_papers((p for _, p in rows), provenance)


def loads_corpus(text: str, fmt: str) -> Corpus:
    return load_corpus(io.StringIO(text), fmt)


def dump_json(papers: Corpus | Sequence[Paper], fh: IO[str]) -> None:
    records = papers.to_records() if isinstance(papers, Corpus) else [
        p.to_dict() for p in papers
    ]
    json.dump(records, fh, indent=2, ensure_ascii=False)
    fh.write("\n")


def dump_csv(papers: Corpus | Sequence[Paper], fh: IO[str]) -> None:
    items = papers.papers if isinstance(papers, Corpus) else papers
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(FIELDS)
    for p in items:
        w.writerow(
            [p.paper_id, p.title, "" if p.year is None else p.year, p.citations,
             ";".join(p.authors)]
        )
