"""Classical h-index and the joint h-index of a set of co-authors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .corpus import Corpus, Paper, rank_key
from .errors import UnknownAuthorError


@dataclass(frozen=True)
class HIndexValue:
    value: int
    list_length: int

    @property
    def core_size(self) -> int:
        return self.value

    def __int__(self):
        return self.value


def h_index(citations: Iterable[int]) -> HIndexValue:
    """Largest k such that the k-th most cited paper has at least k citations.

    >>> h_index([7, 5, 4, 1]).value
    3
    """
    ranked = sorted(citations, reverse=True)
    h = 0
    for rank, c in enumerate(ranked, start=1):
        if c < rank:
            break
        h = rank
    return HIndexValue(h, len(ranked))


def _check_authors(corpus: Corpus, authors) -> frozenset:
    group = frozenset(authors)
    if not group:
        raise ValueError("need at least one author")
    for a in sorted(group):
        if a not in corpus:
            raise UnknownAuthorError(a)
    return group


def joint_papers(corpus: Corpus, authors: Iterable[str]) -> list[Paper]:
    """Papers co-signed by *every* member of `authors`, ranked.

    For a single author this is their full publication list.
    """
    group = _check_authors(corpus, authors)
    # scan the shortest list
    pivot = min(group, key=lambda a: (len(corpus.author_index[a]), a))
    hits = [p for p in corpus.papers_of(pivot) if group.issubset(p.authors)]
    return sorted(hits, key=rank_key)


def joint_count(corpus: Corpus, authors: Iterable[str]) -> int:
    return len(joint_papers(corpus, authors))


def joint_h(corpus: Corpus, authors: Iterable[str]) -> HIndexValue:
    """h-index over the joint papers of `authors` (global citation counts)."""
    return h_index(p.citations for p in joint_papers(corpus, authors))
