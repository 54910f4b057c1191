"""Fractional author counting and fractionalized H-matrices.

Two weight rules g(p, q) for the author at byline position p of a q-author
paper are shipped, plus the trivial plain rule:

``uniform_fraction`` (Schreiber)
    every author gets 1/q.
``positional`` (FNRS rule for tailor-based allocation)
    q=1: 1; q=2: 1/2 each; q>=3: first 1/2, last 1/4, the q-2 middle
    authors share the remaining 1/4.

Weights are used in normalized form (summing to 1 per paper).

Two ways of turning weights into an h value:

``fractional_rank`` (default, Schreiber's h_m)
    papers keep their citation order; each contributes g to a cumulative
    effective rank r_eff, and h is the largest r_eff(k) with c_k >= r_eff(k).
``fractional_citation``
    each citation count c becomes c * g; re-sort and take the usual h.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .corpus import Corpus, Paper, rank_key
from .hmatrix import HMatrix, _check_author_list, build
from .metrics import joint_count, joint_papers

KINDS = ("plain", "uniform_fraction", "positional")
MODES = ("fractional_rank", "fractional_citation")
# absorbs float drift in sums such as 1/3 + 1/3 + 1/3
_EPS = 1e-12


@dataclass(frozen=True)
class WeightScheme:
    kind: str = "uniform_fraction"
    name: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown weight scheme kind {self.kind!r}")
        if not self.name:
            object.__setattr__(self, "name", self.kind)

    def weight(self, p: int, q: int) -> float:
        if q < 1:
            raise ValueError("author count q must be >= 1")
        if not 1 <= p <= q:
            raise ValueError(f"author position {p} outside 1..{q}")
        return float(scheme_weights(self, q)[p - 1])


PLAIN = WeightScheme("plain")
SCHREIBER = WeightScheme("uniform_fraction", "schreiber")
FNRS = WeightScheme("positional", "fnrs")

SCHEMES = {"plain": PLAIN, "schreiber": SCHREIBER, "uniform": SCHREIBER, "fnrs": FNRS}


def get_scheme(name: str) -> WeightScheme:
    try:
        return SCHEMES[name]
    except KeyError:
        raise ValueError(
            f"unknown scheme {name!r}; choose from {', '.join(sorted(SCHEMES))}"
        ) from None


def scheme_weights(scheme: WeightScheme, q: int) -> np.ndarray:
    """Weights for byline positions 1..q.

    >>> scheme_weights(FNRS, 4).tolist()
    [0.5, 0.125, 0.125, 0.25]
    """
    if q < 1:
        raise ValueError("author count q must be >= 1")
    if scheme.kind == "plain":
        return np.ones(q)
    if scheme.kind == "uniform_fraction" or q <= 2:
        return np.full(q, 1.0 / q)
    w = np.full(q, 0.25 / (q - 2))
    w[0], w[-1] = 0.5, 0.25
    return w


@dataclass(frozen=True)
class FractionalHValue:
    value: float
    scheme: WeightScheme
    mode: str


def _check_mode(mode: str) -> str:
    aliases = {"rank": "fractional_rank", "citation": "fractional_citation"}
    mode = aliases.get(mode, mode)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; choose rank or citation")
    return mode


def _h_from_weights(items: Sequence[tuple[int, float]], mode: str) -> float:
    """`items` are (citations, credit) pairs already in citation order."""
    if mode == "fractional_rank":
        value, r_eff = 0.0, 0.0
        for c, g in items:
            r_eff += g
            if c >= r_eff - _EPS:
                value = r_eff
            else:
                break
        return round(value, 12)
    scaled = sorted((c * g for c, g in items), reverse=True)
    h = 0
    for k, c in enumerate(scaled, start=1):
        if c < k - _EPS:
            break
        h = k
    return float(h)


def fractional_h(
    papers: Iterable[tuple[int, int, int]],
    scheme: WeightScheme = SCHREIBER,
    mode: str = "fractional_rank",
) -> FractionalHValue:
    """Fractional h-index of a list of ``(citations, position, n_authors)``.

    In rank mode the citation ordering is the plain one (stable, descending).
    """
    mode = _check_mode(mode)
    items = []
    for c, p, q in papers:
        if q < 1 or not 1 <= p <= q:
            raise ValueError(f"invalid author position {p} of {q}")
        items.append((c, scheme.weight(p, q)))
    items.sort(key=lambda cg: -cg[0])
    return FractionalHValue(_h_from_weights(items, mode), scheme, mode)


def author_entries(corpus: Corpus, author: str) -> list[tuple[int, int, int]]:
    return [(p.citations, p.position(author), len(p.authors)) for p in corpus.papers_of(author)]


def _pair_credit(papers: list[Paper], a: str, b: str, scheme: WeightScheme):
    # the pair jointly owns the sum of their two shares
    return [
        (p.citations,
         scheme.weight(p.position(a), len(p.authors))
         + scheme.weight(p.position(b), len(p.authors)))
        for p in sorted(papers, key=rank_key)
    ]


def fractional_hmatrix(
    corpus: Corpus,
    authors: Sequence[str],
    scheme: WeightScheme = SCHREIBER,
    mode: str = "fractional_rank",
) -> HMatrix:
    """H-matrix with fractionalized diagonal and off-diagonal entries.

    Off-diagonal (i, j) credits each joint paper with g(p_i, q) + g(p_j, q).
    Entries are capped at the plain matrix entry; capped pairs are listed in
    ``HMatrix.clamped``.
    """
    mode = _check_mode(mode)
    authors = _check_author_list(corpus, authors)
    plain = build(corpus, authors)
    n = len(authors)
    m = np.zeros((n, n))
    clamped = []
    for i, a in enumerate(authors):
        m[i, i] = fractional_h(author_entries(corpus, a), scheme, mode).value
    for i, j in combinations(range(n), 2):
        a, b = authors[i], authors[j]
        items = _pair_credit(joint_papers(corpus, (a, b)), a, b, scheme)
        v = _h_from_weights(items, mode)
        cap = plain.entries[i, j]
        if v > cap:
            clamped.append((a, b))
            v = cap
        m[i, j] = m[j, i] = v
    counts = {frozenset(p): joint_count(corpus, p) for p in combinations(authors, 2)}
    counts[frozenset(authors)] = joint_count(corpus, authors)
    return HMatrix(authors, m, counts, label=f"{scheme.name}/{mode}", clamped=tuple(clamped))
