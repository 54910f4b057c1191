"""Team-level readings of the H-matrix: subset averages and gain/loss reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .corpus import Corpus
from .eigen import jacobi_eigen, principal_lc1
from .errors import UnknownAuthorError
from .fractional import FNRS, SCHREIBER, fractional_hmatrix
from .hmatrix import HMatrix, build, order_by_h

MAX_POOL = 24

RANK_RULE = (
    "in each subset the focal author's rank r is their position when the "
    "subset is ordered by h (descending, ties in pool order); eigenvalue "
    "number r is used"
)


def h_rank(m: HMatrix, author: str) -> int:
    """0-based rank of `author` by diagonal h (descending, stable)."""
    return order_by_h(m).authors.index(author)


@dataclass(frozen=True)
class SubsetAverage:
    focal: str
    k: int
    subset_lambdas: tuple[tuple[tuple[str, ...], float], ...]
    mean: float
    rank_rule: str = RANK_RULE

    def to_dict(self) -> dict:
        return {
            "focal": self.focal,
            "k": self.k,
            "subsets": [
                {"authors": list(s), "lambda": lam} for s, lam in self.subset_lambdas
            ],
            "mean": self.mean,
            "rank_rule": self.rank_rule,
        }

    def render_text(self) -> str:
        width = max(len(", ".join(s)) for s, _ in self.subset_lambdas)
        lines = [f"<h>_{self.k} for {self.focal}"]
        for s, lam in self.subset_lambdas:
            lines.append(f"  {', '.join(s):<{width}}  {_fmt(lam)}")
        lines.append(f"  {'mean':<{width}}  {_fmt(self.mean)}")
        lines.append(f"  note: {self.rank_rule}")
        return "\n".join(lines)


def subset_average_matrix(m: HMatrix, focal: str, k: int) -> SubsetAverage:
    """Average the focal author's rank-matched eigenvalue over all k-subsets.

    Subsets are the principal submatrices of `m` that contain `focal`,
    enumerated in lexicographic order of author positions.
    """
    if focal not in m.authors:
        raise UnknownAuthorError(focal)
    if m.n > MAX_POOL:
        raise ValueError(f"pool of {m.n} authors exceeds the limit of {MAX_POOL}")
    if not 2 <= k <= m.n:
        raise ValueError(f"subset size k={k} outside 2..{m.n}")
    others = [a for a in m.authors if a != focal]
    terms = []
    for chosen in combinations(others, k - 1):
        keep = set(chosen) | {focal}
        subset = tuple(a for a in m.authors if a in keep)
        sub = m.submatrix(subset)
        d = jacobi_eigen(sub)
        terms.append((subset, float(d.eigenvalues[h_rank(sub, focal)])))
    mean = float(np.mean([lam for _, lam in terms]))
    return SubsetAverage(focal, k, tuple(terms), mean)


def subset_average(corpus: Corpus, focal: str, pool: Sequence[str], k: int) -> SubsetAverage:
    """<h>_k of `focal` over every size-k subset of `pool` containing it."""
    pool = tuple(pool)
    if focal not in pool:
        raise ValueError(f"focal author {focal!r} is not in the pool")
    if len(pool) > MAX_POOL:
        raise ValueError(f"pool of {len(pool)} authors exceeds the limit of {MAX_POOL}")
    return subset_average_matrix(build(corpus, pool), focal, k)


@dataclass(frozen=True, eq=False)
class TeamReport:
    """Everything the H-matrix says about one team.

    ``level`` is the rank-matched eigenvalue of each author (top-h author
    gets lambda1, the second lambda2, ...), and ``gain = level - baseline``.
    ``effective_h`` is lambda1 times the author's unit-norm principal weight.
    """

    matrix: HMatrix
    eigenvalues: np.ndarray
    lc1: np.ndarray | None
    weights: np.ndarray
    effective_h: np.ndarray
    level: np.ndarray
    degenerate: bool
    schemes: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def authors(self) -> tuple[str, ...]:
        return self.matrix.authors

    @property
    def baseline(self) -> np.ndarray:
        return self.matrix.diagonal

    @property
    def gain(self) -> np.ndarray:
        return self.level - self.baseline

    def to_dict(self) -> dict:
        m = self.matrix
        return {
            "authors": list(self.authors),
            "matrix": m.entries.tolist(),
            "joint_counts": [
                {"authors": sorted(k), "n": v}
                for k, v in sorted(m.joint_counts.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
            ],
            "eigenvalues": self.eigenvalues.tolist(),
            "degenerate": self.degenerate,
            "per_author": [
                {
                    "author": a,
                    "baseline_h": float(self.baseline[i]),
                    "lc1": None if self.lc1 is None else float(self.lc1[i]),
                    "weight": float(self.weights[i]),
                    "effective_h": float(self.effective_h[i]),
                    "level": float(self.level[i]),
                    "gain": float(self.gain[i]),
                }
                for i, a in enumerate(self.authors)
            ],
            "schemes": self.schemes,
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def render_text(self) -> str:
        m = self.matrix
        w = max(6, max(len(a) for a in self.authors))
        out = ["H-matrix"]
        out.append(" " * (w + 2) + " ".join(f"{a:>{w}}" for a in self.authors))
        for i, a in enumerate(self.authors):
            out.append(f"  {a:<{w}}" + " ".join(f"{_fmt(x):>{w}}" for x in m.entries[i]))
        if m.joint_counts:
            out.append("joint papers")
            for k, v in sorted(m.joint_counts.items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))):
                out.append(f"  N({','.join(sorted(k))}) = {v}")
        out.append("eigenvalues")
        out.append("  " + "  ".join(_fmt(x) for x in self.eigenvalues))
        head = ["author", "h", "lc1", "weight", "effective_h", "level", "gain"]
        rows = []
        for i, a in enumerate(self.authors):
            rows.append([
                a,
                _fmt(self.baseline[i]),
                "-" if self.lc1 is None else _fmt(self.lc1[i]),
                _fmt(self.weights[i]),
                _fmt(self.effective_h[i]),
                _fmt(self.level[i]),
                _fmt(self.gain[i]),
            ])
        out.extend(_table(head, rows))
        for s in self.schemes:
            out.append(f"scheme {s['scheme']}")
            out.append("  diagonal:    " + "  ".join(_fmt(x) for x in s["diagonal"]))
            out.append("  eigenvalues: " + "  ".join(_fmt(x) for x in s["eigenvalues"]))
            if s["clamped"]:
                out.append("  clamped: " + ", ".join("-".join(p) for p in s["clamped"]))
        for note in self.notes:
            out.append(f"note: {note}")
        return "\n".join(out)


def report_from_matrix(m: HMatrix) -> TeamReport:
    d = jacobi_eigen(m)
    pw = principal_lc1(d)
    ranks = [h_rank(m, a) for a in m.authors]
    level = np.array([d.eigenvalues[r] for r in ranks])
    notes = []
    if pw.degenerate:
        notes.append(
            "principal eigenvector has a vanishing component (reducible matrix); "
            "lc1 normalization refused, unit-norm weights shown"
        )
    return TeamReport(m, d.eigenvalues, pw.lc1_vector, pw.normalized_weights,
                      pw.effective_h, level, pw.degenerate, notes=notes)


def team_report(
    corpus: Corpus,
    authors: Sequence[str],
    compare_schemes: bool = False,
    sort: bool = False,
    mode: str = "fractional_rank",
) -> TeamReport:
    """Build, decompose and summarise the H-matrix of `authors`."""
    m = build(corpus, authors)
    if sort:
        m = order_by_h(m)
    report = report_from_matrix(m)
    if compare_schemes:
        report.schemes.append(_scheme_row("plain", m))
        for scheme in (SCHREIBER, FNRS):
            fm = fractional_hmatrix(corpus, m.authors, scheme, mode)
            report.schemes.append(_scheme_row(fm.label, fm))
    return report


def _scheme_row(name: str, m: HMatrix) -> dict:
    return {
        "scheme": name,
        "diagonal": m.diagonal.tolist(),
        "matrix": m.entries.tolist(),
        "eigenvalues": jacobi_eigen(m).eigenvalues.tolist(),
        "clamped": [list(p) for p in m.clamped],
    }


def _fmt(x) -> str:
    x = float(x)
    if x.is_integer() and abs(x) < 1e15:
        return str(int(x))
    return f"{x:.12g}"


def _table(head, rows) -> list[str]:
    widths = [max(len(str(r[c])) for r in [head, *rows]) for c in range(len(head))]
    fmt = lambda r: "  " + "  ".join(  # noqa: E731
        f"{v:<{w}}" if c == 0 else f"{v:>{w}}" for c, (v, w) in enumerate(zip(r, widths))
    )
    return [fmt(head), *(fmt(r) for r in rows)]
