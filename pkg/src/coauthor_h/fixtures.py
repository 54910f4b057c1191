"""Bundled published matrices and a synthetic corpus that regenerates them.

`verify_fixtures` replays every bundled matrix through the eigensolver and
compares with the printed values: eigenvalues to an absolute tolerance,
lc1 components to a relative one. A printed value that is out of tolerance
but listed under ``# known discrepancy:`` in its file is reported as KNOWN
rather than FAIL.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .corpus import Corpus, Paper
from .eigen import jacobi_eigen, principal_lc1
from .hmatrix import HMatrix, read_matrix_file

EIG_TOL = 0.02
LC1_RTOL = 0.005

DATA = resources.files("coauthor_h") / "data"
MATRIX_DIR = DATA / "matrices"
SYNTHETIC_CSV = DATA / "synthetic_team.csv"
REPLAY_DIR = DATA / "replay"
FRACTIONAL_DOC = DATA / "fractional_published.json"


@dataclass(frozen=True, eq=False)
class MatrixFixture:
    name: str
    matrix: HMatrix
    eigenvalues: np.ndarray
    lc1: np.ndarray | None
    known: frozenset  # e.g. {"lc1[5]"}
    meta: dict

    @property
    def path(self) -> Path:
        return Path(str(MATRIX_DIR / f"{self.name}.txt"))


def _floats(text: str | None) -> np.ndarray | None:
    if not text:
        return None
    return np.array([float(t) for t in text.replace(",", " ").split()])


def load_fixture(name_or_path) -> MatrixFixture:
    path = Path(str(name_or_path))
    if not path.suffix:
        path = Path(str(MATRIX_DIR / f"{name_or_path}.txt"))
    m, meta = read_matrix_file(path)
    return MatrixFixture(
        name=path.stem,
        matrix=m,
        eigenvalues=_floats(meta.get("printed eigenvalues")),
        lc1=_floats(meta.get("printed lc1")),
        known=frozenset(meta.get("known discrepancy", "").split()),
        meta=meta,
    )


def fixture_names() -> list[str]:
    return sorted(Path(str(p)).stem for p in MATRIX_DIR.iterdir() if p.name.endswith(".txt"))


def load_fixtures() -> list[MatrixFixture]:
    return [load_fixture(n) for n in fixture_names()]


@dataclass(frozen=True)
class Check:
    fixture: str
    quantity: str
    printed: float
    computed: float
    tolerance: str
    status: str  # PASS, FAIL or KNOWN

    @property
    def ok(self) -> bool:
        return self.status != "FAIL"

    def line(self) -> str:
        return (f"{self.status:<5} {self.fixture:<28} {self.quantity:<8} "
                f"printed={self.printed:<9g} computed={self.computed:.6f} ({self.tolerance})")


def check_fixture(fx: MatrixFixture, eig_tol=EIG_TOL, lc1_rtol=LC1_RTOL) -> list[Check]:
    d = jacobi_eigen(fx.matrix)
    out = []
    if fx.eigenvalues is not None:
        for k, (p, c) in enumerate(zip(fx.eigenvalues, d.eigenvalues), start=1):
            ok = abs(p - c) <= eig_tol
            out.append(Check(fx.name, f"lambda{k}", float(p), float(c),
                             f"abs {eig_tol}", _status(ok, f"lambda{k}", fx)))
    if fx.lc1 is not None:
        pw = principal_lc1(d)
        for k, (p, c) in enumerate(zip(fx.lc1, pw.lc1_vector), start=1):
            ok = abs(c - p) <= lc1_rtol * abs(p)
            out.append(Check(fx.name, f"lc1[{k}]", float(p), float(c),
                             f"rel {lc1_rtol}", _status(ok, f"lc1[{k}]", fx)))
    return out


def _status(ok: bool, quantity: str, fx: MatrixFixture) -> str:
    if ok:
        return "PASS"
    return "KNOWN" if quantity in fx.known else "FAIL"


def verify_fixtures(eig_tol=EIG_TOL, lc1_rtol=LC1_RTOL) -> list[Check]:
    checks = []
    for fx in load_fixtures():
        checks.extend(check_fixture(fx, eig_tol, lc1_rtol))
    return checks


def fractional_documentation() -> dict:
    """Published fractional h and eigenvalues for the MD/SG/AP team.

    Documentation only: the corpus behind them is not available, so the
    values cannot be recomputed (``reproducible`` is false).
    """
    return json.loads(FRACTIONAL_DOC.read_text(encoding="utf-8"))


# -- synthetic corpus ---------------------------------------------------------

TEAM = ("MAU", "PCL", "APE", "JPE")


def synthetic_team_papers() -> list[Paper]:
    """Deterministic corpus whose H-matrix for TEAM equals the 4x4 example.

    It also reproduces every joint count N of the example and the
    productivity rows of PCL, APE and JPE (h, most cited paper, citations in
    the h-core, co-author count, best co-author count, publications). MAU
    gets h=35, 152 top citations, 317 co-authors, 155 papers with the best
    co-author and 571 publications; MAU's printed h-core total (1113) is
    below 35*35 and cannot be matched by any corpus.
    """
    papers: list[Paper] = []

    def add(cites, authors):
        papers.append(Paper(f"S{len(papers) + 1:04d}", "", 1990 + len(papers) % 22,
                            cites, tuple(authors)))

    # all four: JPE's whole output
    add(7, ("APE", "PCL", "JPE", "MAU"))
    add(7, ("PCL", "APE", "JPE", "MAU", "JPEX"))
    # MAU, PCL, APE only
    for c in (20, 15, 10, 8, 3, 2):
        add(c, ("PCL", "APE", "MAU"))
    # MAU and PCL only
    for i, c in enumerate((127, 34, 30, 11, 12, 11, 10, 9, 5, 4, 4, 3, 3, 2, 2, 1, 1, 1, 0, 0, 0, 0)):
        add(c, ("PCL", "MAU") if i % 3 else ("MAU", "PCL"))
    # MAU and APE only
    for i, c in enumerate((37, 5, 5, 4, 4, 3, 3, 2, 2, 1, 1, 0, 0)):
        add(c, ("APE", "MAU") if i % 2 else ("MAU", "APE"))
    # PCL without MAU: 28 further co-authors over four papers
    pcl_others = [f"P{i:02d}" for i in range(1, 29)]
    for c, chunk in zip((13, 12, 11, 1), (pcl_others[0:7], pcl_others[7:14],
                                           pcl_others[14:21], pcl_others[21:28])):
        add(c, ("PCL", *chunk))
    # APE without MAU: 42 further co-authors, 90 papers
    ape_others = [f"A{i:02d}" for i in range(1, 43)]
    ape_cites = [36, 30, 25, 22, 18, 11] + [5 - (i % 6) for i in range(84)]
    for i, c in enumerate(ape_cites):
        co = ape_others[i % 42]
        add(c, ("APE", co) if i % 2 else (co, "APE"))
    # MAU without the team: 528 papers, best co-author on 155 of them
    mau_others = [f"M{i:03d}" for i in range(1, 313)]
    mau_cites = [152] + list(range(35, 67)) + [30 - (i % 31) for i in range(495)]
    for i, c in enumerate(mau_cites):
        co = [mau_others[i % 312]]
        if i < 155:
            co.append("MBEST")
        add(c, ("MAU", *co) if i % 4 else (*co, "MAU"))
    return papers


def synthetic_team_corpus() -> Corpus:
    return Corpus.from_papers(synthetic_team_papers(), {"source": "synthetic"})
