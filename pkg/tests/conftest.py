import numpy as np
import pytest

from coauthor_h.corpus import Corpus, Paper
from coauthor_h.fixtures import load_fixture, load_fixtures, synthetic_team_corpus


def brute_h(citations):
    """h by trying every k: the largest k with at least k papers cited >= k times."""
    best = 0
    for k in range(len(citations) + 1):
        if sum(1 for c in citations if c >= k) >= k:
            best = k
    return best


def random_corpus(rng, n_authors=6, n_papers=40, max_cites=30):
    names = [f"au{i}" for i in range(n_authors)]
    papers = []
    for i in range(n_papers):
        q = int(rng.integers(1, n_authors + 1))
        authors = tuple(rng.permutation(names)[:q])
        papers.append(Paper(f"p{i:03d}", "", None, int(rng.integers(0, max_cites + 1)), authors))
    return Corpus.from_papers(papers)


def corpus_of(*rows):
    """rows: (citations, "A;B;C") tuples."""
    return Corpus.from_papers(
        Paper(f"p{i}", "", None, c, tuple(a.split(";"))) for i, (c, a) in enumerate(rows)
    )


@pytest.fixture(scope="session")
def team():
    return synthetic_team_corpus()


@pytest.fixture(scope="session")
def all_fixtures():
    return load_fixtures()


@pytest.fixture
def fx():
    return load_fixture


# -- acceptance reporting -------------------------------------------------------

ACCEPTANCE: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""

    def check(name, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  {name}" + (f": {detail}" if detail else "")
        ACCEPTANCE.append(line)
        print(line)
        assert ok, line

    return check


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
