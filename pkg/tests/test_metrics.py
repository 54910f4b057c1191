from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from coauthor_h.errors import UnknownAuthorError
from coauthor_h.metrics import h_index, joint_h, joint_papers
from conftest import brute_h, corpus_of, random_corpus


@pytest.mark.parametrize("cites, h", [
    ([], 0), ([7, 5, 4, 1], 3), ([10, 10], 2), ([1, 1, 1], 1), ([0, 0], 0), ([100], 1),
])
def test_h_index_examples(cites, h):
    assert brute_h(cites) == h
    v = h_index(cites)
    assert v.value == h and v.core_size == h and v.list_length == len(cites)


@given(st.lists(st.integers(0, 200), max_size=50))
def test_h_index_matches_brute_force(cites):
    v = h_index(cites)
    assert v.value == brute_h(cites)
    assert 0 <= v.value <= v.list_length


def test_joint_papers_synthetic_pair():
    c = corpus_of((5, "A;B"), (9, "B;A"), (4, "A"))
    assert [p.paper_id for p in joint_papers(c, {"A", "B"})] == ["p1", "p0"]
    assert [p.paper_id for p in joint_papers(c, {"A"})] == ["p1", "p0", "p2"]


def test_joint_papers_disjoint_and_unknown():
    c = corpus_of((5, "A"), (9, "B"))
    assert joint_papers(c, ["A", "B"]) == []
    assert joint_h(c, ["A", "B"]).value == 0
    with pytest.raises(UnknownAuthorError):
        joint_papers(c, ["A", "Z"])


def test_joint_h_reduced_list():
    c = corpus_of((9, "A;B"), (9, "A;B"), (3, "A;B;C"), (50, "A"))
    # three joint papers each cited at least 3 times
    assert brute_h([9, 9, 3]) == 3
    assert joint_h(c, ["A", "B"]).value == 3
    assert joint_h(c, ["A"]).value == h_index([9, 9, 3, 50]).value
    c = corpus_of((9, "A;B"), (9, "A;B"), (1, "A;B"))
    assert brute_h([9, 9, 1]) == 2
    assert joint_h(c, ["B", "A"]).value == 2


def test_joint_papers_is_exhaustive_scan():
    rng = np.random.default_rng(5)
    c = random_corpus(rng)
    for group in combinations(c.authors, 3):
        expected = {p.paper_id for p in c.papers if set(group) <= set(p.authors)}
        assert {p.paper_id for p in joint_papers(c, group)} == expected


def test_joint_h_symmetry_monotonicity_and_sublist_bound():
    rng = np.random.default_rng(21)
    for _ in range(30):
        c = random_corpus(rng, int(rng.integers(2, 7)), int(rng.integers(1, 41)))
        authors = c.authors
        for a, b in combinations(authors, 2):
            ab = joint_h(c, [a, b]).value
            assert ab == joint_h(c, [b, a]).value
            assert ab <= joint_h(c, [a]).value and ab <= joint_h(c, [b]).value
        for size in range(1, len(authors)):
            for group in combinations(authors, size):
                base = joint_h(c, group).value
                for extra in set(authors) - set(group):
                    assert joint_h(c, (*group, extra)).value <= base
