import io

import numpy as np
import pytest

from coauthor_h.eigen import jacobi_eigen
from coauthor_h.errors import MatrixError, UnknownAuthorError
from coauthor_h.hmatrix import (HMatrix, build, format_matrix, order_by_h, parse_matrix_text,
                                read_matrix_file)
from coauthor_h.metrics import h_index, joint_h
from conftest import brute_h, corpus_of, random_corpus


def check_invariants(m: HMatrix, corpus):
    assert m.is_symmetric()
    assert np.all(m.entries >= 0)
    for i, a in enumerate(m.authors):
        assert m.entries[i, i] == h_index(corpus.citations_of(a)).value


def test_single_author():
    c = corpus_of(*[(40, "A")] * 35)
    m = build(c, ["A"])
    assert m.entries.tolist() == [[35.0]]
    assert m.n_joint("A") == 35


def test_disjoint_authors_have_vanishing_link():
    c = corpus_of(*[(9, "A")] * 5, *[(9, "B")] * 3)
    assert build(c, ["A", "B"]).entries.tolist() == [[5, 0], [0, 3]]


def test_handmade_pair():
    # A: joint [6, 5] plus solo [8, 7, 1]; B: joint [6, 5] only
    c = corpus_of((6, "A;B"), (5, "B;A"), (8, "A"), (7, "A"), (1, "A"), (4, "A"))
    assert brute_h([6, 5, 8, 7, 1, 4]) == 4
    assert brute_h([6, 5]) == 2
    m = build(c, ["A", "B"])
    assert m.entries.tolist() == [[4, 2], [2, 2]]
    assert m.n_joint("A", "B") == 2
    check_invariants(m, c)


def test_build_errors():
    c = corpus_of((1, "A;B"))
    with pytest.raises(UnknownAuthorError):
        build(c, ["A", "Z"])
    with pytest.raises(ValueError, match="listed twice"):
        build(c, ["A", "B", "A"])
    with pytest.raises(ValueError):
        build(c, [])


def test_caller_order_is_kept(team):
    m = build(team, ["JPE", "MAU", "APE"])
    assert m.authors == ("JPE", "MAU", "APE")
    assert m.diagonal.tolist() == [2, 35, 10]


def test_synthetic_team_matrix_and_counts(team, fx):
    m = build(team, ["MAU", "PCL", "APE", "JPE"])
    assert np.array_equal(m.entries, fx("published_4x4_mau_pcl_ape_jpe").matrix.entries)
    counts = {("MAU", "PCL"): 30, ("MAU", "APE"): 21, ("MAU", "JPE"): 2, ("PCL", "APE"): 8,
              ("PCL", "JPE"): 2, ("APE", "JPE"): 2, ("MAU", "PCL", "APE", "JPE"): 2}
    for group, n in counts.items():
        assert m.n_joint(*group) == n
    check_invariants(m, team)


def test_invariants_on_random_corpora():
    rng = np.random.default_rng(8)
    for _ in range(40):
        c = random_corpus(rng, int(rng.integers(1, 7)), int(rng.integers(1, 41)))
        m = build(c, list(rng.permutation(c.authors)))
        check_invariants(m, c)
        for i in range(m.n):
            for j in range(m.n):
                if i != j:
                    assert m.entries[i, j] == joint_h(c, [m.authors[i], m.authors[j]]).value


def test_order_by_h_identity_and_permutation():
    m = HMatrix(("a", "b", "c"), [[2, 1, 2], [1, 11, 6], [2, 6, 35]])
    s = order_by_h(m)
    assert s.authors == ("c", "b", "a")
    assert s.entries.tolist() == [[35, 6, 2], [6, 11, 1], [2, 1, 2]]
    assert order_by_h(s) == s


def test_order_by_h_stable_on_ties():
    m = HMatrix(("x", "y", "z"), [[3, 1, 0], [1, 5, 0], [0, 0, 3]])
    assert order_by_h(m).authors == ("y", "x", "z")


def test_order_by_h_keeps_spectrum():
    rng = np.random.default_rng(2)
    for _ in range(50):
        a = rng.integers(0, 20, size=(4, 4)).astype(float)
        a = a + a.T
        m = HMatrix(tuple("abcd"), a)
        before = jacobi_eigen(m).eigenvalues
        after = jacobi_eigen(order_by_h(m)).eigenvalues
        assert np.allclose(before, after, atol=1e-9, rtol=0)


def test_submatrix_equals_direct_build(team):
    full = build(team, ["MAU", "PCL", "APE", "JPE"])
    assert full.submatrix(["MAU", "APE"]) == build(team, ["MAU", "APE"])


@pytest.mark.parametrize("name, trace", [
    ("published_2x2_mau_pcl", 46), ("published_4x4_mau_pcl_ape_jpe", 58), ("published_6x6_extended", 84),
])
def test_fixture_traces(fx, name, trace):
    assert fx(name).matrix.trace == trace


def test_all_fixture_matrices_are_valid_hmatrices(all_fixtures):
    assert len(all_fixtures) == 13
    for f in all_fixtures:
        assert f.matrix.is_symmetric() and np.all(f.matrix.entries >= 0)
        assert len(f.eigenvalues) == f.matrix.n


def test_matrix_file_round_trip():
    m = HMatrix(("MAU", "PCL"), [[35, 10], [10, 11]])
    text = format_matrix(m)
    assert parse_matrix_text(text)[0].entries.tolist() == m.entries.tolist()
    assert parse_matrix_text(text)[0].authors == m.authors
    assert read_matrix_file(io.StringIO(text))[0].authors == ("MAU", "PCL")


def test_matrix_file_without_authors_line():
    m, meta = parse_matrix_text("2\n1 0\n0 1\n")
    assert m.authors == ("a1", "a2") and meta == {}


@pytest.mark.parametrize("text, msg", [
    ("", "no matrix size"),
    ("x\n", "expected matrix size"),
    ("2\n1 2\n", "expected 2 rows"),
    ("2\n1 2 3\n2 1\n", "expected 2 entries"),
    ("2\n1 a\n2 1\n", "non-numeric"),
    ("# authors: A B C\n2\n1 0\n0 1\n", "names 3 authors"),
])
def test_matrix_file_errors(text, msg):
    with pytest.raises(MatrixError, match=msg):
        parse_matrix_text(text)
