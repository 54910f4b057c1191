"""
Fractional counting next to the plain matrix
============================================

Two credit rules: 1/q for every author, or the positional rule
(first 1/2, last 1/4, the middle sharing 1/4).
"""

import numpy as np

from coauthor_h import FNRS, SCHREIBER, build, fractional_h, fractional_hmatrix, jacobi_eigen
from coauthor_h.fixtures import TEAM, synthetic_team_corpus
from coauthor_h.fractional import author_entries, scheme_weights

for q in (1, 2, 3, 5):
    print(q, scheme_weights(FNRS, q))

# a short hand-checkable list: (citations, byline position, author count)
papers = [(4, 1, 2), (4, 2, 2), (3, 1, 1)]
print(fractional_h(papers, SCHREIBER).value)  # ranks 0.5, 1, 2

corpus = synthetic_team_corpus()
print(fractional_h(author_entries(corpus, "MAU"), FNRS).value)

plain = build(corpus, TEAM)
print("plain", np.round(jacobi_eigen(plain).eigenvalues, 3))
for scheme in (SCHREIBER, FNRS):
    for mode in ("fractional_rank", "fractional_citation"):
        m = fractional_hmatrix(corpus, TEAM, scheme, mode)
        print(m.label, m.diagonal, np.round(jacobi_eigen(m).eigenvalues, 3))
