"""
Team report from a publication list
===================================

The bundled synthetic corpus is built so that its H-matrix for
MAU, PCL, APE and JPE equals the published four-author example.
"""

from coauthor_h import author_stats, subset_average, team_report
from coauthor_h.fixtures import TEAM, synthetic_team_corpus

corpus = synthetic_team_corpus()
print(len(corpus.papers), "papers,", len(corpus.authors), "authors")

# per-author productivity figures
for a in TEAM:
    s = author_stats(corpus, a)
    print(f"{a}: h={s.h} top={s.most_cited} core={s.citations_in_h_core} pubs={s.n_publications}")

# matrix, spectrum, weights and the rank-matched gain of each author
report = team_report(corpus, TEAM)
print(report.render_text())

# average over the pairs and triples MAU belongs to
for k in (2, 3, 4):
    print(subset_average(corpus, "MAU", TEAM, k).render_text())
    print()
