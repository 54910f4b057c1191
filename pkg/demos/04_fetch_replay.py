"""
Building a corpus from a works API
==================================

Recorded API pages are replayed instead of hitting the network. Pass
``transport=None`` (the default) to query a live endpoint.
"""

from coauthor_h import ReplayTransport, fetch_corpus, h_index
from coauthor_h.fixtures import REPLAY_DIR

transport = ReplayTransport.from_dir(REPLAY_DIR)
corpus, warnings = fetch_corpus("https://api.openalex.org", "https://openalex.org/A100",
                                transport=transport, id_policy="short_id")

print([c["params"]["cursor"] for c in transport.calls])
print(warnings)
for p in corpus.papers:
    print(p.paper_id, p.citations, p.authors)

for a in corpus.authors:
    print(a, len(corpus.papers_of(a)), "papers, h =", h_index(corpus.citations_of(a)).value)
print(corpus.provenance)
print(corpus.digest())
