"""Fetch an author's works from a cursor-paginated scholarly API.

The response shape is the OpenAlex ``/works`` one::

    {"meta": {"next_cursor": "..."},
     "results": [{"id": ..., "display_name": ..., "publication_year": ...,
                  "cited_by_count": ..., "authorships": [
                      {"author": {"id": ..., "display_name": ...}}, ...]}]}

Transports are callables ``transport(url, params, headers) -> (status, text)``
so tests and offline runs can replay recorded pages
(:class:`ReplayTransport`) instead of touching the network.
"""

from __future__ import annotations

import json
import logging
import os
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from .corpus import Corpus, Paper
from .errors import DataError

log = logging.getLogger(__name__)

MAILTO_ENV = "COAUTHOR_H_MAILTO"
MAX_ATTEMPTS = 3
BACKOFF = 0.5  # seconds; doubled after each failed attempt


class FetchError(DataError):
    pass


class HTTPStatusError(FetchError):
    def __init__(self, status: int, page: int, url: str = ""):
        self.status = status
        self.page = page
        super().__init__(f"HTTP {status} on page {page} {url}".rstrip())


class MalformedResponseError(FetchError):
    def __init__(self, page: int, detail: str):
        self.page = page
        super().__init__(f"malformed response on page {page}: {detail}")


class TransientError(FetchError):
    """Network-level failure; the fetcher retries these."""


@dataclass(frozen=True)
class RawWorkRecord:
    source_id: str
    title: str
    year: int | None
    cited_by_count: int
    authorships: tuple[tuple[str, str], ...]  # (author source id, display name)


Transport = Callable[[str, dict, dict], tuple[int, str]]


def requests_transport(url: str, params: dict, headers: dict, timeout: float = 30.0):
    import requests

    try:
        r = requests.get(url, params=params, headers=headers, timeout=timeout)
    except requests.RequestException as exc:
        raise TransientError(str(exc)) from exc
    return r.status_code, r.text


class ReplayTransport:
    """Serve recorded pages keyed by cursor value.

    Each recorded page is a JSON file ``{"cursor": ..., "status": ...,
    "body": "<raw response text>"}``; the body is kept as text so truncated
    or corrupt responses can be recorded too.
    """

    def __init__(self, pages: dict[str, tuple[int, str]]):
        self.pages = dict(pages)
        self.calls: list[dict] = []

    @classmethod
    def from_dir(cls, path) -> "ReplayTransport":
        pages = {}
        for f in sorted(Path(path).glob("*.json")):
            rec = json.loads(f.read_text(encoding="utf-8"))
            pages[rec["cursor"]] = (int(rec["status"]), rec["body"])
        return cls(pages)

    def __call__(self, url, params, headers):
        self.calls.append({"url": url, "params": dict(params), "headers": dict(headers)})
        cursor = params.get("cursor", "*")
        if cursor not in self.pages:
            return 404, json.dumps({"error": f"no recorded page for cursor {cursor!r}"})
        return self.pages[cursor]


def _headers() -> dict:
    mailto = os.environ.get(MAILTO_ENV)
    return {"User-Agent": f"coauthor-h (mailto:{mailto})"} if mailto else {}


def _get(transport, url, params, headers, page, sleep) -> tuple[int, str]:
    delay = BACKOFF
    for attempt in range(1, MAX_ATTEMPTS + 1):
        try:
            return transport(url, params, headers)
        except TransientError as exc:
            if attempt == MAX_ATTEMPTS:
                raise FetchError(
                    f"network failure on page {page} after {MAX_ATTEMPTS} attempts: {exc}"
                ) from exc
            log.warning("page %d attempt %d failed (%s); retrying in %.1fs",
                        page, attempt, exc, delay)
            sleep(delay)
            delay *= 2
    raise AssertionError("unreachable")


def _parse_work(item, page: int) -> RawWorkRecord:
    if not isinstance(item, dict):
        raise MalformedResponseError(page, "result entry is not an object")
    sid = item.get("id")
    if not isinstance(sid, str) or not sid:
        raise MalformedResponseError(page, "work without an id")
    cites = item.get("cited_by_count", 0)
    if isinstance(cites, bool) or not isinstance(cites, int) or cites < 0:
        raise MalformedResponseError(page, f"work {sid}: bad cited_by_count {cites!r}")
    year = item.get("publication_year")
    if year is not None and (isinstance(year, bool) or not isinstance(year, int)):
        raise MalformedResponseError(page, f"work {sid}: bad publication_year {year!r}")
    title = item.get("display_name") or item.get("title") or ""
    authorships = []
    for au in item.get("authorships") or []:
        author = (au or {}).get("author") or {}
        authorships.append((author.get("id") or "", author.get("display_name") or ""))
    return RawWorkRecord(sid, str(title), year, cites, tuple(authorships))


def fetch_author_works(
    endpoint: str,
    author_source_id: str,
    page_limit: int = 50,
    transport: Transport | None = None,
    per_page: int = 200,
    sleep=time.sleep,
) -> list[RawWorkRecord]:
    """Walk the cursor pages of one author's works, in API order.

    Raises
    ------
    HTTPStatusError
        Any response with status >= 400 (carries ``status`` and ``page``).
    MalformedResponseError
        Unparseable or wrongly shaped body (carries ``page``).
    FetchError
        Network failure persisting over 3 attempts.
    """
    if page_limit < 1:
        raise ValueError("page_limit must be positive")
    transport = transport or requests_transport
    url = endpoint.rstrip("/") + "/works"
    headers = _headers()
    records: list[RawWorkRecord] = []
    cursor = "*"
    for page in range(1, page_limit + 1):
        params = {"filter": f"author.id:{author_source_id}", "per-page": per_page,
                  "cursor": cursor}
        status, text = _get(transport, url, params, headers, page, sleep)
        if status >= 400:
            raise HTTPStatusError(status, page, url)
        try:
            body = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MalformedResponseError(page, f"invalid JSON ({exc.msg})") from None
        if not isinstance(body, dict) or not isinstance(body.get("results"), list):
            raise MalformedResponseError(page, "missing 'results' array")
        records.extend(_parse_work(item, page) for item in body["results"])
        cursor = (body.get("meta") or {}).get("next_cursor")
        if not cursor or not body["results"]:
            break
    return records


def _short_id(source_id: str, _name: str = "") -> str:
    return source_id.rstrip("/").rsplit("/", 1)[-1]


ID_POLICIES = {
    "source_id": lambda sid, name: sid,
    "short_id": _short_id,
    "display_name": lambda sid, name: name.strip(),
}


def normalize(
    records: Sequence[RawWorkRecord], id_policy="source_id"
) -> tuple[list[Paper], list[str]]:
    """Turn raw work records into Papers.

    `id_policy` is a policy name (``source_id``, ``short_id``,
    ``display_name``) or a callable ``(source_id, display_name) -> str``.
    Returns the papers and a list of warnings for dropped records/authors.
    """
    policy = ID_POLICIES[id_policy] if isinstance(id_policy, str) else id_policy
    papers, warnings = [], []
    for rec in records:
        authors: list[str] = []
        for sid, name in rec.authorships:
            token = (policy(sid, name) or "").strip() if (sid or name) else ""
            if not token:
                warnings.append(f"work {rec.source_id}: dropped authorship with no id")
                continue
            if token in authors:
                warnings.append(f"work {rec.source_id}: duplicate author {token} removed")
                continue
            authors.append(token)
        if not authors:
            warnings.append(f"work {rec.source_id}: no usable authorships, dropped")
            continue
        papers.append(Paper(rec.source_id, rec.title, rec.year, rec.cited_by_count,
                            tuple(authors)))
    return papers, warnings


def fetch_corpus(
    endpoint: str,
    author_source_id: str,
    page_limit: int = 50,
    transport: Transport | None = None,
    id_policy="source_id",
    source_name: str = "openalex",
) -> tuple[Corpus, list[str]]:
    records = fetch_author_works(endpoint, author_source_id, page_limit, transport)
    papers, warnings = normalize(records, id_policy)
    # the same work can come back twice across pages
    unique = {}
    for p in papers:
        if p.paper_id in unique:
            warnings.append(f"work {p.paper_id}: repeated in results, kept first")
            continue
        unique[p.paper_id] = p
    corpus = Corpus.from_papers(
        unique.values(),
        provenance={"source": source_name, "endpoint": endpoint, "author": author_source_id},
    )
    return corpus, warnings
