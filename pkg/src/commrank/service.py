"""HTTP query service: detection + ranking pipeline behind snapshot caching.

Endpoints:

    GET  /health             liveness probe
    GET  /topics             topic list and top-five-topics summary
    POST /query              run (or reuse) a detection/ranking snapshot
    GET  /communities/{id}   drill-down for one community of the latest query
    GET  /authors/{id}       drill-down for one author of the latest query

Every query builds an immutable snapshot keyed by the normalized request
(sorted lowercase topics, year window, k); identical requests are served the
exact same payload from a bounded LRU cache.  Detail endpoints resolve
against the most recent snapshot.  Errors use {"code", "message"} bodies.
"""

from __future__ import annotations

from collections import OrderedDict
from pathlib import Path
from threading import Lock
from typing import Sequence

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .conga import best_cut, run_conga
from .dataset import Dataset, dataset_summary, load_dataset
from .influence import (
    build_reports,
    owned_papers,
    report_record,
    round2,
)
from .model import (
    CorpusFilter,
    PaperRecord,
    build_coauthor_graph,
    filter_corpus,
)

# node area shown for a community is proportional to its normalized score
AREA_PER_NORMALIZED_UNIT = 40.0

CACHE_SIZE = 32


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


class QueryBody(BaseModel):
    topics: list[str] = Field(default_factory=list)
    year_from: int
    year_to: int
    k: int | None = Field(default=None, ge=1)


def normalize_request(
    topics: Sequence[str], year_from: int, year_to: int, k: int | None
) -> tuple[tuple[str, ...], int, int, int | None]:
    """Canonical cache key: trimmed lowercase topics, sorted and deduplicated."""
    cleaned = sorted({t.strip().lower() for t in topics if t.strip()})
    return (tuple(cleaned), year_from, year_to, k)


def _citation_sum(papers: Sequence[PaperRecord]) -> int:
    return sum(p.citation_count for p in papers)


def _year_series(papers: Sequence[PaperRecord]) -> list[dict]:
    per_year: dict[int, dict] = {}
    for p in papers:
        row = per_year.setdefault(
            p.year, {"year": p.year, "paper_count": 0, "citation_count": 0}
        )
        row["paper_count"] += 1
        row["citation_count"] += p.citation_count
    return [per_year[y] for y in sorted(per_year)]


def _most_influential_author(
    members: frozenset[str], owned: Sequence[PaperRecord]
) -> str | None:
    """Member with the highest summed citations over owned papers (ties: id)."""
    if not owned:
        return None
    totals = {m: 0 for m in members}
    for p in owned:
        for aid in p.author_ids:
            totals[aid] += p.citation_count
    return min(totals, key=lambda m: (-totals[m], m))


def build_snapshot(
    dataset: Dataset,
    topics: Sequence[str],
    year_from: int,
    year_to: int,
    k: int | None,
) -> dict:
    """Run the full pipeline and assemble every payload the UI modes need.

    Returns {"result": ..., "communities": {id: detail}, "authors": {id:
    detail}}.  The result lists the top-k communities; detail maps cover all
    detected communities and all authors so overlap links always resolve.
    """
    key = normalize_request(topics, year_from, year_to, k)
    cleaned_topics, year_from, year_to, k = key
    papers = filter_corpus(dataset.papers, cleaned_topics, year_from, year_to)
    provenance = CorpusFilter(cleaned_topics, year_from, year_to)
    graph = build_coauthor_graph(papers, provenance)
    dendrogram = run_conga(graph)
    communities = best_cut(dendrogram)
    reports = build_reports(communities, papers)
    top = reports if k is None else reports[:k]

    names = {a.author_id: a.name for a in dataset.authors}
    by_id = {c.community_id: c for c in communities.communities}
    membership: dict[str, list[int]] = {v: [] for v in sorted(graph.vertices)}
    for c in communities.communities:
        for member in sorted(c.member_ids):
            membership[member].append(c.community_id)

    community_details: dict[int, dict] = {}
    for report in reports:
        community = by_id[report.community_id]
        owned = owned_papers(community, papers)
        overlapping = sorted(
            other.community_id
            for other in communities.communities
            if other.community_id != community.community_id
            and other.member_ids & community.member_ids
        )
        community_details[report.community_id] = {
            "community_id": report.community_id,
            "influence": round2(report.influence),
            "normalized": round2(report.normalized),
            "rank": report.rank,
            "authors": [
                {"author_id": aid, "name": names.get(aid, aid)}
                for aid in sorted(community.member_ids)
            ],
            "paper_count": len(owned),
            "citation_total": _citation_sum(owned),
            "most_influential_author": _most_influential_author(
                community.member_ids, owned
            ),
            "overlapping_community_ids": overlapping,
            "per_year": _year_series(owned),
        }

    author_details: dict[str, dict] = {}
    adjacency = graph.adjacency()
    for aid in sorted(graph.vertices):
        own_papers = [p for p in papers if aid in p.author_ids]
        record = dataset.authors_by_id.get(aid)
        publications = [
            {
                "paper_id": p.paper_id,
                "title": p.title,
                "year": p.year,
                "citation_count": p.citation_count,
            }
            for p in sorted(own_papers, key=lambda p: (p.year, p.paper_id))
        ]
        author_details[aid] = {
            "author_id": aid,
            "name": names.get(aid, aid),
            "affiliation": record.affiliation if record else None,
            "paper_count": len(own_papers),
            "citation_total": _citation_sum(own_papers),
            "community_ids": membership[aid],
            "coauthor_ids": adjacency[aid],
            "citing_author_count": 0,
            "citing_author_data_available": False,
            "publications": publications,
        }

    top_ids = {r.community_id for r in top}
    multi = [
        {"author_id": aid, "name": names.get(aid, aid), "community_ids": ids}
        for aid, ids in membership.items()
        if len([c for c in ids if c in top_ids]) >= 2
    ]
    result = {
        "request": {
            "topics": list(cleaned_topics),
            "year_from": year_from,
            "year_to": year_to,
            "k": k,
        },
        "communities": [
            {
                **report_record(r),
                "node_area": round2(r.normalized) * AREA_PER_NORMALIZED_UNIT,
            }
            for r in top
        ],
        "authors": [
            {"author_id": aid, "name": names.get(aid, aid), "community_ids": ids}
            for aid, ids in membership.items()
        ],
        "coauthor_edges": [
            {"source": a, "target": b, "collaboration_count": graph.edges[(a, b)]}
            for a, b in sorted(graph.edges)
        ],
        "multi_community_authors": multi,
        "charts": {
            "authors_per_community": [
                {"community_id": r.community_id, "author_count": len(r.member_ids)}
                for r in top
            ],
            "papers_per_year": [
                {"year": row["year"], "paper_count": row["paper_count"]}
                for row in _year_series(papers)
            ],
        },
    }
    return {"result": result, "communities": community_details, "authors": author_details}


class _ServiceState:
    """Dataset plus snapshot cache; snapshot swaps are atomic under the lock."""

    def __init__(self, dataset: Dataset | None):
        self.dataset = dataset
        self.cache: OrderedDict[tuple, dict] = OrderedDict()
        self.latest: dict | None = None
        self.lock = Lock()

    def query(self, body: QueryBody) -> dict:
        if self.dataset is None:
            raise ApiError(404, "dataset_not_found", "no dataset is loaded")
        if body.year_from > body.year_to:
            raise ApiError(
                400,
                "invalid_range",
                f"year_from {body.year_from} > year_to {body.year_to}",
            )
        key = normalize_request(body.topics, body.year_from, body.year_to, body.k)
        with self.lock:
            snapshot = self.cache.get(key)
            if snapshot is not None:
                self.cache.move_to_end(key)
                self.latest = snapshot
                return snapshot
        # built outside the lock: queries are pure functions of (dataset, key)
        snapshot = build_snapshot(self.dataset, *key)
        with self.lock:
            self.cache[key] = snapshot
            self.cache.move_to_end(key)
            while len(self.cache) > CACHE_SIZE:
                self.cache.popitem(last=False)
            self.latest = snapshot
        return snapshot


def create_app(dataset: Dataset | str | Path) -> FastAPI:
    """Build the service around one dataset (instance or file path).

    A missing dataset file degrades gracefully: /health still answers and
    every other endpoint reports dataset_not_found.
    """
    loaded: Dataset | None
    if isinstance(dataset, Dataset):
        loaded = dataset
    else:
        path = Path(dataset)
        loaded = load_dataset(path) if path.exists() else None
    state = _ServiceState(loaded)

    app = FastAPI(title="commrank", version="0.1.0")

    @app.exception_handler(ApiError)
    async def handle_api_error(request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status, content={"code": exc.code, "message": exc.message}
        )

    @app.exception_handler(RequestValidationError)
    async def handle_validation_error(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=422,
            content={"code": "validation_error", "message": str(exc.errors())},
        )

    @app.get("/health")
    def health():
        return {"status": "ok", "dataset_loaded": state.dataset is not None}

    @app.get("/topics")
    def topics():
        if state.dataset is None:
            raise ApiError(404, "dataset_not_found", "no dataset is loaded")
        summary = dataset_summary(state.dataset)
        all_topics = sorted(
            {t for p in state.dataset.papers for t in p.topics}
        )
        year_min, year_max = state.dataset.year_span()
        return {
            "topics": all_topics,
            "year_min": year_min,
            "year_max": year_max,
            "top_topics": [
                {
                    "topic": t.topic,
                    "paper_count": t.paper_count,
                    "author_count": t.author_count,
                }
                for t in summary.topics
            ],
            "papers_per_year": [
                {"year": y, "paper_count": n} for y, n in summary.papers_per_year
            ],
        }

    @app.post("/query")
    def query(body: QueryBody):
        return state.query(body)["result"]

    @app.get("/communities/{community_id}")
    def community(community_id: int):
        snapshot = state.latest
        if snapshot is None or community_id not in snapshot["communities"]:
            raise ApiError(
                404, "unknown_community", f"no community {community_id} in snapshot"
            )
        return snapshot["communities"][community_id]

    @app.get("/authors/{author_id}")
    def author(author_id: str):
        snapshot = state.latest
        if snapshot is None or author_id not in snapshot["authors"]:
            raise ApiError(
                404, "unknown_author", f"no author {author_id!r} in snapshot"
            )
        return snapshot["authors"][author_id]

    return app
