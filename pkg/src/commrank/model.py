"""Core domain model: publication records, co-author graphs, communities."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

Edge = tuple[str, str]


class InvalidRange(ValueError):
    """Year filter with year_from > year_to."""


def edge_key(a: str, b: str) -> Edge:
    """Canonical (sorted) form of an undirected edge."""
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class AuthorRecord:
    author_id: str
    name: str
    affiliation: str | None = None


@dataclass(frozen=True)
class PaperRecord:
    """One publication with its citation snapshot and topic labels."""

    paper_id: str
    title: str
    year: int
    topics: frozenset[str]
    author_ids: tuple[str, ...]
    citation_count: int

    def __post_init__(self) -> None:
        if self.citation_count < 0:
            raise ValueError(f"{self.paper_id}: citation_count must be >= 0")
        if not self.author_ids:
            raise ValueError(f"{self.paper_id}: author_ids must be non-empty")
        if len(set(self.author_ids)) != len(self.author_ids):
            raise ValueError(f"{self.paper_id}: author_ids contains duplicates")


@dataclass(frozen=True)
class CorpusFilter:
    """The topic/time window that produced a graph (display provenance only)."""

    topics: tuple[str, ...]
    year_from: int
    year_to: int


@dataclass(frozen=True)
class CoauthorGraph:
    """Undirected co-authorship graph.

    Edges map canonical author-id pairs to collaboration counts.  The count
    is retained for display; path-based analyses treat the graph as
    unweighted.  Instances are immutable and safe to share across workers.
    """

    vertices: frozenset[str]
    edges: Mapping[Edge, int]
    provenance: CorpusFilter | None = None

    def adjacency(self) -> dict[str, list[str]]:
        """Sorted adjacency lists (deterministic iteration order)."""
        adj: dict[str, list[str]] = {v: [] for v in sorted(self.vertices)}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        for nbrs in adj.values():
            nbrs.sort()
        return adj

    def neighbors(self, v: str) -> list[str]:
        if v not in self.vertices:
            raise KeyError(v)
        out = [b if a == v else a for a, b in self.edges if v in (a, b)]
        return sorted(out)

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Community:
    community_id: int
    member_ids: frozenset[str]


@dataclass(frozen=True)
class CommunitySet:
    """Possibly-overlapping communities covering the vertices of a graph."""

    communities: tuple[Community, ...]
    source_graph: CoauthorGraph


def graph_from_edges(
    edges: Iterable[tuple[str, str]],
    extra_vertices: Iterable[str] = (),
    provenance: CorpusFilter | None = None,
) -> CoauthorGraph:
    """Build an unweighted graph directly from an edge list (tests, fixtures)."""
    counts: dict[Edge, int] = {}
    vertices = set(extra_vertices)
    for a, b in edges:
        if a == b:
            raise ValueError(f"self-loop on {a!r}")
        vertices.update((a, b))
        counts[edge_key(a, b)] = counts.get(edge_key(a, b), 0) + 1
    return CoauthorGraph(frozenset(vertices), counts, provenance)


def build_coauthor_graph(
    papers: Sequence[PaperRecord],
    provenance: CorpusFilter | None = None,
) -> CoauthorGraph:
    """Construct the co-author graph of a corpus.

    Every author becomes a vertex (authors of single-author papers end up
    isolated); each paper adds one collaboration to every unordered pair of
    its authors.  The result is independent of paper order.
    """
    vertices: set[str] = set()
    counts: dict[Edge, int] = {}
    for paper in papers:
        vertices.update(paper.author_ids)
        for a, b in combinations(sorted(paper.author_ids), 2):
            key = edge_key(a, b)
            counts[key] = counts.get(key, 0) + 1
    return CoauthorGraph(frozenset(vertices), counts, provenance)


def filter_corpus(
    papers: Sequence[PaperRecord],
    topics: Iterable[str],
    year_from: int,
    year_to: int,
) -> list[PaperRecord]:
    """Select papers inside an inclusive year window matching any keyword.

    Keyword matching is case-insensitive substring containment against the
    paper's topic labels; an empty keyword set selects all topics.
    """
    if year_from > year_to:
        raise InvalidRange(f"year_from {year_from} > year_to {year_to}")
    keywords = [t.strip().lower() for t in topics if t.strip()]

    def matches(paper: PaperRecord) -> bool:
        if not year_from <= paper.year <= year_to:
            return False
        if not keywords:
            return True
        return any(kw in topic for kw in keywords for topic in paper.topics)

    return [p for p in papers if matches(p)]
