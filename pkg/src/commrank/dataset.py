"""Line-delimited publication datasets: loading, validation, indexing, summaries.

A dataset file is UTF-8 text with one JSON object per non-blank line.  Two
record kinds are discriminated by the ``kind`` field:

    {"kind": "author", "author_id": "u1", "name": "...", "affiliation": "..."}
    {"kind": "paper", "paper_id": "p1", "title": "...", "year": 2013,
     "topics": ["databases"], "author_ids": ["u1", "u2"], "citation_count": 50}

Unknown fields are ignored.  Citation counts are a static snapshot taken when
the dataset was produced; topic labels are assigned upstream.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Mapping

from .model import AuthorRecord, PaperRecord


class DatasetError(Exception):
    """Base class for dataset validation failures."""


class ParseError(DatasetError):
    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class NegativeCitation(DatasetError):
    def __init__(self, line_no: int, paper_id: str, value: int):
        super().__init__(
            f"line {line_no}: paper {paper_id!r} has negative citation_count {value}"
        )
        self.line_no = line_no
        self.paper_id = paper_id
        self.value = value


class DanglingAuthor(DatasetError):
    def __init__(self, paper_id: str, author_id: str):
        super().__init__(f"paper {paper_id!r} references unknown author {author_id!r}")
        self.paper_id = paper_id
        self.author_id = author_id


@dataclass(frozen=True)
class Dataset:
    """Immutable, fully validated corpus with rebuildable indexes."""

    papers: tuple[PaperRecord, ...]
    authors: tuple[AuthorRecord, ...]
    topic_index: Mapping[str, tuple[str, ...]]
    year_index: Mapping[int, tuple[str, ...]]

    @cached_property
    def authors_by_id(self) -> dict[str, AuthorRecord]:
        return {a.author_id: a for a in self.authors}

    @cached_property
    def papers_by_id(self) -> dict[str, PaperRecord]:
        return {p.paper_id: p for p in self.papers}

    def year_span(self) -> tuple[int, int]:
        """(min year, max year) over all papers; (0, 0) when empty."""
        if not self.papers:
            return (0, 0)
        years = [p.year for p in self.papers]
        return (min(years), max(years))


@dataclass(frozen=True)
class TopicSummary:
    topic: str
    paper_count: int
    author_count: int


@dataclass(frozen=True)
class SummaryStats:
    """Top-five-topics digest: topics ordered by paper count desc, name asc."""

    topics: tuple[TopicSummary, ...]
    papers_per_year: tuple[tuple[int, int], ...]


def build_indexes(
    papers: tuple[PaperRecord, ...] | list[PaperRecord],
) -> tuple[dict[str, tuple[str, ...]], dict[int, tuple[str, ...]]]:
    """Derive topic and year indexes from the paper list (corpus order)."""
    topic_acc: dict[str, list[str]] = {}
    year_acc: dict[int, list[str]] = {}
    for p in papers:
        for topic in sorted(p.topics):
            topic_acc.setdefault(topic, []).append(p.paper_id)
        year_acc.setdefault(p.year, []).append(p.paper_id)
    topic_index = {t: tuple(ids) for t, ids in topic_acc.items()}
    year_index = {y: tuple(ids) for y, ids in year_acc.items()}
    return topic_index, year_index


def _require(obj: dict, field: str, types, line_no: int):
    value = obj.get(field)
    if not isinstance(value, types) or isinstance(value, bool):
        raise ParseError(line_no, f"missing or invalid field {field!r}")
    return value


def load_dataset(path: str | Path) -> Dataset:
    """Parse and validate a dataset file.

    Raises ParseError (with line number), NegativeCitation, or DanglingAuthor
    on the first violation encountered.
    """
    authors: list[AuthorRecord] = []
    papers: list[PaperRecord] = []
    seen_authors: set[str] = set()
    seen_papers: set[str] = set()

    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(line_no, f"invalid JSON: {exc.msg}") from exc
            if not isinstance(obj, dict):
                raise ParseError(line_no, "record is not an object")
            kind = obj.get("kind")
            if kind == "author":
                author_id = _require(obj, "author_id", str, line_no)
                name = _require(obj, "name", str, line_no)
                affiliation = obj.get("affiliation")
                if affiliation is not None and not isinstance(affiliation, str):
                    raise ParseError(line_no, "invalid field 'affiliation'")
                if author_id in seen_authors:
                    raise ParseError(line_no, f"duplicate author_id {author_id!r}")
                seen_authors.add(author_id)
                authors.append(AuthorRecord(author_id, name, affiliation))
            elif kind == "paper":
                paper_id = _require(obj, "paper_id", str, line_no)
                title = _require(obj, "title", str, line_no)
                year = _require(obj, "year", int, line_no)
                citation_count = _require(obj, "citation_count", int, line_no)
                if citation_count < 0:
                    raise NegativeCitation(line_no, paper_id, citation_count)
                topics_raw = _require(obj, "topics", list, line_no)
                author_ids_raw = _require(obj, "author_ids", list, line_no)
                if not all(isinstance(t, str) for t in topics_raw):
                    raise ParseError(line_no, "topics must be strings")
                if not author_ids_raw or not all(
                    isinstance(a, str) for a in author_ids_raw
                ):
                    raise ParseError(line_no, "author_ids must be non-empty strings")
                if len(set(author_ids_raw)) != len(author_ids_raw):
                    raise ParseError(line_no, "author_ids contains duplicates")
                if paper_id in seen_papers:
                    raise ParseError(line_no, f"duplicate paper_id {paper_id!r}")
                seen_papers.add(paper_id)
                papers.append(
                    PaperRecord(
                        paper_id=paper_id,
                        title=title,
                        year=year,
                        topics=frozenset(t.lower() for t in topics_raw),
                        author_ids=tuple(author_ids_raw),
                        citation_count=citation_count,
                    )
                )
            else:
                raise ParseError(line_no, f"unknown kind {kind!r}")

    for p in papers:
        for aid in p.author_ids:
            if aid not in seen_authors:
                raise DanglingAuthor(p.paper_id, aid)

    topic_index, year_index = build_indexes(papers)
    return Dataset(tuple(papers), tuple(authors), topic_index, year_index)


def dataset_to_lines(d: Dataset) -> list[str]:
    """Serialize back to the line-delimited format (authors, then papers)."""
    lines: list[str] = []
    for a in d.authors:
        rec: dict = {"kind": "author", "author_id": a.author_id, "name": a.name}
        if a.affiliation is not None:
            rec["affiliation"] = a.affiliation
        lines.append(json.dumps(rec, ensure_ascii=False))
    for p in d.papers:
        rec = {
            "kind": "paper",
            "paper_id": p.paper_id,
            "title": p.title,
            "year": p.year,
            "topics": sorted(p.topics),
            "author_ids": list(p.author_ids),
            "citation_count": p.citation_count,
        }
        lines.append(json.dumps(rec, ensure_ascii=False))
    return lines


def dump_dataset(d: Dataset, path: str | Path) -> None:
    lines = dataset_to_lines(d)
    text = "\n".join(lines) + ("\n" if lines else "")
    Path(path).write_text(text, encoding="utf-8")


def dataset_summary(d: Dataset) -> SummaryStats:
    """Digest of the five most published-in topics.

    For each such topic: paper count and distinct-author count.  The per-year
    paper counts cover papers carrying at least one of those topics.  Ordering
    is deterministic: paper count descending, then topic ascending.
    """
    paper_counts: Counter[str] = Counter()
    for p in d.papers:
        paper_counts.update(p.topics)
    top = sorted(paper_counts, key=lambda t: (-paper_counts[t], t))[:5]
    top_set = set(top)

    summaries = []
    for topic in top:
        authors: set[str] = set()
        for p in d.papers:
            if topic in p.topics:
                authors.update(p.author_ids)
        summaries.append(TopicSummary(topic, paper_counts[topic], len(authors)))

    year_counts: Counter[int] = Counter(
        p.year for p in d.papers if p.topics & top_set
    )
    per_year = tuple(sorted(year_counts.items()))
    return SummaryStats(tuple(summaries), per_year)
