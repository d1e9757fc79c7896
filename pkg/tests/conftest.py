"""Shared fixtures: canonical seven-author corpus and small named graphs."""

from __future__ import annotations

from pathlib import Path

import pytest

from commrank.model import (
    Community,
    CommunitySet,
    PaperRecord,
    build_coauthor_graph,
    graph_from_edges,
)

DATA_DIR = Path(__file__).resolve().parents[1] / "data"


def make_paper(pid, authors, cites, year=2015, topics=("databases",)):
    return PaperRecord(
        paper_id=pid,
        title=f"Paper {pid}",
        year=year,
        topics=frozenset(topics),
        author_ids=tuple(authors),
        citation_count=cites,
    )


SEVEN_AUTHOR_ROWS = [
    ("p1", 2010, ("u1", "u2"), 0),
    ("p2", 2011, ("u1", "u4"), 0),
    ("p3", 2012, ("u2", "u3"), 3),
    ("p4", 2012, ("u3", "u4"), 3),
    ("p5", 2013, ("u1", "u2"), 50),
    ("p6", 2014, ("u4", "u5", "u6"), 9),
    ("p7", 2015, ("u6", "u7"), 10),
    ("p8", 2016, ("u4", "u7"), 11),
]


@pytest.fixture
def seven_papers() -> list[PaperRecord]:
    return [
        make_paper(pid, authors, cites, year=year)
        for pid, year, authors, cites in SEVEN_AUTHOR_ROWS
    ]


@pytest.fixture
def left_community() -> Community:
    return Community(0, frozenset({"u1", "u2", "u3", "u4"}))


@pytest.fixture
def right_community() -> Community:
    return Community(1, frozenset({"u4", "u5", "u6", "u7"}))


@pytest.fixture
def seven_community_set(seven_papers, left_community, right_community):
    graph = build_coauthor_graph(seven_papers)
    return CommunitySet((left_community, right_community), graph)


@pytest.fixture
def seven_authors_path() -> Path:
    return DATA_DIR / "seven_authors.jsonl"


@pytest.fixture
def bowtie_path() -> Path:
    return DATA_DIR / "bowtie.jsonl"


@pytest.fixture
def bridged_path() -> Path:
    return DATA_DIR / "bridged.jsonl"


@pytest.fixture
def path3():
    return graph_from_edges([("a", "b"), ("b", "c")])


@pytest.fixture
def triangle():
    return graph_from_edges([("a", "b"), ("b", "c"), ("a", "c")])


@pytest.fixture
def bowtie():
    """Two triangles sharing the single vertex v."""
    return graph_from_edges(
        [("a", "b"), ("a", "v"), ("b", "v"), ("c", "d"), ("c", "v"), ("d", "v")]
    )


@pytest.fixture
def bridged_triangles():
    """Triangles {a,b,c} and {d,e,f} joined by the bridge (c, d)."""
    return graph_from_edges(
        [
            ("a", "b"),
            ("b", "c"),
            ("a", "c"),
            ("d", "e"),
            ("e", "f"),
            ("d", "f"),
            ("c", "d"),
        ]
    )


@pytest.fixture
def star4():
    return graph_from_edges([("s", "l1"), ("s", "l2"), ("s", "l3"), ("s", "l4")])
