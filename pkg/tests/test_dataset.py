"""Dataset loading, validation errors, round-trips, and summaries."""

from __future__ import annotations

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from commrank.dataset import (
    DanglingAuthor,
    Dataset,
    NegativeCitation,
    ParseError,
    build_indexes,
    dataset_summary,
    dataset_to_lines,
    dump_dataset,
    load_dataset,
)

AUTHOR_LINE = '{"kind": "author", "author_id": "%s", "name": "N %s"}'


def write_lines(tmp_path, lines, name="data.jsonl"):
    path = tmp_path / name
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


class TestLoadDataset:
    def test_canonical_fixture(self, seven_authors_path):
        ds = load_dataset(seven_authors_path)
        assert len(ds.papers) == 8
        assert len(ds.authors) == 7
        assert ds.papers_by_id["p5"].citation_count == 50
        assert ds.authors_by_id["u3"].affiliation is None

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.jsonl"
        path.write_text("", encoding="utf-8")
        ds = load_dataset(path)
        assert ds.papers == () and ds.authors == ()

    def test_blank_lines_skipped(self, tmp_path):
        path = write_lines(tmp_path, [AUTHOR_LINE % ("a1", "a1"), "", "   "])
        assert len(load_dataset(path).authors) == 1

    def test_negative_citation_reports_line(self, tmp_path):
        path = write_lines(
            tmp_path,
            [
                AUTHOR_LINE % ("a1", "a1"),
                json.dumps(
                    {
                        "kind": "paper",
                        "paper_id": "p1",
                        "title": "t",
                        "year": 2020,
                        "topics": [],
                        "author_ids": ["a1"],
                        "citation_count": -1,
                    }
                ),
            ],
        )
        with pytest.raises(NegativeCitation) as err:
            load_dataset(path)
        assert err.value.line_no == 2
        assert err.value.paper_id == "p1"

    def test_dangling_author_names_paper(self, tmp_path):
        path = write_lines(
            tmp_path,
            [
                json.dumps(
                    {
                        "kind": "paper",
                        "paper_id": "p9",
                        "title": "t",
                        "year": 2020,
                        "topics": ["x"],
                        "author_ids": ["ghost"],
                        "citation_count": 0,
                    }
                )
            ],
        )
        with pytest.raises(DanglingAuthor) as err:
            load_dataset(path)
        assert err.value.paper_id == "p9"
        assert err.value.author_id == "ghost"

    @pytest.mark.parametrize(
        "bad_line",
        [
            "not json at all",
            '{"kind": "widget"}',
            '{"kind": "author", "name": "missing id"}',
            '{"kind": "paper", "paper_id": "p", "title": "t", "year": "x", '
            '"topics": [], "author_ids": ["a1"], "citation_count": 0}',
            '{"kind": "paper", "paper_id": "p", "title": "t", "year": 2000, '
            '"topics": [], "author_ids": [], "citation_count": 0}',
            '{"kind": "paper", "paper_id": "p", "title": "t", "year": 2000, '
            '"topics": [], "author_ids": ["a1", "a1"], "citation_count": 0}',
        ],
    )
    def test_parse_errors_carry_line_numbers(self, tmp_path, bad_line):
        path = write_lines(tmp_path, [AUTHOR_LINE % ("a1", "a1"), bad_line])
        with pytest.raises(ParseError) as err:
            load_dataset(path)
        assert err.value.line_no == 2

    def test_duplicate_author_id_rejected(self, tmp_path):
        path = write_lines(
            tmp_path, [AUTHOR_LINE % ("a1", "a1"), AUTHOR_LINE % ("a1", "again")]
        )
        with pytest.raises(ParseError):
            load_dataset(path)

    def test_unknown_fields_ignored(self, tmp_path):
        rec = {
            "kind": "author",
            "author_id": "a1",
            "name": "N",
            "orcid": "0000",
            "extra": [1, 2],
        }
        path = write_lines(tmp_path, [json.dumps(rec)])
        ds = load_dataset(path)
        assert ds.authors[0].author_id == "a1"

    def test_topics_normalized_to_lowercase(self, tmp_path):
        path = write_lines(
            tmp_path,
            [
                AUTHOR_LINE % ("a1", "a1"),
                json.dumps(
                    {
                        "kind": "paper",
                        "paper_id": "p1",
                        "title": "t",
                        "year": 2020,
                        "topics": ["Data Mining"],
                        "author_ids": ["a1"],
                        "citation_count": 0,
                    }
                ),
            ],
        )
        assert load_dataset(path).papers[0].topics == frozenset({"data mining"})


class TestRoundTrip:
    def test_fixture_round_trip_is_fixed_point(self, seven_authors_path, tmp_path):
        first = load_dataset(seven_authors_path)
        dump_dataset(first, tmp_path / "copy.jsonl")
        second = load_dataset(tmp_path / "copy.jsonl")
        assert first == second
        dump_dataset(second, tmp_path / "copy2.jsonl")
        assert load_dataset(tmp_path / "copy2.jsonl") == second

    def test_indexes_rebuild_exactly(self, seven_authors_path):
        ds = load_dataset(seven_authors_path)
        topic_index, year_index = build_indexes(ds.papers)
        assert topic_index == ds.topic_index
        assert year_index == ds.year_index

    def test_index_consistency(self, seven_authors_path):
        ds = load_dataset(seven_authors_path)
        for topic, pids in ds.topic_index.items():
            for pid in pids:
                assert topic in ds.papers_by_id[pid].topics
        for year, pids in ds.year_index.items():
            for pid in pids:
                assert ds.papers_by_id[pid].year == year


class TestSummary:
    def test_single_topic_fixture(self, seven_authors_path):
        ds = load_dataset(seven_authors_path)
        summary = dataset_summary(ds)
        assert len(summary.topics) == 1
        top = summary.topics[0]
        assert top.topic == "databases"
        assert top.paper_count == 8
        assert top.author_count == 7
        assert sum(n for _, n in summary.papers_per_year) == 8

    def test_empty_dataset(self):
        ds = Dataset((), (), {}, {})
        summary = dataset_summary(ds)
        assert summary.topics == ()
        assert summary.papers_per_year == ()

    def test_equal_counts_tie_break_alphabetical(self, tmp_path):
        lines = [AUTHOR_LINE % ("a1", "a1")]
        for i, topic in enumerate(["zeta", "alpha"]):
            lines.append(
                json.dumps(
                    {
                        "kind": "paper",
                        "paper_id": f"p{i}",
                        "title": "t",
                        "year": 2020,
                        "topics": [topic],
                        "author_ids": ["a1"],
                        "citation_count": 0,
                    }
                )
            )
        ds = load_dataset(write_lines(tmp_path, lines))
        assert [t.topic for t in dataset_summary(ds).topics] == ["alpha", "zeta"]

    def test_top_five_cap(self, tmp_path):
        lines = [AUTHOR_LINE % ("a1", "a1")]
        pid = 0
        for rank, topic in enumerate("abcdefg"):
            for _ in range(10 - rank):
                pid += 1
                lines.append(
                    json.dumps(
                        {
                            "kind": "paper",
                            "paper_id": f"p{pid}",
                            "title": "t",
                            "year": 2020,
                            "topics": [topic],
                            "author_ids": ["a1"],
                            "citation_count": 0,
                        }
                    )
                )
        ds = load_dataset(write_lines(tmp_path, lines))
        assert [t.topic for t in dataset_summary(ds).topics] == list("abcde")


@given(
    st.lists(
        st.tuples(
            st.sampled_from(["x", "y", "z"]),
            st.integers(2010, 2014),
            st.integers(0, 50),
        ),
        max_size=10,
    )
)
def test_generated_round_trip(tmp_path_factory, rows):
    lines = [AUTHOR_LINE % ("a1", "a1")]
    for i, (topic, year, cites) in enumerate(rows):
        lines.append(
            json.dumps(
                {
                    "kind": "paper",
                    "paper_id": f"p{i}",
                    "title": f"T {i}",
                    "year": year,
                    "topics": [topic],
                    "author_ids": ["a1"],
                    "citation_count": cites,
                }
            )
        )
    tmp = tmp_path_factory.mktemp("roundtrip")
    path = write_lines(tmp, lines)
    first = load_dataset(path)
    (tmp / "again.jsonl").write_text(
        "\n".join(dataset_to_lines(first)) + "\n", encoding="utf-8"
    )
    assert load_dataset(tmp / "again.jsonl") == first
