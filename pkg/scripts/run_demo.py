#!/usr/bin/env python3
"""End-to-end walkthrough on the bundled demo dataset.

Loads the corpus, filters it to a topic/time window, detects overlapping
communities, ranks them by influence, and prints what the query service
would serve.  Handy for eyeballing behavior after changes:

    python3 scripts/run_demo.py [--topics "data mining"] [--from 2010 --to 2016]
"""

from __future__ import annotations

import argparse
from pathlib import Path

from commrank.conga import best_cut, run_conga
from commrank.dataset import dataset_summary, load_dataset
from commrank.influence import rank_top_k, round2
from commrank.model import build_coauthor_graph, filter_corpus

DATA = Path(__file__).resolve().parents[1] / "data" / "demo.jsonl"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dataset", type=Path, default=DATA)
    parser.add_argument("--topics", default="")
    parser.add_argument("--from", dest="year_from", type=int, default=None)
    parser.add_argument("--to", dest="year_to", type=int, default=None)
    parser.add_argument("--k", type=int, default=None)
    args = parser.parse_args()

    dataset = load_dataset(args.dataset)
    year_min, year_max = dataset.year_span()
    year_from = args.year_from if args.year_from is not None else year_min
    year_to = args.year_to if args.year_to is not None else year_max
    topics = [t.strip() for t in args.topics.split(",") if t.strip()]

    print(f"dataset: {len(dataset.papers)} papers, {len(dataset.authors)} authors")
    summary = dataset_summary(dataset)
    for t in summary.topics:
        print(f"  topic {t.topic!r}: {t.paper_count} papers, {t.author_count} authors")

    papers = filter_corpus(dataset.papers, topics, year_from, year_to)
    graph = build_coauthor_graph(papers)
    print(
        f"window {year_from}-{year_to}, topics={topics or 'all'}: "
        f"{len(papers)} papers, {graph.vertex_count} authors, "
        f"{graph.edge_count} collaboration edges"
    )

    dendrogram = run_conga(graph)
    communities = best_cut(dendrogram)
    print(f"{len(dendrogram.events)} dendrogram events, "
          f"{len(communities.communities)} communities at the best cut")

    for report in rank_top_k(communities, papers, args.k):
        members = ",".join(report.member_ids)
        print(
            f"  #{report.rank} community {report.community_id}: "
            f"influence {round2(report.influence):.2f} "
            f"(normalized {round2(report.normalized):.2f}, "
            f"h-index {report.baselines.h_index}) members: {members}"
        )


if __name__ == "__main__":
    main()
