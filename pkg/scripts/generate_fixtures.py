#!/usr/bin/env python3
"""Regenerate the datasets under data/.

seven_authors.jsonl   seven authors, eight papers, two natural communities joined
               through one shared author; the canonical worked example.
bowtie.jsonl   two three-author papers sharing one author: the co-author
               graph is two triangles glued at a single vertex.
bridged.jsonl  two three-author papers plus one two-author paper bridging
               them: two triangles joined by a single edge.
demo.jsonl     a larger seeded synthetic corpus for driving the web UI.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parents[1] / "data"


def author(author_id: str, name: str, affiliation: str | None = None) -> dict:
    rec = {"kind": "author", "author_id": author_id, "name": name}
    if affiliation is not None:
        rec["affiliation"] = affiliation
    return rec


def paper(
    paper_id: str,
    title: str,
    year: int,
    topics: list[str],
    author_ids: list[str],
    citation_count: int,
) -> dict:
    return {
        "kind": "paper",
        "paper_id": paper_id,
        "title": title,
        "year": year,
        "topics": topics,
        "author_ids": author_ids,
        "citation_count": citation_count,
    }


def write(name: str, records: list[dict]) -> None:
    path = DATA_DIR / name
    path.write_text(
        "\n".join(json.dumps(r, ensure_ascii=False) for r in records) + "\n",
        encoding="utf-8",
    )
    print(f"wrote {path} ({len(records)} records)")


def seven_authors() -> list[dict]:
    records = [
        author("u1", "Author One", "University A"),
        author("u2", "Author Two", "University A"),
        author("u3", "Author Three"),
        author("u4", "Author Four", "University B"),
        author("u5", "Author Five"),
        author("u6", "Author Six", "University C"),
        author("u7", "Author Seven"),
    ]
    rows = [
        ("p1", 2010, ["u1", "u2"], 0),
        ("p2", 2011, ["u1", "u4"], 0),
        ("p3", 2012, ["u2", "u3"], 3),
        ("p4", 2012, ["u3", "u4"], 3),
        ("p5", 2013, ["u1", "u2"], 50),
        ("p6", 2014, ["u4", "u5", "u6"], 9),
        ("p7", 2015, ["u6", "u7"], 10),
        ("p8", 2016, ["u4", "u7"], 11),
    ]
    for pid, year, authors, cites in rows:
        records.append(
            paper(pid, f"Paper {pid[1:]}", year, ["databases"], authors, cites)
        )
    return records


def bowtie() -> list[dict]:
    records = [
        author(aid, f"Author {aid.upper()}") for aid in ["a", "b", "c", "d", "v"]
    ]
    records.append(paper("q1", "Left wing", 2014, ["graphs"], ["a", "b", "v"], 12))
    records.append(paper("q2", "Right wing", 2015, ["graphs"], ["c", "d", "v"], 5))
    return records


def bridged() -> list[dict]:
    records = [
        author(aid, f"Author {aid.upper()}")
        for aid in ["a", "b", "c", "d", "e", "f"]
    ]
    records.append(paper("r1", "First trio", 2014, ["graphs"], ["a", "b", "c"], 8))
    records.append(paper("r2", "Second trio", 2015, ["graphs"], ["d", "e", "f"], 6))
    records.append(paper("r3", "The bridge", 2016, ["graphs"], ["c", "d"], 3))
    return records


def demo(seed: int = 7) -> list[dict]:
    rng = random.Random(seed)
    topics = ["data mining", "databases", "machine learning", "networks", "privacy"]
    groups = [
        [f"g{g}a{i}" for i in range(rng.randint(4, 6))] for g in range(5)
    ]
    records = []
    for g, members in enumerate(groups):
        for aid in members:
            records.append(author(aid, f"Researcher {aid.upper()}"))
    pid = 0
    for g, members in enumerate(groups):
        topic_pool = [topics[g], topics[(g + 1) % len(topics)]]
        for _ in range(rng.randint(6, 9)):
            pid += 1
            team = rng.sample(members, rng.randint(2, min(3, len(members))))
            records.append(
                paper(
                    f"d{pid}",
                    f"Study {pid}",
                    rng.randint(2009, 2016),
                    sorted(rng.sample(topic_pool, rng.randint(1, 2))),
                    sorted(team),
                    max(0, int(rng.gauss(12, 15))),
                )
            )
    # cross-group collaborations so communities overlap
    for g in range(4):
        pid += 1
        team = sorted([groups[g][0], groups[g + 1][0]])
        records.append(
            paper(
                f"d{pid}",
                f"Joint study {pid}",
                rng.randint(2011, 2016),
                [topics[g]],
                team,
                rng.randint(0, 40),
            )
        )
    return records


def main() -> None:
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    write("seven_authors.jsonl", seven_authors())
    write("bowtie.jsonl", bowtie())
    write("bridged.jsonl", bridged())
    write("demo.jsonl", demo())


if __name__ == "__main__":
    main()
