"""Citation-weighted influence scoring and top-K ranking of communities.

A community owns the papers written entirely by its members.  Each owned
paper's citation count is damped by a rank weight: the fraction of the
community's owned papers cited at least as often.  A community's influence
is the mean of those weighted counts, which tempers single runaway papers
while still rewarding consistently cited work.  Three simpler baselines
(minimum citations, mean citations, h-index over owned papers) are reported
alongside for comparison.
"""

from __future__ import annotations

import json
from bisect import bisect_left
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from typing import Sequence

from .model import Community, CommunitySet, PaperRecord


class NotOwned(ValueError):
    """Paper is not owned by the community (some author is an outsider)."""


class NoOwnedPapers(ValueError):
    """Community owns no papers, so the requested statistic is undefined."""


@dataclass(frozen=True)
class Baselines:
    min_citation: int
    mean_citation: float
    h_index: int


@dataclass(frozen=True)
class InfluenceReport:
    """Scored community: influence, 0-10 normalized score, rank, baselines."""

    community_id: int
    influence: float
    normalized: float
    rank: int
    baselines: Baselines
    owned_paper_count: int
    member_ids: tuple[str, ...]


def paper_membership(c: Community, p: PaperRecord) -> int:
    """1 iff every author of the paper belongs to the community."""
    return int(set(p.author_ids) <= c.member_ids)


def cite_compare(p_l: PaperRecord, p_k: PaperRecord) -> int:
    """1 iff p_l is cited at least as often as p_k."""
    return int(p_l.citation_count >= p_k.citation_count)


def owned_papers(c: Community, corpus: Sequence[PaperRecord]) -> list[PaperRecord]:
    """Papers written only by members of the community, in corpus order."""
    return [p for p in corpus if paper_membership(c, p)]


def paper_weight(c: Community, p: PaperRecord, corpus: Sequence[PaperRecord]) -> float:
    """Rank weight of an owned paper within its community.

    The fraction of the community's owned papers with citation counts at
    least cite(p); always in (0, 1], and exactly 1 for papers tied at the
    community minimum.
    """
    if not paper_membership(c, p):
        raise NotOwned(f"{p.paper_id!r} is not owned by community {c.community_id}")
    owned = owned_papers(c, corpus)
    if not owned:
        raise NoOwnedPapers(f"community {c.community_id} owns no papers")
    at_least = sum(1 for q in owned if q.citation_count >= p.citation_count)
    return at_least / len(owned)


def paper_impact(c: Community, p: PaperRecord, corpus: Sequence[PaperRecord]) -> float:
    """Weighted citation count of an owned paper.

    Computed as (rank count * citations) / owned count so that values like
    3/5 * 3 come out as exactly 1.8 instead of picking up float dust.
    """
    if not paper_membership(c, p):
        raise NotOwned(f"{p.paper_id!r} is not owned by community {c.community_id}")
    owned = owned_papers(c, corpus)
    if not owned:
        raise NoOwnedPapers(f"community {c.community_id} owns no papers")
    at_least = sum(1 for q in owned if q.citation_count >= p.citation_count)
    return at_least * p.citation_count / len(owned)


def community_influence(c: Community, corpus: Sequence[PaperRecord]) -> float:
    """Mean weighted citation count over the community's owned papers.

    A community owning no papers scores 0 (the degenerate case is surfaced
    through owned_paper_count in reports rather than as an error).
    """
    owned = owned_papers(c, corpus)
    n = len(owned)
    if n == 0:
        return 0.0
    cites = sorted(p.citation_count for p in owned)
    total = 0.0
    for p in owned:
        at_least = n - bisect_left(cites, p.citation_count)
        total += at_least * p.citation_count / n
    return total / n


def min_citation_influence(c: Community, corpus: Sequence[PaperRecord]) -> int:
    """Baseline: minimum citation count over owned papers."""
    owned = owned_papers(c, corpus)
    if not owned:
        raise NoOwnedPapers(f"community {c.community_id} owns no papers")
    return min(p.citation_count for p in owned)


def mean_citation_influence(c: Community, corpus: Sequence[PaperRecord]) -> float:
    """Baseline: arithmetic mean citation count over owned papers."""
    owned = owned_papers(c, corpus)
    if not owned:
        raise NoOwnedPapers(f"community {c.community_id} owns no papers")
    return sum(p.citation_count for p in owned) / len(owned)


def community_h_index(c: Community, corpus: Sequence[PaperRecord]) -> int:
    """Baseline: largest h with at least h owned papers cited >= h times."""
    cites = sorted((p.citation_count for p in owned_papers(c, corpus)), reverse=True)
    h = 0
    for i, count in enumerate(cites):
        if count >= i + 1:
            h = i + 1
        else:
            break
    return h


def build_reports(
    cs: CommunitySet, corpus: Sequence[PaperRecord]
) -> tuple[InfluenceReport, ...]:
    """Score every community and rank all of them.

    Ordering is influence descending with ties broken by ascending community
    id; ranks are 1-based.  Normalization rescales so the maximum influence
    maps to exactly 10 (all zeros when every influence is 0).  Communities
    owning no papers report zeroed baselines with owned_paper_count = 0.
    """
    scored = []
    for c in cs.communities:
        owned = owned_papers(c, corpus)
        influence = community_influence(c, corpus)
        if owned:
            baselines = Baselines(
                min_citation=min(p.citation_count for p in owned),
                mean_citation=sum(p.citation_count for p in owned) / len(owned),
                h_index=community_h_index(c, corpus),
            )
        else:
            baselines = Baselines(0, 0.0, 0)
        scored.append((c, influence, baselines, len(owned)))
    scored.sort(key=lambda row: (-row[1], row[0].community_id))
    max_influence = max((row[1] for row in scored), default=0.0)
    reports = []
    for rank, (c, influence, baselines, owned_count) in enumerate(scored, start=1):
        normalized = influence / max_influence * 10.0 if max_influence > 0 else 0.0
        reports.append(
            InfluenceReport(
                community_id=c.community_id,
                influence=influence,
                normalized=normalized,
                rank=rank,
                baselines=baselines,
                owned_paper_count=owned_count,
                member_ids=tuple(sorted(c.member_ids)),
            )
        )
    return tuple(reports)


def rank_top_k(
    cs: CommunitySet, corpus: Sequence[PaperRecord], k: int | None = None
) -> tuple[InfluenceReport, ...]:
    """First min(k, community count) reports; k=None keeps them all."""
    if k is not None and k < 1:
        raise ValueError("k must be >= 1")
    reports = build_reports(cs, corpus)
    return reports if k is None else reports[:k]


def round2(x: float) -> float:
    """Round half-up to two decimals for reported values."""
    return float(Decimal(repr(x)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def report_record(r: InfluenceReport) -> dict:
    """JSON-ready report record with display rounding applied."""
    return {
        "community_id": r.community_id,
        "influence": round2(r.influence),
        "normalized": round2(r.normalized),
        "rank": r.rank,
        "baselines": {
            "min_citation": r.baselines.min_citation,
            "mean_citation": round2(r.baselines.mean_citation),
            "h_index": r.baselines.h_index,
        },
        "owned_paper_count": r.owned_paper_count,
        "member_ids": list(r.member_ids),
    }


def report_lines(reports: Sequence[InfluenceReport]) -> list[str]:
    """Line-delimited report export consumed by the CLI and query service."""
    return [json.dumps(report_record(r), ensure_ascii=False) for r in reports]
