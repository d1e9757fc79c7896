"""CONGA-style overlapping community detection.

The loop alternates two moves on a working copy of the graph: remove the
edge with the highest edge betweenness, or split the vertex whose best
neighbor 2-partition severs strictly more shortest-path flow than any single
edge carries.  A split replaces the vertex with two copies, one per neighbor
part, with no edge between them; copies remember which original author they
came from.  Every move is recorded as a dendrogram event until no edges
remain.

Cutting the dendrogram replays the events and scores each level by the
modularity of the working graph's connected components, measured against the
full (split-rewired) edge set so that levels are comparable.  The level with
the highest modularity wins; mapping vertex copies back to their original
authors turns the disjoint component partition into possibly-overlapping
communities.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .betweenness import betweenness_profile, split_from_pairs
from .model import CoauthorGraph, Community, CommunitySet, Edge, edge_key


class InvalidPartition(ValueError):
    """Partition passed to modularity() is not a disjoint cover."""


@dataclass(frozen=True)
class RemoveEdge:
    edge: Edge


@dataclass(frozen=True)
class SplitVertex:
    vertex: str
    part_a: tuple[str, ...]
    part_b: tuple[str, ...]


@dataclass(frozen=True)
class DendrogramEvent:
    step: int
    action: RemoveEdge | SplitVertex
    components_after: int


@dataclass(frozen=True)
class Dendrogram:
    """Ordered removal/split log; replaying it empties the initial graph."""

    events: tuple[DendrogramEvent, ...]
    initial_graph: CoauthorGraph


@dataclass(frozen=True)
class ModularityScore:
    value: float
    community_count: int


def modularity(g: CoauthorGraph, partition: Sequence[Iterable[str]]) -> ModularityScore:
    """Modularity Q = sum_i (e_ii - a_i^2) of a disjoint cover.

    e_ii is the fraction of edges with both ends in cluster i, a_i the
    fraction of edge ends landing in cluster i.  An edgeless graph scores 0.
    """
    clusters = [frozenset(c) for c in partition]
    if any(not c for c in clusters):
        raise InvalidPartition("empty cluster")
    assignment: dict[str, int] = {}
    for i, cluster in enumerate(clusters):
        for v in cluster:
            if v in assignment:
                raise InvalidPartition(f"vertex {v!r} in more than one cluster")
            assignment[v] = i
    if set(assignment) != set(g.vertices):
        raise InvalidPartition("partition does not cover the vertex set")

    m = len(g.edges)
    if m == 0:
        return ModularityScore(0.0, len(clusters))
    internal = [0] * len(clusters)
    ends = [0] * len(clusters)
    for a, b in g.edges:
        ia, ib = assignment[a], assignment[b]
        ends[ia] += 1
        ends[ib] += 1
        if ia == ib:
            internal[ia] += 1
    value = sum(
        internal[i] / m - (ends[i] / (2 * m)) ** 2 for i in range(len(clusters))
    )
    return ModularityScore(value, len(clusters))


class _Working:
    """Mutable replay state shared by the detection loop and dendrogram cuts.

    Tracks the current adjacency (removals and splits applied), the full
    reference edge set (splits applied, removals kept — the yardstick for
    modularity), and the mapping from every vertex id ever seen back to its
    original author.  Copy naming is deterministic, so re-applying a recorded
    event sequence reproduces the exact same vertex ids.
    """

    def __init__(self, g: CoauthorGraph):
        self.adj: dict[str, set[str]] = {v: set() for v in g.vertices}
        for a, b in g.edges:
            self.adj[a].add(b)
            self.adj[b].add(a)
        self.reference: set[Edge] = {edge_key(a, b) for a, b in g.edges}
        self.origin: dict[str, str] = {v: v for v in g.vertices}
        self._used: set[str] = set(self.adj)

    def _fresh(self, base: str) -> str:
        name = base
        while name in self._used:
            name += "+"
        self._used.add(name)
        return name

    def has_edges(self) -> bool:
        return any(self.adj.values())

    def as_graph(self) -> CoauthorGraph:
        edges = {
            edge_key(a, b): 1 for a in self.adj for b in self.adj[a] if a < b
        }
        return CoauthorGraph(frozenset(self.adj), edges)

    def reference_graph(self) -> CoauthorGraph:
        return CoauthorGraph(frozenset(self.adj), {e: 1 for e in self.reference})

    def remove_edge(self, edge: Edge) -> None:
        a, b = edge
        self.adj[a].discard(b)
        self.adj[b].discard(a)

    def split_vertex(
        self, vertex: str, part_a: Sequence[str], part_b: Sequence[str]
    ) -> tuple[str, str]:
        copy_a = self._fresh(f"{vertex}~a")
        copy_b = self._fresh(f"{vertex}~b")
        side = {n: copy_a for n in part_a}
        side.update({n: copy_b for n in part_b})
        self.adj[copy_a] = set()
        self.adj[copy_b] = set()
        for n in self.adj.pop(vertex):
            self.adj[n].discard(vertex)
            copy = side[n]
            self.adj[n].add(copy)
            self.adj[copy].add(n)
        rewired = set()
        for a, b in self.reference:
            if vertex in (a, b):
                other = b if a == vertex else a
                # edges removed before the split have no current side; they
                # follow the part_a copy so the reference stays well formed
                rewired.add(edge_key(side.get(other, copy_a), other))
            else:
                rewired.add((a, b))
        self.reference = rewired
        root = self.origin[vertex]
        self.origin[copy_a] = root
        self.origin[copy_b] = root
        return copy_a, copy_b

    def apply(self, action: RemoveEdge | SplitVertex) -> None:
        if isinstance(action, RemoveEdge):
            self.remove_edge(action.edge)
        else:
            self.split_vertex(action.vertex, action.part_a, action.part_b)

    def components(self) -> list[frozenset[str]]:
        """Connected components (isolated vertices included), sorted."""
        seen: set[str] = set()
        comps: list[frozenset[str]] = []
        for start in sorted(self.adj):
            if start in seen:
                continue
            comp = {start}
            frontier = [start]
            while frontier:
                v = frontier.pop()
                for w in self.adj[v]:
                    if w not in comp:
                        comp.add(w)
                        frontier.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return comps


def run_conga(g: CoauthorGraph) -> Dendrogram:
    """Run the removal/split loop to completion.

    Each iteration recomputes all betweenness quantities on the working
    graph.  A vertex is a split candidate when it has degree >= 4 and its
    best neighbor partition keeps at least two neighbors on each side (a
    1-vs-rest split is just an edge removal).  The vertex is split only when
    its severed flow strictly exceeds the maximum edge betweenness; ties on
    either maximum go to the lexicographically smallest identifier.
    """
    work = _Working(g)
    events: list[DendrogramEvent] = []
    step = 0
    while work.has_edges():
        profile = betweenness_profile(work.as_graph())

        best_edge: Edge | None = None
        best_edge_score = -1.0
        for edge in sorted(profile.scores.edge_scores):
            score = profile.scores.edge_scores[edge]
            if score > best_edge_score:
                best_edge, best_edge_score = edge, score

        best_split = None
        for v in sorted(work.adj):
            if len(work.adj[v]) < 4:
                continue
            result = split_from_pairs(v, sorted(work.adj[v]), profile.pair_scores[v])
            if min(len(result.part_a), len(result.part_b)) < 2:
                continue
            if best_split is None or result.score > best_split.score:
                best_split = result

        step += 1
        if best_split is not None and best_split.score > best_edge_score:
            action: RemoveEdge | SplitVertex = SplitVertex(
                best_split.vertex, best_split.part_a, best_split.part_b
            )
        else:
            assert best_edge is not None
            action = RemoveEdge(best_edge)
        work.apply(action)
        events.append(DendrogramEvent(step, action, len(work.components())))
    return Dendrogram(tuple(events), g)


def _communities_from_components(
    components: Sequence[frozenset[str]],
    origin: dict[str, str],
    source_graph: CoauthorGraph,
) -> CommunitySet:
    """Map working-graph components back to (deduplicated) author sets."""
    member_sets: list[frozenset[str]] = []
    seen: set[frozenset[str]] = set()
    for comp in components:
        members = frozenset(origin[v] for v in comp)
        if members and members not in seen:
            seen.add(members)
            member_sets.append(members)
    member_sets.sort(key=lambda s: tuple(sorted(s)))
    communities = tuple(
        Community(i, members) for i, members in enumerate(member_sets)
    )
    return CommunitySet(communities, source_graph)


def _replay_levels(d: Dendrogram):
    """Yield (step, components, modularity value) for every dendrogram level."""
    work = _Working(d.initial_graph)
    comps = work.components()
    yield 0, comps, modularity(work.reference_graph(), comps).value, work
    for event in d.events:
        work.apply(event.action)
        comps = work.components()
        yield event.step, comps, modularity(work.reference_graph(), comps).value, work


def best_cut(d: Dendrogram) -> CommunitySet:
    """Cut the dendrogram at the modularity-optimal level.

    Ties prefer fewer communities, then the earlier step.  Vertex copies are
    merged back to their originals, so communities may overlap; isolated
    vertices surface as singleton communities.
    """
    if not d.initial_graph.vertices:
        return CommunitySet((), d.initial_graph)
    best_key = None
    best_comps: Sequence[frozenset[str]] = []
    work = None
    for step, comps, q, state in _replay_levels(d):
        key = (-q, len(comps), step)
        if best_key is None or key < best_key:
            best_key = key
            best_comps = comps
            work = state
    assert work is not None
    return _communities_from_components(best_comps, work.origin, d.initial_graph)


def cut_at_count(d: Dendrogram, count: int) -> CommunitySet:
    """Earliest dendrogram level with at least ``count`` components.

    Used when the caller fixes the number of communities instead of letting
    modularity choose; falls back to the finest level when the request
    exceeds what the dendrogram ever reaches.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if not d.initial_graph.vertices:
        return CommunitySet((), d.initial_graph)
    last_comps: Sequence[frozenset[str]] = []
    work = None
    for _, comps, _, state in _replay_levels(d):
        last_comps = comps
        work = state
        if len(comps) >= count:
            break
    assert work is not None
    return _communities_from_components(last_comps, work.origin, d.initial_graph)


def event_record(event: DendrogramEvent) -> dict:
    """JSON-ready representation of one dendrogram event."""
    if isinstance(event.action, RemoveEdge):
        return {
            "step": event.step,
            "action": "remove_edge",
            "edge": list(event.action.edge),
            "components_after": event.components_after,
        }
    return {
        "step": event.step,
        "action": "split_vertex",
        "vertex": event.action.vertex,
        "part_a": list(event.action.part_a),
        "part_b": list(event.action.part_b),
        "components_after": event.components_after,
    }


def dendrogram_lines(d: Dendrogram) -> list[str]:
    """Line-delimited event log for debugging and golden tests."""
    return [json.dumps(event_record(e), ensure_ascii=False) for e in d.events]


def communityset_lines(cs: CommunitySet) -> list[str]:
    return [
        json.dumps(
            {"community_id": c.community_id, "member_ids": sorted(c.member_ids)},
            ensure_ascii=False,
        )
        for c in cs.communities
    ]
