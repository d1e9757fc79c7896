"""Independent brute-force oracles used to check the fast implementations.

Everything here enumerates explicitly: all shortest paths between every
vertex pair, all 2-partitions of a neighbor set, all pairwise citation
comparisons.  None of it shares code with the package under test.
"""

from __future__ import annotations

import random
from collections import deque
from itertools import combinations


def pair_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a <= b else (b, a)


def adjacency_from_edges(edges, extra_vertices=()) -> dict[str, list[str]]:
    adj: dict[str, set[str]] = {v: set() for v in extra_vertices}
    for a, b in edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    return {v: sorted(ns) for v, ns in sorted(adj.items())}


def enumerate_shortest_paths(adj, s, t) -> list[list[str]]:
    """Every shortest s-t path, via BFS layering and backward DFS."""
    if s == t:
        return [[s]]
    dist = {s: 0}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    if t not in dist:
        return []
    paths = []

    def extend(path):
        head = path[-1]
        if head == t:
            paths.append(list(path))
            return
        for w in adj[head]:
            if dist.get(w) == dist[head] + 1:
                path.append(w)
                extend(path)
                path.pop()

    extend([s])
    return paths


def brute_betweenness(adj):
    """Edge, vertex, and neighbor-pair betweenness by explicit path listing."""
    vertices = sorted(adj)
    edge_scores: dict[tuple[str, str], float] = {}
    for v in vertices:
        for w in adj[v]:
            edge_scores.setdefault(pair_key(v, w), 0.0)
    vertex_scores = {v: 0.0 for v in vertices}
    pair_scores: dict[str, dict[tuple[str, str], float]] = {v: {} for v in vertices}
    for s, t in combinations(vertices, 2):
        paths = enumerate_shortest_paths(adj, s, t)
        if not paths:
            continue
        credit = 1.0 / len(paths)
        for path in paths:
            for a, b in zip(path, path[1:]):
                edge_scores[pair_key(a, b)] += credit
            for i in range(1, len(path) - 1):
                v = path[i]
                vertex_scores[v] += credit
                key = pair_key(path[i - 1], path[i + 1])
                pair_scores[v][key] = pair_scores[v].get(key, 0.0) + credit
    return edge_scores, vertex_scores, pair_scores


def exhaustive_split(neighbors, weights) -> tuple[float, frozenset, frozenset]:
    """Best 2-partition of ``neighbors`` by enumerating all of them."""
    items = sorted(neighbors)
    assert len(items) >= 2
    best = None
    for mask in range(1, 2 ** (len(items) - 1)):
        part_a = [items[0]]
        part_b = []
        for i, item in enumerate(items[1:], start=1):
            (part_b if mask >> (i - 1) & 1 else part_a).append(item)
        if not part_b:
            continue
        score = sum(
            weights.get(pair_key(x, y), 0.0) for x in part_a for y in part_b
        )
        if best is None or score > best[0]:
            best = (score, frozenset(part_a), frozenset(part_b))
    assert best is not None
    return best


def brute_influence(member_ids, papers) -> float:
    """Community influence by explicit membership/comparison counting."""
    owned = [p for p in papers if set(p.author_ids) <= set(member_ids)]
    if not owned:
        return 0.0
    total = 0.0
    for p in owned:
        at_least = sum(1 for q in owned if q.citation_count >= p.citation_count)
        weight = at_least / len(owned)
        total += weight * p.citation_count
    return total / len(owned)


def brute_h_index(citations) -> int:
    counts = list(citations)
    h = 0
    while sum(1 for c in counts if c >= h + 1) >= h + 1:
        h += 1
    return h


def brute_modularity(edges, partition) -> float:
    """Q from first principles: explicit edge-end counting."""
    m = len(edges)
    if m == 0:
        return 0.0
    value = 0.0
    for cluster in partition:
        cluster = set(cluster)
        internal = sum(1 for a, b in edges if a in cluster and b in cluster)
        ends = sum((a in cluster) + (b in cluster) for a, b in edges)
        value += internal / m - (ends / (2 * m)) ** 2
    return value


def random_connected_graph(rng: random.Random, max_n: int = 12):
    """Random connected graph: random spanning tree plus extra edges."""
    n = rng.randint(3, max_n)
    labels = [f"v{i:02d}" for i in range(n)]
    order = labels[:]
    rng.shuffle(order)
    edges = set()
    for i in range(1, n):
        peer = order[rng.randrange(i)]
        edges.add(pair_key(order[i], peer))
    extra = rng.uniform(0.0, 0.5)
    for a, b in combinations(labels, 2):
        if pair_key(a, b) not in edges and rng.random() < extra:
            edges.add(pair_key(a, b))
    return labels, sorted(edges)
