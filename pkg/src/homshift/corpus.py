"""Built-in verification corpora: labeled trees, cycles, and small connected graphs.

Trees are enumerated exhaustively through their sequence encoding, then
pushed through the deterministic distance labeling and deduplicated; many
source labelings collapse onto the same admissibly labeled tree, and one
copy of each suffices for checks that only see the labeled result.
"""

from __future__ import annotations

import heapq
from functools import lru_cache
from itertools import product

from .graphs import (
    Graph,
    LabeledTree,
    CycleLabeling,
    is_bipartite,
    is_connected,
    lex_labeled_copy,
    tree_distance_labeling,
)


def tree_from_prufer(n: int, seq: tuple[int, ...]) -> Graph:
    """Decode a length-(n-2) sequence over [n] into a labeled tree."""
    if n < 2:
        raise ValueError("tree decoding needs at least 2 vertices")
    if len(seq) != n - 2:
        raise ValueError(f"sequence length {len(seq)} != n - 2")
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def all_labeled_trees(n: int):
    """Every labeled tree on [n], one per sequence (n^(n-2) of them)."""
    if n == 1:
        return
    for seq in product(range(1, n + 1), repeat=n - 2):
        yield tree_from_prufer(n, seq)


@lru_cache(maxsize=None)
def distance_labeled_trees(n: int) -> tuple[LabeledTree, ...]:
    """Distinct admissibly labeled trees on [n], rooted at each tree's largest leaf."""
    seen: dict[tuple, LabeledTree] = {}
    for tree in all_labeled_trees(n):
        leaves = [v for v in tree.vertices() if tree.degree(v) == 1]
        labeled = tree_distance_labeling(tree, max(leaves))
        seen.setdefault(labeled.graph.edges, labeled)
    return tuple(seen[key] for key in sorted(seen))


def cycles(n_max: int, n_min: int = 3) -> tuple[CycleLabeling, ...]:
    return tuple(CycleLabeling(n) for n in range(n_min, n_max + 1))


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """Connected graphs on n <= 7 vertices, one per isomorphism class.

    Each representative is relabeled so that every suffix of its vertex
    set induces a connected subgraph, making all powers of its
    complementary edge ideal directly amenable to lex linear quotients.
    """
    if n > 7:
        raise ValueError("the graph catalog covers at most 7 vertices")
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for nx_graph in graph_atlas_g():
        if nx_graph.number_of_nodes() != n:
            continue
        g = Graph(n, [(u + 1, v + 1) for u, v in nx_graph.edges()])
        if not is_connected(g):
            continue
        out.append(lex_labeled_copy(g)[0])
    return tuple(out)


def connected_bipartite_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in connected_graphs(n) if is_bipartite(g))
