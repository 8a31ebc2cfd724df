"""Simple graphs on [n], admissible vertex labelings, and even-connected walks.

A walk certifies that two vertices j, k are "even-connected" with respect
to a multiset of edges when it has the shape

    j - w0 - [multiset edge] - w1 - ... - [multiset edge] - w? - k

i.e. odd-position steps are arbitrary graph edges, even-position steps are
drawn from the multiset without exceeding multiplicities, and at least one
multiset edge is used.  These walks characterize the variables appearing
in colon ideals of edge-ideal powers.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping

from .errors import InputFormatError, PreconditionError

Edge = tuple[int, int]


def _normalize_edge(e) -> Edge:
    a, b = int(e[0]), int(e[1])
    if a == b:
        raise ValueError(f"loop edge {e}")
    return (a, b) if a < b else (b, a)


class Graph:
    """Immutable simple undirected graph on vertex set {1, ..., n}."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[Edge]):
        n = int(n)
        if n < 1:
            raise ValueError("vertex count must be positive")
        normalized = sorted({_normalize_edge(e) for e in edges})
        for a, b in normalized:
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"edge ({a}, {b}) outside vertex range [1, {n}]")
        adj: dict[int, tuple[int, ...]] = {}
        nbrs: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
        for a, b in normalized:
            nbrs[a].append(b)
            nbrs[b].append(a)
        for v, lst in nbrs.items():
            adj[v] = tuple(sorted(lst))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "_adj", adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, a: int, b: int) -> bool:
        if a == b:
            return False
        return b in self._adj[a]

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def is_connected(g: Graph) -> bool:
    """True for the one-vertex graph and any graph with a single component."""
    seen = {1}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def is_bipartite(g: Graph) -> bool:
    color: dict[int, int] = {}
    for start in g.vertices():
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def is_tree(g: Graph) -> bool:
    return len(g.edges) == g.n - 1 and is_connected(g)


def is_cycle_graph(g: Graph) -> bool:
    return (
        g.n >= 3
        and is_connected(g)
        and all(g.degree(v) == 2 for v in g.vertices())
    )


def validate_lex_labeling(g: Graph) -> bool:
    """True when every suffix {i+1, ..., n} induces a connected subgraph.

    This is the labeling condition under which powers of the complementary
    edge ideal acquire linear quotients in descending lex order.
    """
    if not is_connected(g):
        raise PreconditionError("lex-labeling validation requires a connected graph")
    for i in range(1, g.n):
        allowed = set(range(i + 1, g.n + 1))
        start = i + 1
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w in allowed and w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != len(allowed):
            return False
    return True


class EdgeMultiset:
    """A multiset of edges of some graph, with explicit multiplicities."""

    __slots__ = ("counts", "total")

    def __init__(self, counts: Mapping[Edge, int]):
        cleaned: dict[Edge, int] = {}
        for e, c in counts.items():
            c = int(c)
            if c < 0:
                raise ValueError(f"negative multiplicity for edge {e}")
            if c > 0:
                cleaned[_normalize_edge(e)] = c
        object.__setattr__(self, "counts", dict(sorted(cleaned.items())))
        object.__setattr__(self, "total", sum(cleaned.values()))

    @classmethod
    def from_edges(cls, edges: Iterable[Edge]) -> "EdgeMultiset":
        counts: dict[Edge, int] = {}
        for e in edges:
            e = _normalize_edge(e)
            counts[e] = counts.get(e, 0) + 1
        return cls(counts)

    def validate_hosted(self, g: Graph) -> None:
        for e in self.counts:
            if not g.has_edge(*e):
                raise ValueError(f"edge {e} is not an edge of the host graph")

    def support(self) -> tuple[Edge, ...]:
        return tuple(self.counts)

    def items(self):
        return self.counts.items()

    def as_edge_list(self) -> tuple[Edge, ...]:
        out = []
        for e, c in self.counts.items():
            out.extend([e] * c)
        return tuple(out)

    def remove_one(self, e: Edge) -> "EdgeMultiset":
        e = _normalize_edge(e)
        if self.counts.get(e, 0) < 1:
            raise ValueError(f"edge {e} not present")
        counts = dict(self.counts)
        counts[e] -= 1
        return EdgeMultiset(counts)

    def signature(self) -> tuple:
        return tuple(self.counts.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, EdgeMultiset) and self.counts == other.counts

    def __hash__(self) -> int:
        return hash(self.signature())

    def __repr__(self) -> str:
        return f"EdgeMultiset({self.counts})"


class LabeledTree:
    """A tree whose labels already satisfy the distance discipline.

    Labels are non-increasing in distance to the root leaf n, so each
    vertex j < n has a unique neighbor phi(j) > j (its parent).
    ``relabeling`` records the map original name -> label used to reach
    this form; it is the identity for trees built directly.
    """

    __slots__ = ("graph", "parent", "relabeling")

    def __init__(self, graph: Graph, relabeling: tuple[int, ...] | None = None):
        if not is_tree(graph):
            raise ValueError("LabeledTree requires a tree")
        n = graph.n
        if n >= 2 and graph.degree(n) != 1:
            raise ValueError(f"vertex {n} must be a leaf")
        parent = []
        for j in range(1, n):
            larger = [w for w in graph.neighbors(j) if w > j]
            if len(larger) != 1:
                raise ValueError(f"vertex {j} has {len(larger)} neighbors above it")
            parent.append(larger[0])
        dist = _distances_from(graph, n)
        for j in range(1, n - 1):
            if dist[j] < dist[j + 1]:
                raise ValueError("labels are not non-increasing in distance to the root")
        if relabeling is None:
            relabeling = tuple(range(1, n + 1))
        else:
            relabeling = tuple(int(v) for v in relabeling)
            if sorted(relabeling) != list(range(1, n + 1)):
                raise ValueError("relabeling is not a permutation of [n]")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "parent", tuple(parent))
        object.__setattr__(self, "relabeling", relabeling)

    @property
    def n(self) -> int:
        return self.graph.n

    def phi(self, j: int) -> int:
        """The unique neighbor of j larger than j, for j in [n-1]."""
        return self.parent[j - 1]

    def new_label(self, original: int) -> int:
        return self.relabeling[original - 1]

    def original_name(self, label: int) -> int:
        return self.relabeling.index(label) + 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LabeledTree)
            and self.graph == other.graph
            and self.relabeling == other.relabeling
        )

    def __hash__(self) -> int:
        return hash((self.graph, self.relabeling))

    def __repr__(self) -> str:
        return f"LabeledTree({self.graph!r})"


class CycleLabeling:
    """The n-cycle with vertices 1..n in cyclic order.

    Edge j is {j, j+1} for j in [n-1]; edge 0 (also written edge n)
    is {n, 1}.
    """

    __slots__ = ("n", "_graph")

    def __init__(self, n: int):
        n = int(n)
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        edges = [(j, j + 1) for j in range(1, n)] + [(1, n)]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_graph", Graph(n, edges))

    @property
    def graph(self) -> Graph:
        return self._graph

    def edge(self, j: int) -> Edge:
        """Edge j for j in 0..n (indices 0 and n both mean {n, 1})."""
        j = j % self.n
        if j == 0:
            return (1, self.n)
        return (j, j + 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, CycleLabeling) and self.n == other.n

    def __hash__(self) -> int:
        return hash(("cycle", self.n))

    def __repr__(self) -> str:
        return f"CycleLabeling({self.n})"


def _distances_from(g: Graph, root: int) -> dict[int, int]:
    dist = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def tree_distance_labeling(t: Graph, root_leaf: int) -> LabeledTree:
    """Relabel a tree so root_leaf becomes n and labels decrease outward.

    Vertices are ordered by decreasing distance to the root leaf, ties
    broken by breadth-first discovery order (which itself visits smaller
    original names first), giving one deterministic admissible labeling.
    """
    if not is_tree(t):
        raise PreconditionError("distance labeling requires a tree")
    if t.n > 1 and t.degree(root_leaf) != 1:
        raise PreconditionError(f"vertex {root_leaf} is not a leaf")
    dist = _distances_from(t, root_leaf)
    discovery = {root_leaf: 0}
    queue = deque([root_leaf])
    while queue:
        v = queue.popleft()
        for w in t.neighbors(v):
            if w not in discovery:
                discovery[w] = len(discovery)
                queue.append(w)
    order = sorted(t.vertices(), key=lambda v: (-dist[v], discovery[v]))
    relabeling = [0] * t.n
    for label, v in enumerate(order, start=1):
        relabeling[v - 1] = label
    relabeled = Graph(
        t.n, [(relabeling[a - 1], relabeling[b - 1]) for a, b in t.edges]
    )
    return LabeledTree(relabeled, tuple(relabeling))


def even_connection_walk(
    g: Graph, j: int, k: int, es: EdgeMultiset
) -> list[int] | None:
    """A witness walk even-connecting j to k with respect to es, or None.

    The returned walk alternates free graph edges with multiset edges and
    uses at least one multiset edge, so it always has even vertex count
    >= 4 and odd length.
    """
    es.validate_hosted(g)
    if es.total == 0:
        return None
    failed: set[tuple] = set()

    def search(v: int, counts: tuple, used: bool) -> list[int] | None:
        # ``v`` sits just after a free edge; next step must come from the multiset.
        if used and v == k:
            return [v]
        key = (v, counts, used)
        if key in failed:
            return None
        for idx, (edge, c) in enumerate(counts):
            if c == 0 or v not in edge:
                continue
            w = edge[0] if edge[1] == v else edge[1]
            nxt = tuple(
                (e, cc - 1) if i == idx else (e, cc) for i, (e, cc) in enumerate(counts)
            )
            for x in g.neighbors(w):
                tail = search(x, nxt, True)
                if tail is not None:
                    return [v, w] + tail
        failed.add(key)
        return None

    counts0 = es.signature()
    for w in g.neighbors(j):
        tail = search(w, counts0, False)
        if tail is not None:
            return [j] + tail
    return None


def even_connected(g: Graph, j: int, k: int, es: EdgeMultiset) -> bool:
    """Whether j and k are even-connected with respect to the edge multiset."""
    return even_connection_walk(g, j, k, es) is not None


def caterpillar_from_profile(a: Iterable[int]) -> LabeledTree:
    """The caterpillar tree whose spine vertices collect a_1, a_2, ... children.

    With partial sums s_k = a_1 + ... + a_k, the spine is
    s_1+1, s_2+1, ..., s_n+1, s_n+2; vertex s_1+1 carries leaves 1..s_1 and
    each later spine vertex s_i+1 carries leaves s_{i-1}+2..s_i.  The
    resulting parent map sends exactly a_j vertices to spine vertex s_j+1.
    """
    profile = tuple(int(x) for x in a)
    if not profile or any(x < 1 for x in profile):
        raise PreconditionError(f"profile must be nonempty with positive entries: {profile}")
    sigma = [0]
    for x in profile:
        sigma.append(sigma[-1] + x)
    total = sigma[-1]
    n_vertices = total + 2
    spine = [sigma[k] + 1 for k in range(1, len(profile) + 1)] + [total + 2]
    edges = list(zip(spine, spine[1:]))
    edges.extend((leaf, spine[0]) for leaf in range(1, sigma[1] + 1))
    for i in range(2, len(profile) + 1):
        edges.extend(
            (leaf, sigma[i] + 1) for leaf in range(sigma[i - 1] + 2, sigma[i] + 1)
        )
    return LabeledTree(Graph(n_vertices, edges))


def spanning_paths_of_cycle(c: CycleLabeling) -> list[LabeledTree]:
    """The n spanning paths of a cycle, path j omitting edge j-1.

    Each path keeps the original vertex names and is wrapped with a
    distance labeling so tree-form computations apply directly.
    """
    out = []
    for j in range(1, c.n + 1):
        removed = c.edge(j - 1)
        edges = [c.edge(t) for t in range(1, c.n + 1) if c.edge(t) != removed]
        path = Graph(c.n, edges)
        root = max(removed)
        out.append(tree_distance_labeling(path, root))
    return out


def cycle_labeling_of(g: Graph) -> tuple[CycleLabeling, tuple[int, ...]]:
    """View a cycle graph in cyclic coordinates; returns (labeling, perm).

    perm[old-1] = position in the cyclic order, walking from vertex 1
    toward its smaller neighbor.
    """
    if not is_cycle_graph(g):
        raise PreconditionError("cyclic labeling requires a cycle graph")
    walk = [1, min(g.neighbors(1))]
    while len(walk) < g.n:
        prev, cur = walk[-2], walk[-1]
        nxt = next(w for w in g.neighbors(cur) if w != prev)
        walk.append(nxt)
    perm = [0] * g.n
    for pos, v in enumerate(walk, start=1):
        perm[v - 1] = pos
    return CycleLabeling(g.n), tuple(perm)


def spanning_tree(g: Graph) -> Graph:
    """A deterministic BFS spanning tree from vertex 1."""
    if not is_connected(g):
        raise PreconditionError("spanning tree requires a connected graph")
    edges = []
    seen = {1}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w not in seen:
                seen.add(w)
                edges.append((v, w))
                queue.append(w)
    return Graph(g.n, edges)


def relabel_graph(g: Graph, perm: tuple[int, ...]) -> Graph:
    """Apply the permutation old -> perm[old-1] to vertex names."""
    return Graph(g.n, [(perm[a - 1], perm[b - 1]) for a, b in g.edges])


def lex_labeled_copy(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """A relabeled copy of g with suffix-connected labels, plus the permutation.

    Labeling a spanning tree by distance to a root leaf makes every suffix
    of the tree (hence of g) connected.  Returns (graph, perm) with
    perm[old-1] = new; perm is the identity when g already qualifies.
    """
    identity = tuple(range(1, g.n + 1))
    if validate_lex_labeling(g):
        return g, identity
    tree = spanning_tree(g)
    leaves = [v for v in tree.vertices() if tree.degree(v) == 1]
    labeled = tree_distance_labeling(tree, max(leaves))
    perm = labeled.relabeling
    return relabel_graph(g, perm), perm


def invert_permutation(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for old, new in enumerate(perm, start=1):
        inv[new - 1] = old
    return tuple(inv)


def graph_from_dict(data: dict) -> tuple[Graph, str | None]:
    """Parse the {"n": ..., "edges": [[i, j], ...]} format with optional kind hint.

    A "tree" or "cycle" kind is validated against the actual structure;
    "cycle" additionally requires the cyclic labeling 1-2-...-n-1.
    """
    if not isinstance(data, dict):
        raise InputFormatError("graph document must be a JSON object")
    try:
        n = int(data["n"])
        edges = [tuple(e) for e in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"bad graph document: {exc}") from exc
    if any(len(e) != 2 for e in edges):
        raise InputFormatError("edges must be pairs of vertices")
    try:
        g = Graph(n, edges)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc
    kind = data.get("kind")
    if kind is not None:
        if kind == "tree":
            if not is_tree(g):
                raise InputFormatError("graph is declared a tree but is not one")
        elif kind == "cycle":
            if g.n < 3 or g != CycleLabeling(g.n).graph:
                raise InputFormatError(
                    "graph is declared a cycle but is not the cyclically labeled n-cycle"
                )
        else:
            raise InputFormatError(f"unknown graph kind {kind!r}")
    return g, kind


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}
