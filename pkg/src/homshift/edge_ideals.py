"""Edge and complementary edge ideals, their powers, set maps, and pd functions.

The complementary edge ideal of a graph on [n] is generated by
x1*...*xn / (xj*xk) over the edges {j, k}.  Every generator of its s-th
power is (x1*...*xn)^s divided by a product of s edges; the Factorization
type keeps that edge multiset explicit.  When the vertex labels make every
suffix {i+1, ..., n} induce a connected subgraph, all powers have linear
quotients in descending lex order, and set(u) collects the variables
generating each successive colon ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

import numpy as np

from .errors import NotLinearQuotientsError, PreconditionError
from .graphs import (
    CycleLabeling,
    EdgeMultiset,
    Graph,
    LabeledTree,
    even_connected,
    is_bipartite,
    is_connected,
    is_cycle_graph,
    is_tree,
    lex_labeled_copy,
)
from .monomials import Monomial, MonomialIdeal


def edge_ideal(g: Graph) -> MonomialIdeal:
    """The ideal generated by xi*xj over the edges of g."""
    gens = (Monomial.from_support(g.n, e) for e in g.edges)
    return MonomialIdeal(g.n, tuple(gens))


def comp_edge_ideal(g: Graph) -> MonomialIdeal:
    """The complementary edge ideal, generated in degree n - 2."""
    if not g.edges:
        raise PreconditionError("complementary edge ideal needs at least one edge")
    alpha = Monomial.uniform(g.n, 1)
    gens = (alpha / Monomial.from_support(g.n, e) for e in g.edges)
    return MonomialIdeal(g.n, tuple(gens))


@dataclass(frozen=True)
class Factorization:
    """A power generator written as alpha^s divided by a multiset of s edges."""

    power: int
    edges: EdgeMultiset
    monomial: Monomial

    @classmethod
    def build(cls, g: Graph, edges: EdgeMultiset) -> "Factorization":
        edges.validate_hosted(g)
        s = edges.total
        exps = [s] * g.n
        for (a, b), c in edges.items():
            exps[a - 1] -= c
            exps[b - 1] -= c
        return cls(s, edges, Monomial(exps))


def _power_exponents(g: Graph, multiset: tuple) -> tuple[int, ...]:
    s = len(multiset)
    exps = [s] * g.n
    for a, b in multiset:
        exps[a - 1] -= 1
        exps[b - 1] -= 1
    return tuple(exps)


def power_generator_expressions(
    g: Graph, s: int
) -> dict[Monomial, list[EdgeMultiset]]:
    """All edge multisets of size s grouped by the power generator they produce."""
    if s < 1:
        raise PreconditionError("power must be at least 1")
    if not is_connected(g):
        raise PreconditionError("power generators require a connected graph")
    groups: dict[tuple[int, ...], list[tuple]] = {}
    for multiset in combinations_with_replacement(g.edges, s):
        groups.setdefault(_power_exponents(g, multiset), []).append(multiset)
    out: dict[Monomial, list[EdgeMultiset]] = {}
    for exps in sorted(groups, reverse=True):
        out[Monomial(exps)] = [
            EdgeMultiset.from_edges(ms) for ms in sorted(groups[exps])
        ]
    return out


@lru_cache(maxsize=None)
def power_generators(g: Graph, s: int) -> tuple[Factorization, ...]:
    """One Factorization per distinct minimal generator of the s-th power.

    Distinct multisets can collide on the same monomial (e.g. the two
    alternating perfect matchings of an even cycle); the lexicographically
    smallest edge multiset is kept as the canonical expression.  Output is
    in descending lex order of monomials.
    """
    out = []
    for monomial, expressions in power_generator_expressions(g, s).items():
        out.append(Factorization(s, expressions[0], monomial))
    return tuple(out)


def lex_order(gens: list[Factorization] | tuple[Factorization, ...]) -> list[Factorization]:
    """Descending lexicographic order on monomials under x1 > ... > xn."""
    return sorted(gens, key=lambda f: f.monomial.exps, reverse=True)


@dataclass(frozen=True)
class SetMap:
    """Ordered generators of an ideal with linear quotients and their set(u)."""

    gens: tuple[Monomial, ...]
    sets: tuple[frozenset[int], ...]

    @property
    def n(self) -> int:
        return self.gens[0].n if self.gens else 0

    def items(self):
        return zip(self.gens, self.sets)


def set_map_colon(ordered) -> SetMap:
    """Compute set(u) for each generator from the successive colon ideals.

    Verifies the linear-quotients property along the way: each colon
    (u_1, ..., u_{i-1}) : (u_i) must be generated by variables, i.e. every
    quotient u_t / gcd(u_t, u_i) must be divisible by some variable that
    itself lies in the colon.  Raises NotLinearQuotientsError otherwise.
    """
    gens = tuple(ordered if isinstance(ordered, (list, tuple)) else list(ordered))
    gens = tuple(f.monomial if isinstance(f, Factorization) else f for f in gens)
    if len({g.exps for g in gens}) != len(gens):
        raise ValueError("ordered generators must be pairwise distinct")
    if not gens:
        return SetMap((), ())
    mat = np.array([g.exps for g in gens], dtype=np.int32)
    sets: list[frozenset[int]] = [frozenset()]
    for i in range(1, len(gens)):
        quotients = mat[:i] - mat[i]
        np.maximum(quotients, 0, out=quotients)
        degs = quotients.sum(axis=1)
        if not degs.all():
            # Some earlier generator divides u_i: the colon is the unit ideal.
            raise NotLinearQuotientsError(i, gens[i])
        singles = quotients[degs == 1]
        cols = np.unique(np.nonzero(singles)[1]) if len(singles) else np.empty(0, int)
        if len(cols) == 0 or not (quotients[:, cols] >= 1).any(axis=1).all():
            raise NotLinearQuotientsError(i, gens[i])
        sets.append(frozenset(int(c) + 1 for c in cols))
    return SetMap(gens, tuple(sets))


def set_via_even_connected(g: Graph, f: Factorization) -> frozenset[int]:
    """set(u) computed combinatorially from adjacency and even-connected walks.

    A vertex i qualifies when some multiset edge {i, j} admits a k > i
    with {j, k} an edge of g or j even-connected to k with respect to the
    remaining multiset.
    """
    result = set()
    for i in sorted({v for e in f.edges.support() for v in e}):
        found = False
        for e in f.edges.support():
            if i not in e:
                continue
            j = e[0] if e[1] == i else e[1]
            rest = f.edges.remove_one(e)
            if any(k > i for k in g.neighbors(j)):
                found = True
            else:
                found = any(
                    even_connected(g, j, k, rest) for k in range(i + 1, g.n + 1)
                )
            if found:
                break
        if found:
            result.add(i)
    return frozenset(result)


def set_tree(t: LabeledTree, f: Factorization) -> frozenset[int]:
    """set(u) for a tree power generator: edge minima, excluding n - 1."""
    mins = {min(e) for e in f.edges.support()}
    mins.discard(t.n - 1)
    return frozenset(mins)


def set_cycle(c: CycleLabeling, f: Factorization) -> frozenset[int]:
    """set(u) for a cycle power generator from the two alternating edge chains.

    The first chain e1, e3, ..., e_{2l-1} contributes [2l] for the largest
    admissible l; the chain e0, e2, ..., e_{2l} contributes [2l+1]; edge
    minima (minus n - 1) contribute the rest.  Empty admissible ranges and
    missing chain heads contribute nothing.
    """
    n = c.n
    m = n // 2
    support = set(f.edges.support())

    def chain_component(start: int, n_edges, max_l: int, size) -> set[int]:
        best = 0
        for l in range(1, max_l + 1):
            chain = {c.edge(start + 2 * t) for t in range(n_edges(l))}
            if chain <= support:
                best = l
        return set(range(1, size(best) + 1)) if best else set()

    # The chain e1, e3, ..., e_{2l-1} has l edges; e0, e2, ..., e_{2l} has l + 1.
    if n % 2 == 0:
        n1 = chain_component(1, lambda l: l, m - 1, lambda l: 2 * l)
        n2 = chain_component(0, lambda l: l + 1, m - 2, lambda l: 2 * l + 1)
    else:
        n1 = chain_component(1, lambda l: l, m, lambda l: 2 * l)
        n2 = chain_component(0, lambda l: l + 1, m - 1, lambda l: 2 * l + 1)
    mins = {min(e) for e in support}
    mins.discard(n - 1)
    return frozenset(n1 | n2 | mins)


def pd_linear_quotients(sm: SetMap) -> int:
    """Projective dimension as the largest |set(u)| over the generators."""
    if not sm.gens:
        raise PreconditionError("projective dimension of the zero ideal is undefined")
    return max((len(s) for s in sm.sets), default=0)


@lru_cache(maxsize=None)
def power_set_map(g: Graph, s: int) -> SetMap:
    """Set map of the s-th power in descending lex order; cached per (g, s)."""
    facts = power_generators(g, s)
    return set_map_colon([f.monomial for f in facts])


def comp_power_ideal(g: Graph, s: int) -> MonomialIdeal:
    """The s-th power of the complementary edge ideal via edge-multiset enumeration."""
    if s < 0:
        return MonomialIdeal.zero(g.n)
    if s == 0:
        return MonomialIdeal.unit(g.n)
    return MonomialIdeal(g.n, tuple(f.monomial for f in power_generators(g, s)))


def pd_of_power(g: Graph, s: int) -> int:
    """pd of the s-th power for any connected graph, relabeling if needed."""
    labeled, _ = lex_labeled_copy(g)
    return pd_linear_quotients(power_set_map(labeled, s))


def pd_formula(g: Graph | LabeledTree | CycleLabeling, s: int) -> int:
    """Closed-form pd of the s-th power for trees and cycles only."""
    if s < 1:
        raise PreconditionError("power must be at least 1")
    if isinstance(g, LabeledTree):
        g = g.graph
    if isinstance(g, CycleLabeling):
        g = g.graph
    if is_tree(g):
        return min(s, g.n - 2)
    if is_cycle_graph(g):
        m = g.n // 2
        if g.n % 2 == 0:
            return min(2 * s, 2 * m - 2)
        return min(2 * s, 2 * m)
    raise PreconditionError("closed-form pd is only available for trees and cycles")


def dstab_scan(g: Graph, s_max: int) -> tuple[int | None, tuple[int, ...]]:
    """pd of the first s_max powers and the first power reaching the ceiling.

    The ceiling is n - 2 for connected bipartite graphs and n - 1
    otherwise; returns (None, sequence) when the scan never reaches it.
    """
    if not is_connected(g):
        raise PreconditionError("dstab scan requires a connected graph")
    ceiling = g.n - 2 if is_bipartite(g) else g.n - 1
    pds = tuple(pd_of_power(g, s) for s in range(1, s_max + 1))
    for s, value in enumerate(pds, start=1):
        if value == ceiling:
            return s, pds
    return None, pds
