"""Homological shift ideals: generic computation and tree/cycle closed forms.

HS_i(I) is generated by the monomials x_F * u over generators u and
subsets F of set(u) with |F| = i whenever I has linear quotients.  For
complementary edge ideals this module also evaluates the closed forms

  trees:   HS_i(I^s) = I^{s-i} * ( alpha^i / prod_{k in F} x_phi(k) ),
           F running over the i-subsets of [n-2], valid for 1 <= i <= s;

  cycles:  HS_i(I^s) = sum over k from max(i - ceil(n/2) + 1, 0) to
           floor(i/2) of (alpha^{i-k} / x_F) * I^{s-i+k} with |F| = i - 2k,
           valid for 1 <= i < n and s >= floor(i/2);

with I^0 the unit ideal and I^t = 0 for t < 0.  Outside those ranges the
engine falls back to the linear-quotient computation.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, NamedTuple

from .betti import hs_oracle
from .edge_ideals import (
    SetMap,
    comp_edge_ideal,
    comp_power_ideal,
    power_set_map,
)
from .errors import PreconditionError
from .graphs import (
    CycleLabeling,
    Graph,
    LabeledTree,
    caterpillar_from_profile,
    cycle_labeling_of,
    invert_permutation,
    is_connected,
    is_cycle_graph,
    is_tree,
    lex_labeled_copy,
    tree_distance_labeling,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    VeroneseSpec,
    divide_out,
    has_strong_exchange,
    maximal_ideal,
    squarefree_power_of_maximal,
    veronese_type,
)


def hs_linear_quotients(sm: SetMap, i: int) -> MonomialIdeal:
    """HS_i from a linear-quotients set map: all x_F * u with F in set(u)."""
    n = sm.n
    if i < 0:
        return MonomialIdeal.zero(n)
    if i == 0:
        return MonomialIdeal(n, sm.gens)
    gens = []
    for u, su in sm.items():
        if len(su) < i:
            continue
        for F in combinations(sorted(su), i):
            gens.append(Monomial.from_support(n, F) * u)
    return MonomialIdeal(n, gens)


def permute_ideal(ideal: MonomialIdeal, perm: tuple[int, ...]) -> MonomialIdeal:
    """Rename variables by v -> perm[v-1]."""
    moved = []
    for g in ideal.gens:
        exps = [0] * ideal.n
        for v, e in enumerate(g.exps, start=1):
            exps[perm[v - 1] - 1] = e
        moved.append(Monomial(exps))
    return MonomialIdeal(ideal.n, moved)


@lru_cache(maxsize=None)
def hs_power(g: Graph, i: int, s: int) -> MonomialIdeal:
    """HS_i of the s-th power of the complementary edge ideal of g.

    Computed via linear quotients after relabeling g if its own labels are
    not suffix-connected; the result is expressed in g's original labels.
    """
    if not is_connected(g):
        raise PreconditionError("homological shifts require a connected graph")
    if s < 0:
        return MonomialIdeal.zero(g.n)
    if s == 0:
        return MonomialIdeal.unit(g.n) if i == 0 else MonomialIdeal.zero(g.n)
    labeled, perm = lex_labeled_copy(g)
    hs = hs_linear_quotients(power_set_map(labeled, s), i)
    identity = tuple(range(1, g.n + 1))
    if perm == identity:
        return hs
    return permute_ideal(hs, invert_permutation(perm))


def hs1_via_lcm(ideal: MonomialIdeal) -> MonomialIdeal:
    """HS_1 as the ideal of pairwise lcms of distinct generators."""
    if len(ideal.gens) < 2:
        return MonomialIdeal.zero(ideal.n)
    lcms = (u.lcm(v) for u, v in combinations(ideal.gens, 2))
    return MonomialIdeal(ideal.n, tuple(lcms))


def hs1_formula(g: Graph) -> MonomialIdeal:
    """HS_1 of a complementary edge ideal: alpha / x_i over vertices of degree >= 2."""
    if not is_connected(g):
        raise PreconditionError("the HS_1 formula requires a connected graph")
    alpha = Monomial.uniform(g.n, 1)
    gens = [
        alpha / Monomial.variable(g.n, v) for v in g.vertices() if g.degree(v) >= 2
    ]
    return MonomialIdeal(g.n, gens)


def hs1_power_identity_check(g: Graph, s: int) -> bool:
    """Whether HS_1(I^{s+1}) equals I^s * HS_1(I)."""
    if s < 0:
        raise PreconditionError("power must be non-negative")
    lhs = hs_power(g, 1, s + 1)
    rhs = comp_power_ideal(g, s) * hs_power(g, 1, 1)
    return lhs == rhs


def j_ideal(t: LabeledTree, i: int) -> MonomialIdeal:
    """The ideal of alpha^i / prod_{k in F} x_phi(k) over i-subsets F of [n-2]."""
    n = t.n
    if i < 0 or i > n - 2:
        raise PreconditionError(f"index {i} outside [0, {n - 2}]")
    gens = []
    for F in combinations(range(1, n - 1), i):
        exps = [i] * n
        for k in F:
            exps[t.phi(k) - 1] -= 1
        gens.append(Monomial(exps))
    return MonomialIdeal(n, gens)


def k_ideal(t: LabeledTree, i: int) -> MonomialIdeal:
    """The ideal of prod_{k in F} x_phi(k) over i-subsets F of [n-2]; K_0 = S."""
    n = t.n
    if i < 0 or i > n - 2:
        raise PreconditionError(f"index {i} outside [0, {n - 2}]")
    gens = []
    for F in combinations(range(1, n - 1), i):
        exps = [0] * n
        for k in F:
            exps[t.phi(k) - 1] += 1
        gens.append(Monomial(exps))
    return MonomialIdeal(n, gens)


def hs_tree_formula(t: LabeledTree, i: int, s: int) -> MonomialIdeal:
    """The tree closed form I^{s-i} * J_i, valid for 1 <= i <= s."""
    if not 1 <= i <= s:
        raise PreconditionError(f"tree formula needs 1 <= i <= s, got i={i}, s={s}")
    if i > t.n - 2:
        return MonomialIdeal.zero(t.n)
    return comp_power_ideal(t.graph, s - i) * j_ideal(t, i)


def hs_cycle_formula(c: CycleLabeling, i: int, s: int) -> MonomialIdeal:
    """The cycle closed form, valid for 1 <= i < n and s >= floor(i/2)."""
    n = c.n
    if not 1 <= i < n:
        raise PreconditionError(f"cycle formula needs 1 <= i < n, got i={i}")
    if s < i // 2:
        raise PreconditionError(f"cycle formula needs s >= floor(i/2), got s={s}")
    ceil_half = (n + 1) // 2
    gens: list[Monomial] = []
    for k in range(max(i - ceil_half + 1, 0), i // 2 + 1):
        power = comp_power_ideal(c.graph, s - i + k)
        if power.is_zero():
            continue
        base = Monomial.uniform(n, i - k)
        for F in combinations(range(1, n + 1), i - 2 * k):
            shifted = base / Monomial.from_support(n, F)
            gens.extend(shifted * u for u in power.gens)
    return MonomialIdeal(n, gens)


def hs_cycle_top(c: CycleLabeling, s: int) -> MonomialIdeal:
    """The top nonvanishing shift ideal of a cycle power as alpha-power times a power.

    For odd n = 2m+1 this is HS_{2m}(I^s) = alpha^m * I^{s-m} (s >= m);
    for even n = 2m it is HS_{2m-2}(I^s) = alpha^{m-1} * I^{s-m+1}
    (s >= m-1).
    """
    m = c.n // 2
    threshold = m if c.n % 2 else m - 1
    if s < threshold:
        raise PreconditionError(f"top shift formula needs s >= {threshold}, got {s}")
    return comp_power_ideal(c.graph, s - threshold).scaled(
        Monomial.uniform(c.n, threshold)
    )


class MaximalIdentityResult(NamedTuple):
    verdict: bool
    hs_i: MonomialIdeal
    hs_prev_of_max_multiple: MonomialIdeal
    target: MonomialIdeal


def check_hs_maximal_identity(
    ideal: MonomialIdeal, i: int, set_map: SetMap | None = None
) -> MaximalIdentityResult:
    """Check HS_i(I) + HS_{i-1}(m*I) = m^[i] * I for an ideal with linear resolution.

    HS_i(I) comes from the set map when one is supplied, otherwise from the
    Betti oracle; HS_{i-1}(m*I) always goes through the oracle.  At i = n
    this degenerates to HS_{n-1}(m*I) = m^[n] * I.
    """
    n = ideal.n
    if not 1 <= i <= n:
        raise PreconditionError(f"index {i} outside [1, {n}]")
    hs_i = (
        hs_linear_quotients(set_map, i) if set_map is not None else hs_oracle(ideal, i)
    )
    m_ideal = maximal_ideal(n) * ideal
    hs_prev = hs_oracle(m_ideal, i - 1)
    target = squarefree_power_of_maximal(n, i) * ideal
    return MaximalIdentityResult(hs_i + hs_prev == target, hs_i, hs_prev, target)


def veronese_structure_check(t: LabeledTree, i: int) -> bool:
    """Verify the Veronese structure of the tree shift building blocks.

    Checks that (i) K_i equals the Veronese-type ideal capped by the
    parent-fiber sizes b_k = |phi^{-1}(k)|, (ii) the cleared identity
    x^b * J_i = alpha^i * K_{n-2-i} holds, and (iii) J_i has the strong
    exchange property.
    """
    n = t.n
    if not 1 <= i <= n - 2:
        raise PreconditionError(f"index {i} outside [1, {n - 2}]")
    b = [0] * n
    for j in range(1, n - 1):
        b[t.phi(j) - 1] += 1
    ok_veronese = k_ideal(t, i) == veronese_type(VeroneseSpec(tuple(b), i))
    lhs = j_ideal(t, i).scaled(Monomial(b))
    rhs = k_ideal(t, n - 2 - i).scaled(Monomial.uniform(n, i))
    ok_cleared = lhs == rhs
    ok_exchange = has_strong_exchange(j_ideal(t, i))
    return ok_veronese and ok_cleared and ok_exchange


def _embed_veronese(spec: VeroneseSpec, t: LabeledTree) -> MonomialIdeal:
    """Lift the Veronese ideal into the caterpillar's ring via its spine vertices."""
    caps = spec.caps
    sigma = [0]
    for x in caps:
        sigma.append(sigma[-1] + x)
    n_big = t.n
    positions = [sigma[j] + 1 for j in range(1, len(caps) + 1)]
    lifted = []
    for g in veronese_type(spec).gens:
        exps = [0] * n_big
        for idx, e in enumerate(g.exps):
            exps[positions[idx] - 1] = e
        lifted.append(Monomial(exps))
    return MonomialIdeal(n_big, lifted)


def caterpillar_realization(
    spec: VeroneseSpec,
) -> tuple[LabeledTree, Monomial, bool]:
    """Realize a Veronese-type ideal as a shift ideal of a caterpillar tree.

    Builds the caterpillar T for the cap profile, computes
    H = HS_{|a|-d}(I_c(T)^{|a|-d}), and compares the content-free core of
    H with the content-free core of the Veronese ideal embedded along the
    spine.  Returns (T, content of H, verdict).  Core comparison is used
    because the two sides agree up to a monomial factor that can carry
    negative exponents when some cap exceeds |a| - d.
    """
    caps = spec.caps
    if any(a < 1 for a in caps):
        raise PreconditionError(f"caterpillar profile needs positive caps: {caps}")
    if not 1 <= spec.degree <= sum(caps):
        raise PreconditionError(
            f"degree {spec.degree} outside [1, {sum(caps)}]"
        )
    t = caterpillar_from_profile(caps)
    i = sum(caps) - spec.degree
    if i == 0:
        shift_ideal = MonomialIdeal.unit(t.n)
    else:
        shift_ideal = hs_tree_formula(t, i, i)
    content, core = divide_out(shift_ideal)
    _, veronese_core = divide_out(_embed_veronese(spec, t))
    return t, content, core == veronese_core


def hs_rees_containment_check(g: Graph, i: int, s: int) -> bool:
    """Whether I * HS_i(I^s) is contained in HS_i(I^{s+1})."""
    lhs = comp_edge_ideal(g) * hs_power(g, i, s)
    return lhs.is_contained_in(hs_power(g, i, s + 1))


def generation_degree_profile(g: Graph, i: int, s_max: int) -> list[int]:
    """Powers s <= s_max where HS_i(I^s) strictly exceeds I * HS_i(I^{s-1}).

    These are the degrees contributing new module generators to the i-th
    shift module over the powers of I.  The containment
    I * HS_i(I^{s-1}) <= HS_i(I^s) is asserted along the way.
    """
    ideal = comp_edge_ideal(g)
    previous = hs_power(g, i, 0)
    degrees = []
    for s in range(1, s_max + 1):
        current = hs_power(g, i, s)
        base = ideal * previous
        if not base.is_contained_in(current):
            raise AssertionError(f"shift module containment failed at s={s}")
        if current != base:
            degrees.append(s)
        previous = current
    return degrees


def hs_subgraph_containment_check(
    g: Graph,
    h_vertices: Iterable[int],
    h_edges: Iterable[tuple[int, int]],
    i: int,
    s: int,
) -> bool:
    """Whether u^s * HS_i(I_c(H)^s) lies in HS_i(I_c(G)^s).

    H is a connected subgraph of g on the given vertices; u is the product
    of the variables outside V(H).  H's shift ideal is computed in its own
    compressed ring and re-embedded by padding exponents with zeros.
    """
    vs = sorted(set(h_vertices))
    if any(not 1 <= v <= g.n for v in vs):
        raise PreconditionError("subgraph vertices outside the host graph")
    pos = {v: idx + 1 for idx, v in enumerate(vs)}
    edges = [tuple(e) for e in h_edges]
    for a, b in edges:
        if not g.has_edge(a, b) or a not in pos or b not in pos:
            raise PreconditionError(f"edge ({a}, {b}) is not a subgraph edge")
    h = Graph(len(vs), [(pos[a], pos[b]) for a, b in edges])
    if not is_connected(h):
        raise PreconditionError("the subgraph must be connected")
    hs_h = hs_power(h, i, s)
    outside = Monomial.from_support(g.n, set(g.vertices()) - set(vs)) ** s
    lifted = []
    for gen in hs_h.gens:
        exps = [0] * g.n
        for idx, e in enumerate(gen.exps):
            exps[vs[idx] - 1] = e
        lifted.append(Monomial(exps) * outside)
    return MonomialIdeal(g.n, lifted).is_contained_in(hs_power(g, i, s))


def hs_closed_form(g: Graph, i: int, s: int) -> MonomialIdeal | None:
    """Closed-form HS_i(I^s) for trees and cycles, in g's own labels.

    Returns None when g is neither a tree nor a cycle, or when (i, s) sits
    outside the proven range of the respective formula; callers fall back
    to hs_power in that case.  i = 0 always returns the power itself.
    """
    if s < 0:
        return MonomialIdeal.zero(g.n)
    if i == 0:
        return comp_power_ideal(g, s)
    if s == 0:
        return MonomialIdeal.zero(g.n)
    identity = tuple(range(1, g.n + 1))
    if is_tree(g):
        if not 1 <= i <= s:
            return None
        leaves = [v for v in g.vertices() if g.degree(v) == 1]
        t = tree_distance_labeling(g, max(leaves))
        hs = hs_tree_formula(t, i, s)
        if t.relabeling == identity:
            return hs
        return permute_ideal(hs, invert_permutation(t.relabeling))
    if is_cycle_graph(g):
        if not (1 <= i < g.n and s >= i // 2):
            return None
        cyc, perm = cycle_labeling_of(g)
        hs = hs_cycle_formula(cyc, i, s)
        if perm == identity:
            return hs
        return permute_ideal(hs, invert_permutation(perm))
    return None
