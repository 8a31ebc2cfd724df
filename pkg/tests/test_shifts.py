from itertools import combinations

import pytest

from homshift import (
    CycleLabeling,
    Graph,
    Monomial,
    MonomialIdeal,
    PreconditionError,
    VeroneseSpec,
    caterpillar_from_profile,
    caterpillar_realization,
    check_hs_maximal_identity,
    comp_edge_ideal,
    comp_power_ideal,
    generation_degree_profile,
    hs1_formula,
    hs1_power_identity_check,
    hs1_via_lcm,
    hs_closed_form,
    hs_cycle_formula,
    hs_cycle_top,
    hs_linear_quotients,
    hs_oracle,
    hs_power,
    hs_rees_containment_check,
    hs_subgraph_containment_check,
    hs_tree_formula,
    j_ideal,
    k_ideal,
    maximal_ideal,
    pd_of_power,
    permute_ideal,
    power_set_map,
    spanning_paths_of_cycle,
    squarefree_power_of_maximal,
    tree_distance_labeling,
    veronese_structure_check,
    veronese_type,
)
from homshift.corpus import connected_graphs, distance_labeled_trees
from homshift.graphs import invert_permutation


def path(n):
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def ideal(n, *rows):
    return MonomialIdeal.from_exponents(n, rows)


def test_hs_linear_quotients_examples():
    sm = power_set_map(path(4), 1)
    assert hs_linear_quotients(sm, 0) == comp_edge_ideal(path(4))
    assert hs_linear_quotients(sm, 1) == ideal(4, (1, 1, 0, 1), (1, 0, 1, 1))
    sm4 = power_set_map(CycleLabeling(4).graph, 1)
    assert hs_linear_quotients(sm4, 2) == ideal(4, (1, 1, 1, 1))
    assert hs_linear_quotients(sm4, 3).is_zero()


def test_hs1_via_lcm_examples():
    assert hs1_via_lcm(ideal(3, (1, 0, 0), (0, 0, 1))) == ideal(3, (1, 0, 1))
    I = comp_edge_ideal(path(4))
    assert hs1_via_lcm(I) == ideal(4, (1, 1, 0, 1), (1, 0, 1, 1))
    assert hs1_via_lcm(ideal(2, (1, 1))).is_zero()


def test_hs1_formula_examples():
    c4 = CycleLabeling(4).graph
    assert hs1_formula(c4) == ideal(
        4, (1, 1, 1, 0), (1, 1, 0, 1), (1, 0, 1, 1), (0, 1, 1, 1)
    )
    assert hs1_formula(path(4)) == ideal(4, (1, 1, 0, 1), (1, 0, 1, 1))
    assert hs1_formula(path(3)) == ideal(3, (1, 0, 1))


def test_hs1_power_identity_examples():
    assert hs1_power_identity_check(path(4), 1)
    assert hs1_power_identity_check(CycleLabeling(4).graph, 1)
    assert hs1_power_identity_check(CycleLabeling(5).graph, 0)


def test_hs_tree_formula_examples():
    t = tree_distance_labeling(path(4), 4)
    assert hs_tree_formula(t, 1, 1) == ideal(4, (1, 1, 0, 1), (1, 0, 1, 1))
    assert hs_tree_formula(t, 2, 2) == ideal(4, (2, 1, 1, 2))
    expanded = hs_tree_formula(t, 1, 2)
    sm = power_set_map(t.graph, 2)
    assert expanded == hs_linear_quotients(sm, 1)
    with pytest.raises(PreconditionError):
        hs_tree_formula(t, 2, 1)
    with pytest.raises(PreconditionError):
        hs_tree_formula(t, 0, 1)


def test_hs_tree_formula_label_independent():
    # Two different admissible labelings of the 5-vertex star-with-tail shape.
    shape = Graph(5, [(1, 3), (2, 3), (3, 4), (4, 5)])
    t1 = tree_distance_labeling(shape, 5)
    shape2 = Graph(5, [(2, 3), (1, 3), (3, 4), (4, 5)])
    t2 = tree_distance_labeling(shape2, 5)
    for i, s in [(1, 1), (1, 2), (2, 2)]:
        a = permute_ideal(hs_tree_formula(t1, i, s), invert_permutation(t1.relabeling))
        b = permute_ideal(hs_tree_formula(t2, i, s), invert_permutation(t2.relabeling))
        assert a == b


def test_j_and_k_ideal_examples():
    t = tree_distance_labeling(path(4), 4)
    assert j_ideal(t, 1) == ideal(4, (1, 0, 1, 1), (1, 1, 0, 1))
    assert k_ideal(t, 1) == ideal(4, (0, 1, 0, 0), (0, 0, 1, 0))
    star = tree_distance_labeling(Graph(4, [(3, 1), (3, 2), (3, 4)]), 1)
    assert k_ideal(star, 1) == ideal(4, (0, 0, 1, 0))
    assert j_ideal(star, 1) == ideal(4, (1, 1, 0, 1))
    assert j_ideal(t, 0) == MonomialIdeal.unit(4)
    assert k_ideal(t, 0) == MonomialIdeal.unit(4)
    with pytest.raises(PreconditionError):
        j_ideal(t, 3)


def test_hs_cycle_formula_examples():
    c4 = CycleLabeling(4)
    assert hs_cycle_formula(c4, 1, 1) == hs1_formula(c4.graph)
    assert hs_cycle_formula(c4, 2, 1) == ideal(4, (1, 1, 1, 1))
    c5 = CycleLabeling(5)
    assert hs_cycle_formula(c5, 4, 2) == ideal(5, (2, 2, 2, 2, 2))
    with pytest.raises(PreconditionError):
        hs_cycle_formula(c4, 4, 2)
    with pytest.raises(PreconditionError):
        hs_cycle_formula(c5, 4, 1)


def test_hs_cycle_top_examples():
    c5 = CycleLabeling(5)
    assert hs_cycle_top(c5, 2) == ideal(5, (2, 2, 2, 2, 2))
    c4 = CycleLabeling(4)
    assert hs_cycle_top(c4, 1) == ideal(4, (1, 1, 1, 1))
    c6 = CycleLabeling(6)
    want = comp_power_ideal(c6.graph, 1).scaled(Monomial.uniform(6, 2))
    assert hs_cycle_top(c6, 3) == want
    sm = power_set_map(c6.graph, 3)
    assert want == hs_linear_quotients(sm, 4)
    with pytest.raises(PreconditionError):
        hs_cycle_top(c5, 1)


def test_hs_power_vanishing_matches_pd():
    for g in [path(4), CycleLabeling(4).graph, CycleLabeling(5).graph]:
        for s in (1, 2):
            pd = pd_of_power(g, s)
            for i in range(0, pd + 3):
                assert hs_power(g, i, s).is_zero() == (i > pd)


def test_hs_generators_are_squarefree_multiples_of_generators():
    for g in [path(5), CycleLabeling(5).graph]:
        for s in (1, 2):
            I = comp_power_ideal(g, s)
            for i in range(1, pd_of_power(g, s) + 1):
                for h in hs_power(g, i, s).gens:
                    witnesses = [
                        u for u in I.gens
                        if u.divides(h)
                        and (h / u).degree() == i
                        and all(e <= 1 for e in (h / u).exps)
                    ]
                    assert witnesses


def test_maximal_identity_examples():
    I = ideal(3, (1, 0, 0), (0, 0, 1))
    res = check_hs_maximal_identity(I, 1)
    assert res.verdict
    assert res.hs_i == ideal(3, (1, 0, 1))
    assert res.target == maximal_ideal(3) * I
    # i = n: HS_n(I) = 0, so the identity pins HS_{n-1}(m I) = m^[n] I
    res = check_hs_maximal_identity(I, 3)
    assert res.verdict and res.hs_i.is_zero()
    assert res.hs_prev_of_max_multiple == squarefree_power_of_maximal(3, 3) * I
    c4 = CycleLabeling(4).graph
    res = check_hs_maximal_identity(comp_edge_ideal(c4), 2, set_map=power_set_map(c4, 1))
    assert res.verdict


def test_veronese_structure_examples():
    t = tree_distance_labeling(path(4), 4)
    assert veronese_structure_check(t, 1)
    assert k_ideal(t, 1) == veronese_type(VeroneseSpec((0, 1, 1, 0), 1))
    star5 = tree_distance_labeling(Graph(5, [(4, 1), (4, 2), (4, 3), (4, 5)]), 1)
    assert k_ideal(star5, 1) == ideal(5, (0, 0, 0, 1, 0))
    assert veronese_structure_check(star5, 1)
    for n in range(3, 7):
        for t in distance_labeled_trees(n):
            assert veronese_structure_check(t, n - 2)


def test_caterpillar_realization_examples():
    t, content, ok = caterpillar_realization(VeroneseSpec((1, 1), 1))
    assert ok
    assert t.graph.edges == ((1, 2), (2, 3), (3, 4))
    assert content == Monomial((1, 0, 0, 1))
    t, content, ok = caterpillar_realization(VeroneseSpec((1,), 1))
    assert ok and content.is_one()
    _, _, ok = caterpillar_realization(VeroneseSpec((2, 1), 2))
    assert ok
    with pytest.raises(ValueError):
        caterpillar_realization(VeroneseSpec((1,), 2))


def test_caterpillar_realization_against_linear_quotients():
    # formula-based shift ideal equals the linear-quotient one on the built tree
    for caps, d in [((2, 1), 1), ((1, 2), 2), ((3,), 1)]:
        t = caterpillar_from_profile(caps)
        i = sum(caps) - d
        assert hs_tree_formula(t, i, i) == hs_power(t.graph, i, i)


def test_rees_containment_examples():
    assert hs_rees_containment_check(path(4), 1, 1)
    assert hs_rees_containment_check(CycleLabeling(5).graph, 2, 1)
    assert hs_rees_containment_check(CycleLabeling(4).graph, 4, 1)  # vacuous


def test_generation_degree_profile_examples():
    assert generation_degree_profile(path(5), 2, 4) == [2]
    c6 = CycleLabeling(6).graph
    profile = generation_degree_profile(c6, 3, 4)
    assert profile and max(profile) <= 2  # bound i - q with q = 1
    assert generation_degree_profile(path(5), 0, 3) == []


def test_generation_degree_profiles_trees_exact():
    for n in range(3, 6):
        for t in distance_labeled_trees(n):
            for i in range(1, n - 1):
                assert generation_degree_profile(t.graph, i, i + 2) == [i]


def test_generation_degree_profiles_cycles_bounded():
    for n in range(3, 7):
        c = CycleLabeling(n).graph
        ceil_half = (n + 1) // 2
        for i in range(1, n):
            q = max(i - ceil_half + 1, 0)
            bound = i - q
            profile = generation_degree_profile(c, i, min(i + 1, 4))
            assert all(s <= bound for s in profile)


def test_subgraph_containment_examples():
    c4 = CycleLabeling(4).graph
    assert hs_subgraph_containment_check(c4, [1, 2, 3, 4], [(1, 2), (2, 3), (3, 4)], 1, 1)
    c5 = CycleLabeling(5).graph
    assert hs_subgraph_containment_check(c5, [1, 2, 3, 4, 5], c5.edges, 2, 1)
    assert hs_subgraph_containment_check(path(4), [2, 3, 4], [(2, 3), (3, 4)], 1, 1)
    with pytest.raises(PreconditionError):
        hs_subgraph_containment_check(path(4), [1, 4], [(1, 4)], 1, 1)


def test_hs_closed_form_dispatch():
    p4 = path(4)
    assert hs_closed_form(p4, 1, 1) == hs_power(p4, 1, 1)
    assert hs_closed_form(p4, 2, 1) is None  # outside the tree range i <= s
    assert hs_closed_form(p4, 0, 2) == comp_power_ideal(p4, 2)
    c5 = CycleLabeling(5).graph
    assert hs_closed_form(c5, 4, 1) is None  # s < floor(i/2)
    assert hs_closed_form(c5, 3, 1) == hs_power(c5, 3, 1)  # in range, both zero
    assert hs_closed_form(c5, 2, 2) == hs_power(c5, 2, 2)
    k4 = Graph(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
    assert hs_closed_form(k4, 1, 1) is None


def test_hs_power_on_relabeled_graph_matches_oracle():
    weird = Graph(4, [(2, 1), (1, 3), (3, 4)])  # path 2-1-3-4, bad labeling
    I = comp_edge_ideal(weird)
    for i in range(0, 3):
        assert hs_power(weird, i, 1) == hs_oracle(I, i)


def test_spanning_path_shift_sum_is_first_component():
    # sum over spanning paths of HS_i equals the k = 0 slice of the cycle form
    for n in (4, 5):
        c = CycleLabeling(n)
        for i in (1, 2):
            if not i < n / 2:
                continue
            for s in (i, i + 1):
                total = MonomialIdeal.zero(n)
                for lt in spanning_paths_of_cycle(c):
                    back = permute_ideal(
                        hs_tree_formula(lt, i, s), invert_permutation(lt.relabeling)
                    )
                    total = total + back
                alpha_i = Monomial.uniform(n, i)
                P = comp_power_ideal(c.graph, s - i)
                gens = []
                for F in combinations(range(1, n + 1), i):
                    m = alpha_i / Monomial.from_support(n, F)
                    gens.extend(m * u for u in P.gens)
                assert total == MonomialIdeal(n, gens)


def test_hs1_routes_agree_on_connected_corpus():
    for n in range(3, 6):
        for g in connected_graphs(n):
            I = comp_edge_ideal(g)
            assert hs1_formula(g) == hs1_via_lcm(I) == hs_power(g, 1, 1)
