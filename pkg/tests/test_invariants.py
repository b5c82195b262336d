"""Exact invariant oracles vs exhaustive enumeration and pinned examples."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from bruteforce import (
    brute_chromatic,
    brute_edge_cover,
    brute_has_odd_hole,
    brute_independence,
    brute_matching,
    brute_max_clique,
    brute_vertex_cover,
)
from epgraph.epg import enhanced_power_graph
from epgraph.errors import (
    BudgetExceededError,
    InvalidParameterError,
    UnsupportedDiameterError,
)
from epgraph.graphs import SimpleGraph
from epgraph.groups import build_group, make_abelian, make_cyclic, make_dihedral
from epgraph.invariants import (
    chromatic_number,
    closed_neighborhood_partition,
    find_odd_antihole,
    find_odd_hole,
    independence_number,
    max_clique,
    maximum_matching,
    quotient_graph,
    strong_metric_dimension,
    strong_resolving_oracle,
)


@st.composite
def small_graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if draw(st.booleans()):
                edges.append((u, v))
    return SimpleGraph.from_edges(n, edges)


def path_graph(n):
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


# ---------------------------------------------------------------------------
# clique / independence
# ---------------------------------------------------------------------------

def test_clique_examples():
    assert max_clique(SimpleGraph.complete(5)) == 5
    assert max_clique(SimpleGraph.cycle(5)) == 2
    assert max_clique(SimpleGraph(3)) == 1


def test_clique_of_enhanced_graph_is_max_element_order(corpus):
    for spec, g in corpus.items():
        pe = enhanced_power_graph(g).graph
        assert max_clique(pe) == max(g.elem_orders), spec


@given(small_graphs())
@settings(max_examples=80, deadline=None)
def test_clique_matches_enumeration(g):
    assert max_clique(g) == brute_max_clique(g)


def test_clique_budget_exhaustion_is_distinct():
    with pytest.raises(BudgetExceededError):
        max_clique(SimpleGraph.complete(30), budget=3)


def test_independence_examples():
    assert independence_number(SimpleGraph(7)) == 7
    pe = enhanced_power_graph(make_dihedral(5)).graph
    assert independence_number(pe) == 6
    klein = enhanced_power_graph(make_abelian([2, 2])).graph
    assert independence_number(klein) == 3


@given(small_graphs())
@settings(max_examples=60, deadline=None)
def test_independence_matches_enumeration(g):
    assert independence_number(g) == brute_independence(g)


# ---------------------------------------------------------------------------
# matching
# ---------------------------------------------------------------------------

def test_matching_examples():
    assert maximum_matching(SimpleGraph.complete(4)) == 2
    assert maximum_matching(SimpleGraph.cycle(5)) == 2
    assert maximum_matching(enhanced_power_graph(make_cyclic(9)).graph) == 4
    assert maximum_matching(SimpleGraph(6)) == 0


def test_matching_on_petersen_graph():
    petersen = SimpleGraph.from_edges(10, [
        (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
        (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)])
    assert maximum_matching(petersen) == 5


@given(small_graphs())
@settings(max_examples=100, deadline=None)
def test_matching_matches_enumeration(g):
    assert maximum_matching(g) == brute_matching(g)


@given(small_graphs(min_n=2, max_n=9), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_matching_is_relabeling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert maximum_matching(g.relabeled(perm)) == maximum_matching(g)


# ---------------------------------------------------------------------------
# chromatic number
# ---------------------------------------------------------------------------

def test_chromatic_examples():
    assert chromatic_number(SimpleGraph.complete(6)) == 6
    assert chromatic_number(SimpleGraph.cycle(5)) == 3
    assert chromatic_number(SimpleGraph(4)) == 1


@given(small_graphs(max_n=8))
@settings(max_examples=50, deadline=None)
def test_chromatic_matches_enumeration(g):
    assert chromatic_number(g) == brute_chromatic(g)


def test_chromatic_vertex_bound():
    with pytest.raises(BudgetExceededError):
        chromatic_number(SimpleGraph(30))


def test_chromatic_equals_clique_on_induced_subgraphs_of_sd16():
    pe = enhanced_power_graph(build_group("semidihedral:2")).graph
    rng = random.Random(7)
    for _ in range(12):
        verts = sorted(rng.sample(range(pe.n), rng.randint(2, 12)))
        sub = pe.induced(verts)
        assert chromatic_number(sub) == max_clique(sub)


# ---------------------------------------------------------------------------
# Gallai identities via independent covers
# ---------------------------------------------------------------------------

@given(small_graphs())
@settings(max_examples=40, deadline=None)
def test_gallai_identities_hold_by_enumeration(g):
    assert brute_independence(g) + brute_vertex_cover(g) == g.n
    cover = brute_edge_cover(g)
    if cover is not None:
        assert brute_matching(g) + cover == g.n


# ---------------------------------------------------------------------------
# odd holes and antiholes
# ---------------------------------------------------------------------------

def test_hole_examples():
    assert find_odd_hole(SimpleGraph.cycle(5)) == [0, 1, 2, 3, 4]
    assert find_odd_hole(SimpleGraph.cycle(6)) is None
    assert find_odd_hole(SimpleGraph.cycle(7)) == [0, 1, 2, 3, 4, 5, 6]
    assert find_odd_hole(SimpleGraph.complete(9)) is None


def test_hole_respects_max_len():
    assert find_odd_hole(SimpleGraph.cycle(7), max_len=5) is None


def test_hole_rejects_bad_max_len():
    with pytest.raises(InvalidParameterError):
        find_odd_hole(SimpleGraph.cycle(5), max_len=6)
    with pytest.raises(InvalidParameterError):
        find_odd_hole(SimpleGraph.cycle(5), max_len=3)


def test_hole_budget_is_distinct_from_absence():
    big = SimpleGraph.cycle(6).complement()
    with pytest.raises(BudgetExceededError):
        find_odd_hole(big, budget=1)


def test_antihole_examples():
    assert find_odd_antihole(SimpleGraph.cycle(7).complement()) == [0, 1, 2, 3, 4, 5, 6]
    assert find_odd_antihole(SimpleGraph.complete(8)) is None
    for n in range(2, 11):
        pe = enhanced_power_graph(make_dihedral(n)).graph
        assert find_odd_antihole(pe) is None, n


def test_planted_hole_inside_larger_graph():
    g = SimpleGraph.from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
                                   (5, 6), (6, 7), (0, 5)])
    hole = find_odd_hole(g)
    assert hole is not None and len(hole) == 5


@given(small_graphs(max_n=7))
@settings(max_examples=30, deadline=None)
def test_hole_detection_matches_enumeration(g):
    assert (find_odd_hole(g, max_len=7) is not None) == brute_has_odd_hole(g, 7)


# ---------------------------------------------------------------------------
# neighbourhood partition and quotient
# ---------------------------------------------------------------------------

def test_partition_of_complete_graph_is_single_class():
    part = closed_neighborhood_partition(SimpleGraph.complete(5))
    assert len(part.classes) == 1 and part.classes[0] == (0, 1, 2, 3, 4)


def test_partition_of_dihedral_enhanced_graph():
    for n in (2, 3, 5, 8):
        pe = enhanced_power_graph(make_dihedral(n)).graph
        part = closed_neighborhood_partition(pe)
        assert len(part.classes) == n + 2
        sizes = sorted(len(c) for c in part.classes)
        assert sizes == [1] * (n + 1) + [n - 1]


def test_partition_of_sd16_enhanced_graph():
    g = build_group("semidihedral:2")
    pe = enhanced_power_graph(g).graph
    part = closed_neighborhood_partition(pe)
    # {e}, {a^(2n)}, rotations minus those, 2n reflection singletons,
    # n order-four pairs
    sizes = sorted(len(c) for c in part.classes)
    assert sizes == [1, 1, 1, 1, 1, 1, 2, 2, 6]


def test_partition_classes_are_mutually_consistent(corpus):
    for spec, g in corpus.items():
        if g.order > 64:
            continue
        pe = enhanced_power_graph(g).graph
        part = closed_neighborhood_partition(pe)
        for cls in part.classes:
            base = pe.adj[cls[0]] | 1 << cls[0]
            for v in cls[1:]:
                assert pe.adj[v] | 1 << v == base, spec


def test_quotient_examples():
    assert quotient_graph(SimpleGraph.complete(6),
                          closed_neighborhood_partition(SimpleGraph.complete(6))).n == 1
    pe = enhanced_power_graph(make_dihedral(4)).graph
    q = quotient_graph(pe, closed_neighborhood_partition(pe))
    # star on n+2 classes: the identity class is the centre
    assert q.n == 6
    degs = sorted(q.degree(v) for v in range(q.n))
    assert degs == [1, 1, 1, 1, 1, 5]


def test_quotient_of_sd8n_is_three_clique_over_independent_rest():
    # classes: {e}, {a^2n}, rotations, 2n reflection singletons, n order-four
    # pairs; everything outside {e-hat, a^2n-hat} is pairwise non-adjacent,
    # e-hat is universal, a^2n-hat meets every class except the order-two
    # reflections (whose sole neighbour is the identity), so the clique
    # number is exactly 3
    for n in (2, 3):
        group = build_group(f"semidihedral:{n}")
        pe = enhanced_power_graph(group).graph
        part = closed_neighborhood_partition(pe)
        q = quotient_graph(pe, part)
        assert q.n == 3 + 2 * n + n
        e_hat = part.class_of[0]
        a2n_hat = part.class_of[group.power(1, 2 * n)]
        assert q.degree(e_hat) == q.n - 1
        reflections = {part.class_of[4 * n + 2 * i] for i in range(2 * n)}
        assert set(q.neighbors(a2n_hat)) == set(range(q.n)) - reflections - {a2n_hat}
        rest = [v for v in range(q.n) if v not in (e_hat, a2n_hat)]
        assert all(not q.has_edge(u, v) for u in rest for v in rest if u < v), n
        assert max_clique(q) == 3


def test_quotient_rejects_foreign_partition():
    part = closed_neighborhood_partition(SimpleGraph.cycle(5))
    with pytest.raises(InvalidParameterError):
        quotient_graph(SimpleGraph.complete(5), part)
    with pytest.raises(InvalidParameterError):
        quotient_graph(SimpleGraph.complete(6), part)


def test_quotient_adjacency_is_well_defined(corpus):
    # any representative gives the same quotient edge
    for spec, g in corpus.items():
        if g.order > 40:
            continue
        pe = enhanced_power_graph(g).graph
        part = closed_neighborhood_partition(pe)
        for i, ci in enumerate(part.classes):
            for j in range(i + 1, len(part.classes)):
                cj = part.classes[j]
                answers = {pe.has_edge(u, v) for u in ci for v in cj}
                assert len(answers) == 1, spec


# ---------------------------------------------------------------------------
# strong metric dimension
# ---------------------------------------------------------------------------

def test_sdim_examples():
    for n in (1, 2, 5, 9):
        assert strong_metric_dimension(SimpleGraph.complete(n)) == n - 1
    klein = enhanced_power_graph(make_abelian([2, 2])).graph
    assert strong_metric_dimension(klein) == 2
    sd16 = enhanced_power_graph(build_group("semidihedral:2")).graph
    assert strong_metric_dimension(sd16) == 13


def test_sdim_rejects_large_diameter():
    with pytest.raises(UnsupportedDiameterError):
        strong_metric_dimension(path_graph(5))
    with pytest.raises(UnsupportedDiameterError):
        strong_metric_dimension(SimpleGraph(2))


def test_strong_resolving_oracle_examples():
    assert strong_resolving_oracle(SimpleGraph.complete(3)) == 2
    assert strong_resolving_oracle(path_graph(5)) == 1
    klein = enhanced_power_graph(make_abelian([2, 2])).graph
    assert strong_resolving_oracle(klein) == 2


def test_strong_resolving_oracle_size_limit():
    with pytest.raises(BudgetExceededError):
        strong_resolving_oracle(SimpleGraph(13))


def test_sdim_agrees_with_exhaustive_oracle_on_small_corpus(corpus):
    for spec, g in corpus.items():
        if not 2 <= g.order <= 12:
            continue
        pe = enhanced_power_graph(g).graph
        assert strong_metric_dimension(pe) == strong_resolving_oracle(pe), spec


@given(small_graphs(min_n=2, max_n=8))
@settings(max_examples=40, deadline=None)
def test_sdim_quotient_method_matches_oracle_on_low_diameter_graphs(g):
    from epgraph.graphs import diameter

    if diameter(g) > 2:
        return
    assert strong_metric_dimension(g) == strong_resolving_oracle(g)
