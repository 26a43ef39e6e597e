import math

import pytest
from hypothesis import given, settings

from conftest import small_digraphs
from homquery.analysis import component_count, gamma
from homquery.homs import (
    BOOLEAN,
    COUNT,
    WorkBudgetExceeded,
    find_hom,
    hom_count,
    hom_equivalent,
    hom_exists,
    hom_into_cycle_union_formula,
    hom_into_nary_cycle_union_formula,
    hom_value,
    nu2,
)
from homquery.structures import (
    DIGRAPH_SIG,
    Signature,
    complete_pair,
    complete_singleton,
    digraph,
    direct_product,
    directed_cycle,
    directed_path,
    disjoint_union,
    make_structure,
    n_ary_cycle,
    scalar_multiple,
)


def test_hom_count_frozen_values():
    c3 = directed_cycle(3)
    assert hom_count(c3, c3) == 3
    assert hom_count(directed_path(2), c3) == 3
    assert hom_count(c3, directed_cycle(6)) == 0
    assert hom_count(directed_cycle(6), c3) == 3
    assert hom_count(directed_path(1), digraph(3, {(0, 1), (1, 2), (2, 0)})) == 3
    # hom(H, complete pair) = 2^|H|
    for h in (directed_path(3), directed_cycle(4), digraph(2, set())):
        assert hom_count(h, complete_pair(DIGRAPH_SIG)) == 2 ** h.domain_size
    # the edgeless singleton counts nothing unless the target has a vertex
    assert hom_count(digraph(1, set()), directed_cycle(5)) == 5


def test_hom_count_signature_mismatch():
    with pytest.raises(ValueError):
        hom_count(directed_cycle(2), complete_singleton(Signature((("P", 1),))))


def test_find_hom_returns_valid_witness():
    w = find_hom(directed_cycle(6), directed_cycle(3))
    assert w is not None
    for u, v in directed_cycle(6).relations["R"]:
        assert (w[u], w[v]) in directed_cycle(3).relations["R"]
    assert find_hom(directed_cycle(3), directed_cycle(6)) is None


def test_hom_exists_and_equivalent():
    assert hom_exists(directed_path(4), directed_cycle(3))
    assert not hom_exists(directed_cycle(1), directed_cycle(2))
    assert hom_equivalent(directed_cycle(3),
                          disjoint_union(directed_cycle(3), directed_cycle(6)))
    assert not hom_equivalent(directed_cycle(3), directed_cycle(4))
    assert hom_equivalent(directed_path(1), disjoint_union(directed_path(1),
                                                           directed_path(1)))


def test_hom_value_semirings():
    a, b = directed_path(2), directed_cycle(3)
    assert hom_value(a, b, COUNT) == 3
    assert hom_value(a, b, BOOLEAN) == 1
    assert hom_value(directed_cycle(3), directed_cycle(2), BOOLEAN) == 0
    with pytest.raises(ValueError):
        hom_value(a, b, "tropical")


def test_budget_exhaustion():
    star = digraph(7, {(0, i) for i in range(1, 7)})
    target = complete_pair(DIGRAPH_SIG)
    with pytest.raises(WorkBudgetExceeded):
        hom_count(star, target, budget=10)
    # unlimited budget allowed explicitly
    assert hom_count(star, target, budget=None) == 2 ** 7


@settings(max_examples=100, deadline=None)
@given(small_digraphs(max_vertices=3), small_digraphs(max_vertices=3),
       small_digraphs(max_vertices=3))
def test_hom_count_sum_and_product_laws(a, b, t):
    # counting from a disjoint union multiplies; into a product multiplies
    assert hom_count(disjoint_union(a, b), t) == hom_count(a, t) * hom_count(b, t)
    assert hom_count(a, direct_product(b, t)) == hom_count(a, b) * hom_count(a, t)


@settings(max_examples=100, deadline=None)
@given(small_digraphs(max_vertices=3))
def test_hom_count_into_scalar_multiple(a):
    # each component picks a copy independently
    c = component_count(a)
    t = directed_cycle(3)
    assert hom_count(a, scalar_multiple(2, t)) == (2 ** c) * hom_count(a, t)


def test_cycle_union_formula_frozen_values():
    # hom(C_a, m*C_n) = m*n if n | a else 0
    assert hom_into_cycle_union_formula(directed_cycle(6), 1, 3) == 3
    assert hom_into_cycle_union_formula(directed_cycle(6), 2, 3) == 6
    assert hom_into_cycle_union_formula(directed_cycle(5), 1, 3) == 0
    # paths have gamma 0, every n divides it
    assert hom_into_cycle_union_formula(directed_path(2), 2, 3) == 6
    two_comps = disjoint_union(directed_cycle(4), directed_cycle(2))
    assert hom_into_cycle_union_formula(two_comps, 1, 2) == 4
    with pytest.raises(ValueError):
        hom_into_cycle_union_formula(directed_cycle(3), 0, 3)
    with pytest.raises(ValueError):
        hom_into_cycle_union_formula(directed_cycle(3), 1, 0)


@settings(max_examples=150, deadline=None)
@given(small_digraphs(max_vertices=4))
def test_cycle_union_formula_matches_engine(a):
    for m in (1, 2):
        for n in (1, 2, 3):
            assert hom_into_cycle_union_formula(a, m, n) == \
                hom_count(a, scalar_multiple(m, directed_cycle(n)))


def test_nary_cycle_union_formula():
    a = n_ary_cycle(6, 3)
    assert hom_into_nary_cycle_union_formula(a, 1, 3) == \
        hom_count(a, n_ary_cycle(3, 3))
    assert hom_into_nary_cycle_union_formula(a, 2, 4) == \
        hom_count(a, scalar_multiple(2, n_ary_cycle(4, 3)))
    assert hom_into_nary_cycle_union_formula(n_ary_cycle(3, 3), 1, 4) == 0
    # arity 1: gamma degenerates to 0, so the count is always (m*d)^components
    unary = make_structure(Signature((("R", 1),)), 2, {"R": {(0,), (1,)}})
    assert hom_into_nary_cycle_union_formula(unary, 1, 2) == \
        hom_count(unary, n_ary_cycle(2, 1))
    with pytest.raises(ValueError):
        two_rel = Signature((("R", 2), ("S", 2)))
        hom_into_nary_cycle_union_formula(
            make_structure(two_rel, 1, {"R": set(), "S": set()}), 1, 2)


def test_nu2():
    assert nu2(0) == math.inf
    assert nu2(1) == 0
    assert nu2(12) == 2
    assert nu2(2 ** 9) == 9
    assert nu2(96) == 5


def test_gamma_divisibility_governs_cycle_targets():
    for a in (directed_cycle(4), directed_path(3),
              disjoint_union(directed_cycle(2), directed_cycle(4))):
        g = gamma(a)
        for n in range(1, 6):
            expected = (g % n == 0)
            assert hom_exists(a, directed_cycle(n)) == expected
