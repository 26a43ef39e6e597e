import itertools

import pytest
from hypothesis import given, settings

from conftest import small_digraphs
from homquery import algorithms as alg
from homquery.analysis import gamma
from homquery.catalog import enumerate_digraphs, enumerate_digraphs_upto
from homquery.datalog import NONZERO_NET_CYCLE_PROGRAM, evaluate, parse_program
from homquery.homs import BOOLEAN, COUNT, hom_count
from homquery.oracle import has_directed_cycle, oracle_hom_count
from homquery.query import (
    LEFT,
    RIGHT,
    StrategyContractError,
    run_adaptive,
    run_non_adaptive,
)
from homquery.registry import (
    DEFAULT_UNARY_CLASS,
    REGISTRY,
    UNARY_PQ_SIG,
    run_registered,
)
from homquery.structures import (
    GuardExceeded,
    Signature,
    digraph,
    directed_cycle,
    directed_path,
    disjoint_union,
    isomorphic,
    make_structure,
    scalar_multiple,
)


def test_cycle_detector_2query_on_catalog():
    for s in enumerate_digraphs_upto(3):
        report = run_adaptive(alg.cycle_detector_2query(), s, LEFT)
        assert report.query_count == 2
        assert report.verdict == has_directed_cycle(s)


def test_lovasz_universal_decider():
    strategy = alg.lovasz_universal_decider(alg.even_power_cycle_class())
    for s in enumerate_digraphs_upto(2):
        report = run_adaptive(strategy, s, LEFT, max_steps=20)
        assert report.verdict == alg.even_power_cycle_class()(s)
    with pytest.raises(GuardExceeded):
        run_adaptive(strategy, directed_cycle(4), LEFT, max_steps=200)


def test_identify_by_hom_vector_roundtrip():
    probes = enumerate_digraphs_upto(2)
    for h in enumerate_digraphs(2).representatives:
        assert alg.identify_by_hom_vector(alg.hom_vector(probes, h), 2) == h
    with pytest.raises(StrategyContractError):
        alg.identify_by_hom_vector((99,) * len(probes), 2)


def test_dn_family():
    spec = alg.CycleFamilySpec(3, alg.EVEN)
    members = alg.dn_family(spec)
    assert len(members) == 2  # m = 0, 2
    assert isomorphic(members[0], scalar_multiple(8, directed_cycle(1)))
    assert isomorphic(members[1], scalar_multiple(2, directed_cycle(4)), guard=8)
    odd = alg.dn_family(alg.CycleFamilySpec(3, alg.ODD))
    assert len(odd) == 2  # m = 1, 3
    with pytest.raises(ValueError):
        alg.CycleFamilySpec(0, alg.EVEN)
    with pytest.raises(ValueError):
        alg.CycleFamilySpec(2, "both")


def test_dn_separator_and_binsearch_agree():
    for n in (1, 2, 3):
        sep = alg.dn_nonadaptive_separator(n)
        assert len(sep.queries) == n
        search = alg.dn_adaptive_binary_search(n)
        for m in range(n + 1):
            member = scalar_multiple(2 ** (n - m), directed_cycle(2 ** m))
            expected = (m % 2 == 0)
            assert run_non_adaptive(sep, member).verdict == expected
            report = run_adaptive(search, member, LEFT, max_steps=None,
                                  use_default_cap=False)
            assert report.verdict == expected
            assert report.query_count <= n.bit_length()


def test_even_power_cycle_class():
    member = alg.even_power_cycle_class()
    assert member(directed_cycle(1))
    assert member(directed_cycle(4))
    assert member(directed_cycle(16))
    assert not member(directed_cycle(2))
    assert not member(directed_cycle(3))
    assert member(directed_path(5))  # cycle-free counts as a member
    assert not member(disjoint_union(directed_cycle(4), directed_cycle(2)))


def test_adaptive_not_better_instance():
    nonadaptive, structures = alg.adaptive_not_better_instance(1, (2, 3))
    assert len(nonadaptive.queries) == 1
    assert len(structures) == 2
    # accepts exactly the first k structures of the family
    for j, s in enumerate(structures):
        assert run_non_adaptive(nonadaptive, s).verdict == (j < 1)
    with pytest.raises(ValueError):
        alg.adaptive_not_better_instance(1, (2, 2))
    with pytest.raises(GuardExceeded):
        alg.adaptive_not_better_instance(2, (2, 3, 5, 7), guard=100)


def test_unary_reconstruction():
    sig = UNARY_PQ_SIG
    subsets = alg.predicate_subsets(sig)
    assert subsets[0] == () and set(subsets[-1]) == {"P", "Q"}
    # element 0: P only, element 1: P and Q, element 2: neither
    s = make_structure(sig, 3, {"P": {(0,), (1,)}, "Q": {(1,)}})
    answers = tuple(hom_count(alg.unary_singleton(sig, sub), s) for sub in subsets)
    exact = alg.reconstruct_unary_counts(sig, answers)
    assert exact[()] == 1 and exact[("P",)] == 1
    assert sum(exact.values()) == 3
    rebuilt = alg.reconstruct_unary_structure(sig, answers)
    assert isomorphic(rebuilt, s)
    with pytest.raises(StrategyContractError):
        alg.reconstruct_unary_structure(sig, (0, 5, 0, 0))


def test_unary_full_decider_decides_everything():
    sig = UNARY_PQ_SIG
    decider = alg.unary_full_decider(sig, DEFAULT_UNARY_CLASS)
    assert len(decider.queries) == 4
    # every {P,Q}-structure on <= 2 elements
    for n in (1, 2):
        cells = list(itertools.product(range(n)))
        for p_bits in range(2 ** n):
            for q_bits in range(2 ** n):
                s = make_structure(sig, n, {
                    "P": {(i,) for i in range(n) if p_bits >> i & 1},
                    "Q": {(i,) for i in range(n) if q_bits >> i & 1}})
                assert run_non_adaptive(decider, s).verdict == DEFAULT_UNARY_CLASS(s)
    with pytest.raises(ValueError):
        alg.unary_full_decider(Signature((("R", 2),)), DEFAULT_UNARY_CLASS)


def test_brute_force_distinguisher():
    for n in (1, 2):
        f = alg.brute_force_distinguisher(n)
        classes = enumerate_digraphs(n).representatives
        counts = [hom_count(h, f) for h in classes]
        assert len(set(counts)) == len(counts)
    with pytest.raises(GuardExceeded):
        alg.brute_force_distinguisher(3)


def test_right_two_query_decider():
    strategy = alg.right_two_query_decider(alg.even_power_cycle_class())
    for s in enumerate_digraphs_upto(2):
        report = run_adaptive(strategy, s, RIGHT)
        assert report.query_count == 2
        assert report.verdict == alg.even_power_cycle_class()(s)


def test_unbounded_boolean_cycle_detector():
    strategy = alg.unbounded_boolean_cycle_detector()
    for s in enumerate_digraphs_upto(3):
        report = run_adaptive(strategy, s, LEFT, BOOLEAN,
                              max_steps=2 * (s.domain_size + 1))
        assert report.verdict == has_directed_cycle(s)
        assert report.query_count <= 2 * (s.domain_size + 1)


def test_unbounded_boolean_netcycle_detector():
    program = parse_program(NONZERO_NET_CYCLE_PROGRAM)
    strategy = alg.unbounded_boolean_nonzero_net_cycle_detector()
    for s in enumerate_digraphs_upto(3):
        cap = 2 * max(s.domain_size + 1, gamma(s) + 1)
        report = run_adaptive(strategy, s, RIGHT, BOOLEAN, max_steps=cap)
        assert report.verdict == (gamma(s) != 0)
        assert report.verdict == evaluate(program, s)


def test_registry_entries_run():
    c3 = directed_cycle(3)
    assert run_registered("cycle2q", c3).verdict
    assert not run_registered("cycle2q", directed_path(2)).verdict
    assert run_registered("lovasz", c3).verdict
    assert run_registered("ub-bool-cycle", c3).verdict
    assert run_registered("ub-bool-netcycle", c3).verdict
    assert not run_registered("ub-bool-netcycle", directed_cycle(2) if False
                              else digraph(2, {(0, 1)})).verdict
    member = scalar_multiple(2, directed_cycle(2))
    assert not run_registered("dn-sep", member, n=2).verdict
    assert not run_registered("dn-binsearch", member, n=2).verdict
    assert run_registered("right2q", directed_cycle(1)).verdict
    pq = make_structure(UNARY_PQ_SIG, 2, {"P": {(0,), (1,)}, "Q": {(1,)}})
    assert run_registered("unary-full", pq).verdict
    assert set(REGISTRY) == {"cycle2q", "lovasz", "dn-sep", "dn-binsearch",
                             "unary-full", "right2q", "ub-bool-cycle",
                             "ub-bool-netcycle"}


@settings(max_examples=60, deadline=None)
@given(small_digraphs(max_vertices=3))
def test_detectors_agree_with_oracle(s):
    assert run_registered("cycle2q", s).verdict == has_directed_cycle(s)
    assert run_registered("ub-bool-cycle", s).verdict == has_directed_cycle(s)
    assert run_registered("ub-bool-netcycle", s).verdict == (gamma(s) != 0)
