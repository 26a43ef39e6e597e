"""
Concrete query algorithms: cycle detection in two counting queries, the
universal decide-by-identification strategy, the power-of-two cycle
family separators, the k-vs-(k-1) query construction, unary-signature
decision by inclusion-exclusion, the right two-query scheme, and the two
unbounded Boolean detectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .catalog import enumerate_digraphs, enumerate_digraphs_upto
from .homs import hom_count, hom_into_cycle_union_formula
from .query import (
    LEFT,
    RIGHT,
    Halt,
    NonAdaptiveAlgorithm,
    Query,
    Strategy,
    StrategyContractError,
    Transcript,
)
from .structures import (
    DIGRAPH_SIG,
    GuardExceeded,
    Signature,
    Structure,
    digraph,
    directed_cycle,
    directed_path,
    complete_pair,
    make_structure,
    scalar_multiple,
)


@dataclass(frozen=True)
class ClassPredicate:
    name: str
    membership: Callable[[Structure], bool]

    def __call__(self, s: Structure) -> bool:
        return bool(self.membership(s))


EDGELESS_SINGLETON = digraph(1, set())


def cycle_detector_2query() -> Strategy:
    """
    Left counting strategy: learn |A| from the edgeless singleton, then
    query the directed path of length |A|; a walk that long must repeat
    a vertex, so the answer is positive iff A has a directed cycle.
    """
    def strategy(t: Transcript):
        if len(t) == 0:
            return Query(EDGELESS_SINGLETON)
        if len(t) == 1:
            return Query(directed_path(t[0]))
        return Halt(t[1] > 0)
    return strategy


def hom_vector(probes, target: Structure) -> tuple[int, ...]:
    return tuple(hom_count(p, target) for p in probes)


@lru_cache(maxsize=None)
def _candidate_vectors(size: int) -> dict:
    probes = enumerate_digraphs_upto(size)
    reps = enumerate_digraphs(size).representatives
    vectors = {hom_vector(probes, h): h for h in reps}
    if len(vectors) != len(reps):
        raise StrategyContractError("hom vectors failed to separate iso-classes")
    return vectors


def identify_by_hom_vector(answers, size: int):
    "The unique iso-class of the given size whose hom vector matches."
    match = _candidate_vectors(size).get(tuple(answers))
    if match is None:
        raise StrategyContractError("no candidate matches the hom vector")
    return match


def lovasz_universal_decider(predicate: ClassPredicate, size_cap: int = 3) -> Strategy:
    """
    Left counting strategy: query the input's size, then hom counts from
    every iso-class of digraphs up to that size (frozen enumeration
    order); the answer vector pins the input down up to isomorphism, and
    the verdict is the class predicate on the identified candidate.
    """
    def strategy(t: Transcript):
        if len(t) == 0:
            return Query(EDGELESS_SINGLETON)
        n = t[0]
        if n > size_cap:
            raise GuardExceeded(f"input size {n} > cap {size_cap}")
        probes = enumerate_digraphs_upto(n)
        if len(t) - 1 < len(probes):
            return Query(probes[len(t) - 1])
        return Halt(predicate(identify_by_hom_vector(t[1:], n)))
    return strategy


EVEN = "even"
ODD = "odd"


@dataclass(frozen=True)
class CycleFamilySpec:
    n: int
    parity: str

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.parity not in (EVEN, ODD):
            raise ValueError("parity must be even or odd")


def dn_family(spec: CycleFamilySpec) -> tuple[Structure, ...]:
    "The structures (2^(n-m) copies of C_{2^m}) for m <= n of the given parity."
    wanted = 0 if spec.parity == EVEN else 1
    return tuple(scalar_multiple(2 ** (spec.n - m), directed_cycle(2 ** m))
                 for m in range(spec.n + 1) if m % 2 == wanted)


def _dn_answer_vector(n: int, m: int) -> tuple[int, ...]:
    # answers of queries C_{2^r}, r < n, on 2^(n-m) copies of C_{2^m}
    return tuple(
        hom_into_cycle_union_formula(directed_cycle(2 ** r), 2 ** (n - m), 2 ** m)
        for r in range(n))


def dn_nonadaptive_separator(n: int) -> NonAdaptiveAlgorithm:
    """
    Left counting algorithm with queries C_1, C_2, ..., C_{2^(n-1)}
    accepting exactly the even-parity family members' answer vectors.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    queries = tuple(directed_cycle(2 ** r) for r in range(n))
    accept = frozenset(_dn_answer_vector(n, m) for m in range(0, n + 1, 2))
    return NonAdaptiveAlgorithm(LEFT, queries, accept)


def dn_adaptive_binary_search(n: int) -> Strategy:
    """
    Promise strategy for inputs of the form 2^(n-m) copies of C_{2^m}:
    hom(C_{2^r}, input) is nonzero iff m <= r, so binary search over
    m in [0, n] finds m in ceil(log2(n+1)) queries; accept iff m even.
    """
    if n < 1:
        raise ValueError("n must be >= 1")

    def strategy(t: Transcript):
        lo, hi = 0, n
        for answer in t:
            mid = (lo + hi) // 2
            if answer > 0:
                hi = mid
            else:
                lo = mid + 1
        if lo == hi:
            return Halt(lo % 2 == 0)
        mid = (lo + hi) // 2
        return Query(directed_cycle(2 ** mid))
    return strategy


def even_power_cycle_class() -> ClassPredicate:
    """
    Digraphs whose shortest directed cycle length is a power of four;
    cycle-free digraphs are members (vacuous reading).
    """
    from .oracle import shortest_directed_cycle

    def member(s: Structure) -> bool:
        length = shortest_directed_cycle(s)
        if length is None:
            return True
        while length % 4 == 0:
            length //= 4
        return length == 1
    return ClassPredicate("shortest-cycle-is-power-of-four", member)


def adaptive_not_better_instance(k: int, primes, guard: int = 250):
    """
    For 2k distinct primes p_1..p_2k with product P: query structures
    F_i = p_i copies of C_{P/p_i} (i <= k) and test structures
    p_j copies of C_{P/p_j} (all j).  hom(F_i, test_j) is nonzero iff
    i = j, so the acceptance set (computed answer vectors of the first k
    test structures) accepts test_j exactly when j <= k.
    """
    primes = tuple(primes)
    if len(primes) != 2 * k or len(set(primes)) != 2 * k:
        raise ValueError("need 2k distinct primes")
    product = math.prod(primes)
    if product > guard:
        raise GuardExceeded(f"instance size {product} > {guard}")
    structures = tuple(scalar_multiple(p, directed_cycle(product // p))
                       for p in primes)
    queries = structures[:k]

    def vector(j: int) -> tuple[int, ...]:
        return tuple(
            hom_into_cycle_union_formula(queries[i], primes[j], product // primes[j])
            for i in range(k))

    accept = frozenset(vector(j) for j in range(k))
    return NonAdaptiveAlgorithm(LEFT, queries, accept), structures


def predicate_subsets(sig: Signature) -> tuple[tuple[str, ...], ...]:
    "All subsets of a unary signature's predicates, in frozen bitmask order."
    names = sig.names
    return tuple(
        tuple(name for i, name in enumerate(names) if mask >> i & 1)
        for mask in range(1 << len(names)))


def unary_singleton(sig: Signature, subset) -> Structure:
    "One element satisfying exactly the predicates in subset."
    subset = set(subset)
    return make_structure(sig, 1, {name: ({(0,)} if name in subset else set())
                                   for name in sig.names})


def reconstruct_unary_counts(sig: Signature, answers) -> dict[tuple[str, ...], int]:
    """
    From answers a_S = #elements satisfying at least the predicates in S,
    recover by inclusion-exclusion the count of elements satisfying each
    subset exactly.
    """
    subsets = predicate_subsets(sig)
    a = dict(zip(subsets, answers))
    exact = {}
    for t_set in subsets:
        t = set(t_set)
        value = 0
        for s_set in subsets:
            s = set(s_set)
            if s >= t:
                value += (-1) ** (len(s) - len(t)) * a[s_set]
        exact[t_set] = value
    return exact


def reconstruct_unary_structure(sig: Signature, answers) -> Structure:
    exact = reconstruct_unary_counts(sig, answers)
    if any(v < 0 for v in exact.values()):
        raise StrategyContractError("inconsistent unary answer vector")
    total = sum(exact.values())
    rels: dict[str, set] = {name: set() for name in sig.names}
    element = 0
    for subset in predicate_subsets(sig):
        for _ in range(exact[subset]):
            for name in subset:
                rels[name].add((element,))
            element += 1
    return make_structure(sig, max(total, 1), rels)


def unary_full_decider(sig: Signature, predicate: ClassPredicate) -> NonAdaptiveAlgorithm:
    """
    For a unary signature with k predicates: the 2^k singleton queries
    F_S; hom(F_S, A) counts elements satisfying at least S, and the exact
    per-combination counts reconstructed from those answers determine A
    up to isomorphism, so any class is decided.
    """
    if any(arity != 1 for _, arity in sig.relations):
        raise ValueError("signature must be unary")
    queries = tuple(unary_singleton(sig, subset) for subset in predicate_subsets(sig))

    def accept(answers) -> bool:
        return predicate(reconstruct_unary_structure(sig, answers))

    return NonAdaptiveAlgorithm(LEFT, queries, accept)


@lru_cache(maxsize=None)
def brute_force_distinguisher(n: int, sig: Signature = DIGRAPH_SIG,
                              search_cap: int = 4, guard: int = 2) -> Structure:
    """
    First digraph F in enumeration order whose hom counts hom(H, F) are
    pairwise distinct over the iso-classes H of size n.
    """
    if sig != DIGRAPH_SIG:
        raise ValueError("only digraph signatures are supported")
    if n > guard:
        raise GuardExceeded(f"distinguisher guard: n = {n} > {guard}")
    classes = enumerate_digraphs(n).representatives
    for candidate in enumerate_digraphs_upto(search_cap):
        counts = [hom_count(h, candidate) for h in classes]
        if len(set(counts)) == len(counts):
            return candidate
    raise GuardExceeded(f"no distinguisher found up to size {search_cap}")


def right_two_query_decider(predicate: ClassPredicate,
                            distinguisher: Callable[[int, Signature], Structure] = None,
                            size_cap: int = 2) -> Strategy:
    """
    Right counting strategy: hom(input, complete pair) = 2^|input|
    recovers the size; a second query against a structure whose hom
    counts separate all iso-classes of that size identifies the input.
    """
    if distinguisher is None:
        distinguisher = lambda n, sig: brute_force_distinguisher(n, sig)

    def strategy(t: Transcript):
        if len(t) == 0:
            return Query(complete_pair(DIGRAPH_SIG))
        answer = t[0]
        if answer <= 0 or answer & (answer - 1):
            raise StrategyContractError(f"first answer {answer} is not a power of two")
        n = answer.bit_length() - 1
        if n > size_cap:
            raise GuardExceeded(f"input size {n} > cap {size_cap}")
        separator = distinguisher(n, DIGRAPH_SIG)
        if len(t) == 1:
            return Query(separator)
        matches = [h for h in enumerate_digraphs(n).representatives
                   if hom_count(h, separator) == t[1]]
        if len(matches) != 1:
            raise StrategyContractError("distinguisher failed to identify the input")
        return Halt(predicate(matches[0]))
    return strategy


def unbounded_boolean_cycle_detector() -> Strategy:
    """
    Left Boolean strategy: round r queries P_r then C_r; halt NO when a
    path answer is 0 (no walk that long, so no cycle), halt YES when a
    cycle answer is 1.  Halts within 2(|A|+1) queries.
    """
    def strategy(t: Transcript):
        if len(t) % 2 == 0:
            if t and t[-1] == 1:
                return Halt(True)
            return Query(directed_path(len(t) // 2 + 1))
        if t[-1] == 0:
            return Halt(False)
        return Query(directed_cycle((len(t) + 1) // 2))
    return strategy


def unbounded_boolean_nonzero_net_cycle_detector() -> Strategy:
    """
    Right Boolean strategy: round r queries P_r then C_r; halt NO when
    the input maps into a path (no positive-net-length oriented cycle),
    halt YES when it fails to map into some cycle.  Halts within
    max(|A|-1, gamma(A)+1) rounds.
    """
    def strategy(t: Transcript):
        if len(t) % 2 == 0:
            if t and t[-1] == 0:
                return Halt(True)
            return Query(directed_path(len(t) // 2 + 1))
        if t[-1] == 1:
            return Halt(False)
        return Query(directed_cycle((len(t) + 1) // 2))
    return strategy
