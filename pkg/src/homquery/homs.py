"""
Homomorphism counting and existence between finite relational structures,
plus the closed-form counts into disjoint unions of (n-ary) cycles.

The general counter is exact (Python integers) and backtracks over the
source elements in a connectivity-first order, multiplying counts across
the source's components.  The closed forms never run the backtracking;
property tests compare the two code paths.
"""

from __future__ import annotations

import math
from collections import deque

from .analysis import component_count, gamma, star_transform
from .structures import Structure


class WorkBudgetExceeded(Exception):
    "The backtracking search hit its node budget; this is never a count."


COUNT = "count"
BOOLEAN = "boolean"

DEFAULT_BUDGET = 10_000_000


def _component_plan(a: Structure, comp: list[int]):
    """
    BFS order over the component's elements (adjacency = shared facts),
    and for each order position the facts that become fully assigned there.
    """
    comp_set = set(comp)
    adjacency: dict[int, set[int]] = {e: set() for e in comp}
    comp_facts = []
    for name, t in a.facts():
        if t and t[0] in comp_set:
            comp_facts.append((name, t))
            for e in t:
                adjacency[e].update(t)
    order = []
    seen: set[int] = set()
    for start in comp:
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(adjacency[v]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    position = {e: i for i, e in enumerate(order)}
    checks: list[list[tuple[str, tuple[int, ...]]]] = [[] for _ in order]
    for name, t in comp_facts:
        checks[max(position[e] for e in t)].append((name, t))
    return order, checks


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def spend(self):
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise WorkBudgetExceeded(f"search exceeded {self.limit} nodes")


def _component_search(order, checks, b: Structure, budget: _Budget, limit):
    """
    Count homomorphisms of one source component into b; with limit set,
    stop after that many and return found witnesses instead of the count.
    """
    assignment: dict[int, int] = {}
    found: list[dict[int, int]] = []
    count = 0

    def extend(i) -> bool:
        nonlocal count
        if i == len(order):
            count += 1
            if limit is not None:
                found.append(dict(assignment))
                return len(found) >= limit
            return False
        e = order[i]
        for image in b.domain:
            budget.spend()
            assignment[e] = image
            ok = all(tuple(assignment[x] for x in t) in b.relations[name]
                     for name, t in checks[i])
            if ok and extend(i + 1):
                return True
        del assignment[order[i]]
        return False

    extend(0)
    return count, found


def _require_same_signature(a: Structure, b: Structure):
    if a.signature != b.signature:
        raise ValueError("signature mismatch")


def hom_count(a: Structure, b: Structure, budget: int | None = DEFAULT_BUDGET) -> int:
    "Exact number of homomorphisms a -> b."
    from .analysis import element_components

    _require_same_signature(a, b)
    state = _Budget(budget)
    total = 1
    for comp in element_components(a):
        order, checks = _component_plan(a, comp)
        count, _ = _component_search(order, checks, b, state, limit=None)
        if count == 0:
            return 0
        total *= count
    return total


def find_hom(a: Structure, b: Structure, budget: int | None = DEFAULT_BUDGET):
    "One homomorphism a -> b as a dict, or None."
    from .analysis import element_components

    _require_same_signature(a, b)
    state = _Budget(budget)
    witness: dict[int, int] = {}
    for comp in element_components(a):
        order, checks = _component_plan(a, comp)
        _, found = _component_search(order, checks, b, state, limit=1)
        if not found:
            return None
        witness.update(found[0])
    return witness


def hom_exists(a: Structure, b: Structure, budget: int | None = DEFAULT_BUDGET) -> bool:
    return find_hom(a, b, budget=budget) is not None


def hom_equivalent(a: Structure, b: Structure, budget: int | None = DEFAULT_BUDGET) -> bool:
    return hom_exists(a, b, budget=budget) and hom_exists(b, a, budget=budget)


def hom_value(a: Structure, b: Structure, semiring: str,
              budget: int | None = DEFAULT_BUDGET) -> int:
    "hom count under COUNT, 0/1 existence under BOOLEAN."
    if semiring == COUNT:
        return hom_count(a, b, budget=budget)
    if semiring == BOOLEAN:
        return 1 if hom_exists(a, b, budget=budget) else 0
    raise ValueError(f"unknown semiring {semiring!r}")


def hom_into_cycle_union_formula(a: Structure, m: int, n: int) -> int:
    """
    hom(a, m copies of the directed n-cycle), in closed form:
    0 unless n divides gamma(a), else (m*n)^(number of components of a).
    """
    if not a.is_digraph():
        raise ValueError("closed form applies to digraphs")
    if m < 1 or n < 1:
        raise ValueError("m and n must be >= 1")
    if gamma(a) % n != 0:
        return 0
    return (m * n) ** component_count(a)


def hom_into_nary_cycle_union_formula(a: Structure, m: int, d: int) -> int:
    """
    hom(a, m copies of the n-ary cycle of length d) for a one-relation
    structure a: 0 unless d divides gamma of a's star transform, else
    (m*d)^(components of a).  Arity 1 degenerates to an edgeless star
    transform (gamma 0), matching direct counting.
    """
    if len(a.signature.relations) != 1:
        raise ValueError("closed form needs a one-relation signature")
    if m < 1 or d < 1:
        raise ValueError("m and d must be >= 1")
    arity = a.signature.relations[0][1]
    g = 0 if arity == 1 else gamma(star_transform(a))
    if g % d != 0:
        return 0
    return (m * d) ** component_count(a)


def nu2(k: int):
    "2-adic valuation; nu2(0) is +infinity."
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return math.inf
    return (k & -k).bit_length() - 1
