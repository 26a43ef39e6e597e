"""
Structural parameters: incidence multigraph, component count,
Berge-acyclicity, the cycle-gcd parameter gamma, the star transform
of an n-ary relation, cores, and acyclic-up-to-hom-equivalence.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .structures import (
    GuardExceeded,
    Signature,
    Structure,
    canonical_form,
    edges_of,
    make_structure,
)


@dataclass(frozen=True)
class IncidenceMultigraph:
    """
    Bipartite multigraph of elements vs facts.  Facts are (relation, tuple)
    pairs; the edge multiplicity between element a and fact f is the number
    of positions of f's tuple equal to a.
    """
    element_nodes: tuple[int, ...]
    fact_nodes: tuple[tuple[str, tuple[int, ...]], ...]
    # edges[fact index] = the fact's tuple, one edge per position
    edges: tuple[tuple[int, ...], ...]

    def multiplicity(self, element: int, fact_index: int) -> int:
        return sum(1 for e in self.edges[fact_index] if e == element)


def incidence_multigraph(s: Structure) -> IncidenceMultigraph:
    facts = tuple(s.facts())
    return IncidenceMultigraph(
        element_nodes=tuple(s.domain),
        fact_nodes=facts,
        edges=tuple(t for _, t in facts),
    )


def element_components(s: Structure) -> list[list[int]]:
    "Partition of the domain by connectivity in the incidence multigraph."
    adjacency: dict[int, set[int]] = {e: set() for e in s.domain}
    for _, t in s.facts():
        for a in t:
            adjacency[a].update(t)
    seen: set[int] = set()
    components = []
    for start in s.domain:
        if start in seen:
            continue
        comp = []
        queue = deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        components.append(sorted(comp))
    return components


def component_count(s: Structure) -> int:
    return len(element_components(s))


def is_berge_acyclic(s: Structure) -> bool:
    """
    True iff the incidence multigraph has no cycle.  A repeated element
    within one fact gives parallel edges, which already form a cycle, so
    after excluding those it suffices that the simple bipartite graph is
    a forest: edge count == node count - component count.
    """
    inc = incidence_multigraph(s)
    simple_edges = 0
    for t in inc.edges:
        if len(set(t)) != len(t):
            return False
        simple_edges += len(t)
    nodes = len(inc.element_nodes) + len(inc.fact_nodes)
    # components of the bipartite graph: facts merge with their elements
    parent = list(range(nodes))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    n_elem = len(inc.element_nodes)
    components = nodes
    for fi, t in enumerate(inc.edges):
        for a in t:
            ra, rf = find(a), find(n_elem + fi)
            if ra == rf:
                return False
            parent[ra] = rf
            components -= 1
    return simple_edges == nodes - components


@dataclass(frozen=True)
class WalkAnalysis:
    # per weak component: element -> potential along some traversal tree
    potentials: tuple[dict[int, int], ...]
    # gcd of |potential(u)+1-potential(v)| over each component's edges
    component_gcds: tuple[int, ...]


def walk_analysis(d: Structure) -> WalkAnalysis:
    """
    Assign integer potentials per weak component (+1 along a forward edge,
    -1 along a backward edge); every edge's discrepancy |pot(u)+1-pot(v)|
    is the net length of some closed oriented walk, and their gcd is the
    gcd of all positive-net-length oriented cycle lengths.
    """
    edges = edges_of(d)
    out_adj: dict[int, list[int]] = {v: [] for v in d.domain}
    in_adj: dict[int, list[int]] = {v: [] for v in d.domain}
    for u, v in edges:
        out_adj[u].append(v)
        in_adj[v].append(u)

    potentials = []
    gcds = []
    seen: set[int] = set()
    for start in d.domain:
        if start in seen:
            continue
        pot = {start: 0}
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in out_adj[v]:
                if w not in pot:
                    pot[w] = pot[v] + 1
                    seen.add(w)
                    queue.append(w)
            for w in in_adj[v]:
                if w not in pot:
                    pot[w] = pot[v] - 1
                    seen.add(w)
                    queue.append(w)
        g = 0
        for u, v in edges:
            if u in pot:
                g = math.gcd(g, abs(pot[u] + 1 - pot[v]))
        potentials.append(pot)
        gcds.append(g)
    return WalkAnalysis(tuple(potentials), tuple(gcds))


def gamma(d: Structure) -> int:
    """
    gcd of the net lengths of all positive-net-length oriented cycles;
    0 when there are none (gcd of the empty set).
    """
    analysis = walk_analysis(d)
    g = 0
    for comp_gcd in analysis.component_gcds:
        g = math.gcd(g, comp_gcd)
    return g


def maps_to_cycle(d: Structure, n: int) -> bool:
    "Whether d admits a homomorphism into the directed n-cycle: n | gamma(d)."
    if n < 1:
        raise ValueError("cycle length must be >= 1")
    return gamma(d) % n == 0


def star_transform(s: Structure) -> Structure:
    """
    For a structure with one relation of arity >= 2: the digraph on the
    same domain with an edge (a, b) whenever a and b occur consecutively
    in some tuple.
    """
    if len(s.signature.relations) != 1:
        raise ValueError("star transform needs exactly one relation")
    name, arity = s.signature.relations[0]
    if arity < 2:
        raise ValueError("star transform needs arity >= 2")
    edges = set()
    for t in s.relations[name]:
        for i in range(arity - 1):
            edges.add((t[i], t[i + 1]))
    return make_structure(Signature((("R", 2),)), s.domain_size, {"R": edges})


def induced_substructure(s: Structure, keep) -> Structure:
    "Substructure on the element subset keep, relabeled to 0..|keep|-1."
    keep = sorted(set(keep))
    index = {e: i for i, e in enumerate(keep)}
    rels = {name: {tuple(index[e] for e in t) for t in ts
                   if all(e in index for e in t)}
            for name, ts in s.relations.items()}
    return make_structure(s.signature, len(keep), rels)


def core(s: Structure, guard: int = 7) -> Structure:
    """
    A minimal retract: repeatedly find an endomorphism missing some element
    and restrict to the induced image, until none exists.  Returned in
    lexicographically least canonical form (cores are unique up to
    isomorphism, so ties do not matter).
    """
    from .homs import find_hom

    if s.domain_size > guard:
        raise GuardExceeded(f"core guard: |s| = {s.domain_size} > {guard}")
    current = s
    shrunk = True
    while shrunk and current.domain_size > 1:
        shrunk = False
        for drop in current.domain:
            keep = [e for e in current.domain if e != drop]
            target = induced_substructure(current, keep)
            witness = find_hom(current, target)
            if witness is not None:
                image = {keep[witness[e]] for e in current.domain}
                current = induced_substructure(current, image)
                shrunk = True
                break
    return canonical_form(current)


def hom_equiv_to_acyclic(s: Structure, guard: int = 7) -> bool:
    "Whether s is homomorphically equivalent to a Berge-acyclic structure."
    return is_berge_acyclic(core(s, guard=guard))
