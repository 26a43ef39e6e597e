"""
Finite relational structures: signatures, constructors, combinators,
isomorphism testing and (de)serialization.

Elements are always the canonical integers 0..n-1.  All values are
immutable; every operation returns a fresh structure.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field


class GuardExceeded(Exception):
    """A desk-scale size guard was hit; pass a larger guard to override."""


@dataclass(frozen=True)
class Signature:
    # ordered (name, arity) pairs; names distinct, arities >= 1
    relations: tuple[tuple[str, int], ...]

    def __post_init__(self):
        names = [name for name, _ in self.relations]
        if len(set(names)) != len(names):
            raise ValueError("relation names must be pairwise distinct")
        for name, arity in self.relations:
            if arity < 1:
                raise ValueError(f"arity of {name} must be >= 1")

    def arity(self, name: str) -> int:
        for rel_name, arity in self.relations:
            if rel_name == name:
                return arity
        raise KeyError(name)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.relations)


DIGRAPH_SIG = Signature((("R", 2),))


@dataclass(frozen=True)
class Structure:
    signature: Signature
    domain_size: int
    relations: dict[str, frozenset[tuple[int, ...]]] = field(hash=False)

    def __post_init__(self):
        if self.domain_size < 1:
            raise ValueError("domain must be non-empty")
        if set(self.relations) != set(self.signature.names):
            raise ValueError("relation map must cover the signature exactly")
        for name, arity in self.signature.relations:
            for t in self.relations[name]:
                if len(t) != arity:
                    raise ValueError(f"tuple {t} has wrong arity for {name}")
                if any(not (0 <= e < self.domain_size) for e in t):
                    raise ValueError(f"tuple {t} out of domain range")

    @property
    def domain(self) -> range:
        return range(self.domain_size)

    def tuples(self, name: str) -> frozenset[tuple[int, ...]]:
        return self.relations[name]

    def facts(self):
        "All (relation name, tuple) pairs, in deterministic order."
        for name in self.signature.names:
            for t in sorted(self.relations[name]):
                yield name, t

    def is_digraph(self) -> bool:
        return len(self.signature.relations) == 1 and self.signature.relations[0][1] == 2

    def __eq__(self, other):
        return (
            isinstance(other, Structure)
            and self.signature == other.signature
            and self.domain_size == other.domain_size
            and self.relations == other.relations
        )

    def __hash__(self):
        # cheap label-insensitive summary, compatible with __eq__
        sizes = tuple(len(self.relations[n]) for n in self.signature.names)
        return hash((self.signature, self.domain_size, sizes))

    def __repr__(self):
        rels = {name: sorted(ts) for name, ts in self.relations.items()}
        return f"Structure(n={self.domain_size}, {rels})"


def make_structure(signature: Signature, domain_size: int,
                   relations: dict[str, object]) -> Structure:
    frozen = {name: frozenset(tuple(t) for t in tuples)
              for name, tuples in relations.items()}
    for name in signature.names:
        frozen.setdefault(name, frozenset())
    return Structure(signature, domain_size, frozen)


def digraph(domain_size: int, edges) -> Structure:
    return make_structure(DIGRAPH_SIG, domain_size, {"R": edges})


def edges_of(d: Structure) -> frozenset[tuple[int, int]]:
    if not d.is_digraph():
        raise ValueError("expected a digraph (one binary relation)")
    return d.relations[d.signature.names[0]]


def directed_cycle(n: int) -> Structure:
    "The directed cycle on n vertices; n=1 is a single loop."
    if n < 1:
        raise ValueError("cycle length must be >= 1")
    return digraph(n, {(i, (i + 1) % n) for i in range(n)})


def directed_path(n: int) -> Structure:
    "The directed path with n edges on n+1 vertices; n=0 is an edgeless point."
    if n < 0:
        raise ValueError("path length must be >= 0")
    return digraph(n + 1, {(i, i + 1) for i in range(n)})


def n_ary_cycle(d: int, n: int) -> Structure:
    """
    Domain {0..d-1} with one n-ary relation holding the d tuples
    (i, i+1, ..., i+n-1) mod d.
    """
    if d < 1 or n < 1:
        raise ValueError("d and n must be >= 1")
    sig = Signature((("R", n),))
    tuples = {tuple((i + j) % d for j in range(n)) for i in range(d)}
    return make_structure(sig, d, {"R": tuples})


def complete_singleton(sig: Signature) -> Structure:
    "One element; every relation holds on the all-zero tuple."
    return make_structure(sig, 1, {name: {(0,) * arity} for name, arity in sig.relations})


def complete_pair(sig: Signature) -> Structure:
    "Two elements; each relation of arity m holds on all 2^m tuples."
    return make_structure(
        sig, 2,
        {name: set(itertools.product((0, 1), repeat=arity))
         for name, arity in sig.relations})


def disjoint_union(a: Structure, b: Structure) -> Structure:
    if a.signature != b.signature:
        raise ValueError("signature mismatch")
    shift = a.domain_size
    rels = {name: set(a.relations[name]) |
            {tuple(e + shift for e in t) for t in b.relations[name]}
            for name in a.signature.names}
    return make_structure(a.signature, a.domain_size + b.domain_size, rels)


def scalar_multiple(m: int, h: Structure) -> Structure:
    "m disjoint copies of h; m=0 is rejected (structures are non-empty)."
    if m < 1:
        raise ValueError("multiplier must be >= 1")
    out = h
    for _ in range(m - 1):
        out = disjoint_union(out, h)
    return out


def direct_product(a: Structure, b: Structure) -> Structure:
    """
    Componentwise product.  The pair (x, y) gets the fixed row-major
    index x*|B| + y so product structures are reproducible.
    """
    if a.signature != b.signature:
        raise ValueError("signature mismatch")
    nb = b.domain_size
    rels = {}
    for name in a.signature.names:
        rels[name] = {
            tuple(ta[i] * nb + tb[i] for i in range(len(ta)))
            for ta in a.relations[name] for tb in b.relations[name]}
    return make_structure(a.signature, a.domain_size * nb, rels)


def relabel(s: Structure, perm) -> Structure:
    "Apply the domain permutation perm (element i becomes perm[i])."
    rels = {name: {tuple(perm[e] for e in t) for t in ts}
            for name, ts in s.relations.items()}
    return make_structure(s.signature, s.domain_size, rels)


def structure_key(s: Structure) -> tuple:
    "Total order key on same-signature structures of equal size."
    return tuple(tuple(sorted(s.relations[name])) for name in s.signature.names)


def canonical_key(s: Structure) -> tuple:
    "Minimal structure_key over all domain permutations (small domains only)."
    return min(structure_key(relabel(s, perm))
               for perm in itertools.permutations(range(s.domain_size)))


def canonical_form(s: Structure) -> Structure:
    best = min((relabel(s, perm) for perm in itertools.permutations(range(s.domain_size))),
               key=structure_key)
    return best


def isomorphic(a: Structure, b: Structure, guard: int = 8) -> bool:
    "Exhaustive permutation search; guarded to small domains."
    if a.signature != b.signature:
        raise ValueError("signature mismatch")
    if a.domain_size != b.domain_size:
        return False
    if any(len(a.relations[n]) != len(b.relations[n]) for n in a.signature.names):
        return False
    if a.domain_size > guard:
        raise GuardExceeded(f"isomorphism guard: |A| = {a.domain_size} > {guard}")
    target = structure_key(b)
    return any(structure_key(relabel(a, perm)) == target
               for perm in itertools.permutations(range(a.domain_size)))


def encode_structure(s: Structure) -> str:
    "Stable JSON text form: signature, domain, lexicographically sorted tuples."
    doc = {
        "signature": [{"name": name, "arity": arity}
                      for name, arity in s.signature.relations],
        "domain": s.domain_size,
        "relations": {name: [list(t) for t in sorted(s.relations[name])]
                      for name in s.signature.names},
    }
    return json.dumps(doc, indent=2) + "\n"


def decode_structure(text: str) -> Structure:
    doc = json.loads(text)
    sig = Signature(tuple((r["name"], int(r["arity"])) for r in doc["signature"]))
    rels = {name: {tuple(int(e) for e in t) for t in tuples}
            for name, tuples in doc.get("relations", {}).items()}
    return make_structure(sig, int(doc["domain"]), rels)
