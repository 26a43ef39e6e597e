"""
Enumeration of digraphs up to isomorphism, in a frozen deterministic
order: size ascending, then ascending canonical adjacency mask, where the
canonical mask of a digraph is the minimum over all vertex permutations
of its adjacency bit-mask (bit u*n+v set iff edge (u, v)).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .structures import DIGRAPH_SIG, GuardExceeded, Signature, Structure, digraph


@dataclass(frozen=True)
class IsoClassCatalog:
    size: int
    signature: Signature
    representatives: tuple[Structure, ...]


def _mask_to_digraph(mask: int, n: int) -> Structure:
    edges = {(i // n, i % n) for i in range(n * n) if mask >> i & 1}
    return digraph(n, edges)


def digraph_to_mask(d: Structure, perm=None) -> int:
    n = d.domain_size
    mask = 0
    for u, v in d.relations["R"]:
        if perm is not None:
            u, v = perm[u], perm[v]
        mask |= 1 << (u * n + v)
    return mask


def canonical_mask(d: Structure) -> int:
    n = d.domain_size
    return min(digraph_to_mask(d, perm)
               for perm in itertools.permutations(range(n)))


@lru_cache(maxsize=None)
def enumerate_digraphs(n: int, guard: int = 4) -> IsoClassCatalog:
    "All isomorphism classes of digraphs on exactly n vertices."
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > guard:
        raise GuardExceeded(f"enumeration guard: n = {n} > {guard}")
    bits = n * n
    masks = np.arange(1 << bits, dtype=np.int64)
    canon = masks.copy()
    for perm in itertools.permutations(range(n)):
        permuted = np.zeros_like(masks)
        for i in range(bits):
            u, v = i // n, i % n
            j = perm[u] * n + perm[v]
            permuted |= ((masks >> i) & 1) << j
        np.minimum(canon, permuted, out=canon)
    reps = np.unique(canon)
    return IsoClassCatalog(
        size=n,
        signature=DIGRAPH_SIG,
        representatives=tuple(_mask_to_digraph(int(m), n) for m in reps),
    )


@lru_cache(maxsize=None)
def enumerate_digraphs_upto(n: int, guard: int = 4) -> tuple[Structure, ...]:
    "Iso-class representatives of all digraphs with 1..n vertices, frozen order."
    out: list[Structure] = []
    for size in range(1, n + 1):
        out.extend(enumerate_digraphs(size, guard=guard).representatives)
    return tuple(out)
