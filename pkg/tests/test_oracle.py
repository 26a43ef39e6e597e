import itertools
import random

import pytest

from homquery.homs import hom_count
from homquery.oracle import (
    has_directed_cycle,
    oracle_gamma,
    oracle_hom_count,
    oracle_hom_exists,
    shortest_directed_cycle,
)
from homquery.structures import (
    GuardExceeded,
    Signature,
    digraph,
    directed_cycle,
    directed_path,
    disjoint_union,
    make_structure,
)


def test_oracle_hom_count_frozen_values():
    assert oracle_hom_count(directed_cycle(3), directed_cycle(3)) == 3
    assert oracle_hom_count(directed_cycle(3), directed_cycle(2)) == 0
    assert oracle_hom_count(directed_path(2), directed_cycle(3)) == 3
    assert oracle_hom_count(digraph(2, set()), digraph(3, set())) == 9
    tern = Signature((("T", 3),))
    a = make_structure(tern, 2, {"T": {(0, 1, 1)}})
    b = make_structure(tern, 2, {"T": {(0, 0, 0), (0, 1, 1), (1, 0, 0)}})
    assert oracle_hom_count(a, b) == 3


def test_oracle_guard():
    with pytest.raises(GuardExceeded):
        oracle_hom_count(digraph(10, set()), digraph(10, set()), guard=1000)


def test_engine_matches_oracle_on_random_pairs():
    rng = random.Random(20240817)
    for _ in range(500):
        na, nb = rng.randint(1, 4), rng.randint(1, 4)
        ea = {(rng.randrange(na), rng.randrange(na))
              for _ in range(rng.randint(0, na * na))}
        eb = {(rng.randrange(nb), rng.randrange(nb))
              for _ in range(rng.randint(0, nb * nb))}
        a, b = digraph(na, ea), digraph(nb, eb)
        assert hom_count(a, b) == oracle_hom_count(a, b)


def test_oracle_hom_exists():
    assert oracle_hom_exists(directed_cycle(6), directed_cycle(3))
    assert not oracle_hom_exists(directed_cycle(3), directed_cycle(6))


def test_oracle_gamma_frozen_values():
    for n in range(1, 6):
        assert oracle_gamma(directed_cycle(n)) == n
    assert oracle_gamma(directed_path(4)) == 0
    assert oracle_gamma(disjoint_union(directed_cycle(2), directed_cycle(3))) == 1
    assert oracle_gamma(digraph(4, {(0, 1), (2, 1), (2, 3), (0, 3)})) == 0


def test_has_directed_cycle():
    assert has_directed_cycle(directed_cycle(1))
    assert has_directed_cycle(directed_cycle(4))
    assert not has_directed_cycle(directed_path(5))
    assert not has_directed_cycle(digraph(3, {(0, 1), (0, 2), (1, 2)}))
    assert has_directed_cycle(digraph(3, {(0, 1), (1, 2), (2, 0)}))


def test_shortest_directed_cycle():
    assert shortest_directed_cycle(directed_path(3)) is None
    assert shortest_directed_cycle(directed_cycle(4)) == 4
    mixed = disjoint_union(directed_cycle(5), directed_cycle(2))
    assert shortest_directed_cycle(mixed) == 2
    with_chord = digraph(4, {(0, 1), (1, 2), (2, 3), (3, 0), (2, 0)})
    assert shortest_directed_cycle(with_chord) == 3


def test_has_directed_cycle_matches_shortest():
    for n in range(1, 4):
        pairs = list(itertools.product(range(n), repeat=2))
        for bits in range(2 ** len(pairs)):
            edges = {p for i, p in enumerate(pairs) if bits >> i & 1}
            d = digraph(n, edges)
            assert has_directed_cycle(d) == (shortest_directed_cycle(d) is not None)
