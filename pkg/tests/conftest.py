import itertools

from hypothesis import strategies as st

from homquery.structures import digraph


@st.composite
def small_digraphs(draw, max_vertices=4, min_vertices=1):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(itertools.product(range(n), repeat=2))
    edges = draw(st.sets(st.sampled_from(pairs)))
    return digraph(n, edges)
