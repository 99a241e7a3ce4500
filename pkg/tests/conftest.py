import numpy as np
import pytest
from hypothesis import strategies as st

from facbal import Graph


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240817)


@st.composite
def graphs(draw, min_n=1, max_n=12, connected=False):
    n = draw(st.integers(min_n, max_n))
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(
        st.lists(st.sampled_from(all_pairs), unique=True, max_size=len(all_pairs))
        if all_pairs
        else st.just([])
    )
    if connected and n > 1:
        # thread a random spanning path through all vertices
        order = draw(st.permutations(range(n)))
        edges = list(edges) + [(min(a, b), max(a, b)) for a, b in zip(order, order[1:])]
    return Graph(n, edges)


@st.composite
def graphs_with_placements(draw, min_n=2, max_n=12, max_k=4):
    g = draw(graphs(min_n=min_n, max_n=max_n))
    k = draw(st.integers(1, min(max_k, g.n)))
    facilities = draw(
        st.lists(st.integers(0, g.n - 1), unique=True, min_size=k, max_size=k)
    )
    return g, tuple(facilities)
