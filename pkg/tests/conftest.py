import itertools

import pytest
from hypothesis import strategies as st

from graphhopf.graphs import LabeledGraph

LOOP = LabeledGraph.from_matrix([[1]])
DOUBLE_LOOP = LabeledGraph.from_matrix([[2]])
ARC = LabeledGraph.from_matrix([[0, 1], [0, 0]])
ARC21 = LabeledGraph.from_matrix([[0, 0], [1, 0]])
L2 = LabeledGraph.from_matrix([[1, 0], [0, 1]])
EMPTY = LabeledGraph.empty()


@st.composite
def graphs(draw, max_vertices=4, max_edges=4, arity=2):
    """Valid graphs: draw edges, then drop uncovered vertices by renumbering."""
    m = draw(st.integers(0, max_vertices))
    if m == 0:
        return LabeledGraph.empty(arity)
    vertex = st.integers(1, m)
    edges = draw(st.lists(st.tuples(*[vertex] * arity), min_size=1, max_size=max_edges))
    used = sorted({v for t in edges for v in t})
    pos = {v: i + 1 for i, v in enumerate(used)}
    return LabeledGraph(arity, len(used), [(tuple(pos[v] for v in t), 1) for t in edges])


@pytest.fixture
def small_graphs():
    from graphhopf.graphs import enumerate_graphs

    return list(itertools.chain.from_iterable(enumerate_graphs(n) for n in range(3)))
