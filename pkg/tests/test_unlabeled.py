import itertools

import pytest

from graphhopf.algebra import M, coproduct_M, product_M
from graphhopf.graphs import LabeledGraph, canonicalize, enumerate_graphs
from graphhopf.unlabeled import (
    MM,
    NotInSpan,
    mm_coproduct,
    mm_expand,
    mm_product,
    mm_recognize,
    mm_recognize_tensor,
    mm_tensor_expand,
    unlabeled_basis,
)
from graphhopf.verify import check_unlabeled

from conftest import ARC, ARC21, DOUBLE_LOOP, L2, LOOP


def test_expand_arc_class():
    assert mm_expand(MM(ARC)) == M(ARC) + M(ARC21)


def test_expand_fixed_graph():
    assert mm_expand(MM(L2)) == M(L2)


def test_recognize_inverts_expand():
    for n in range(3):
        for u in unlabeled_basis(n):
            assert mm_recognize(mm_expand(MM(u))) == MM(u)


def test_recognize_rejects_partial_orbit():
    with pytest.raises(NotInSpan):
        mm_recognize(M(ARC))


def test_arc_class_squared():
    prod = mm_product(MM(ARC), MM(ARC))
    assert mm_expand(prod) == product_M(M(ARC) + M(ARC21), M(ARC) + M(ARC21))
    two_cycle = LabeledGraph.from_matrix([[0, 1], [1, 0]])
    assert prod.coefficient(canonicalize(two_cycle)) == 2


def test_coproduct_arc_class():
    delta = mm_coproduct(MM(ARC))
    assert mm_tensor_expand(delta) == coproduct_M(M(ARC) + M(ARC21))
    assert len(delta) == 2


def test_tensor_recognition_rejects_unbalanced():
    with pytest.raises(NotInSpan):
        mm_recognize_tensor(coproduct_M(M(LabeledGraph.from_matrix([[1, 0, 0], [0, 0, 1], [0, 0, 0]]))))


def test_basis_counts_by_orbit_partition():
    # oracle: group labeled graphs by the set of their images under every permutation
    for n in range(4):
        orbits = set()
        for g in enumerate_graphs(n):
            m = g.num_vertices
            orbits.add(frozenset(
                LabeledGraph(2, m, [((p[i - 1] + 1, p[j - 1] + 1), a) for (i, j), a in g.edges])
                for p in itertools.permutations(range(m))))
        assert len(unlabeled_basis(n)) == len(orbits)


def test_double_loop_class():
    assert mm_expand(MM(DOUBLE_LOOP)) == M(DOUBLE_LOOP)
    assert mm_product(MM(LOOP), MM(LOOP)) == MM(DOUBLE_LOOP) + MM(L2) * 2


@pytest.mark.parametrize("variant", ["111", "001"])
def test_closure_degree_2(variant):
    report = check_unlabeled(2, variants=(variant,))
    assert report.ok, report
