from fractions import Fraction

import pytest
from hypothesis import given, settings

from graphhopf.algebra import (
    M,
    S,
    AlgebraElement,
    BasisMismatch,
    TensorElement,
    antipode_M,
    coproduct_M,
    coproduct_S,
    counit,
    multiply_legs,
    pairing,
    product_M,
    product_S,
    quasi_shuffles,
    structure_constants,
    tensor_pairing,
    tensor_product,
    unit,
)
from graphhopf.graphs import LabeledGraph, concatenate, gamma
from graphhopf.realization import oracle_structure_constants
from graphhopf.verify import (
    antipode_at,
    associative_at,
    coassociative_at,
    compatible_at,
    counit_at,
    graphs_upto,
    tuples_upto,
)

from conftest import ARC, ARC21, DOUBLE_LOOP, EMPTY, L2, LOOP, graphs

LOOP_ARC = {
    LabeledGraph.from_matrix([[1, 1], [0, 0]]): 1,
    LabeledGraph.from_matrix([[0, 1], [0, 1]]): 1,
    LabeledGraph.from_matrix([[0, 1, 0], [0, 0, 0], [0, 0, 1]]): 1,
    LabeledGraph.from_matrix([[0, 0, 1], [0, 1, 0], [0, 0, 0]]): 1,
    LabeledGraph.from_matrix([[1, 0, 0], [0, 0, 1], [0, 0, 0]]): 1,
}


class TestElements:
    def test_zero_coefficients_dropped(self):
        x = M(LOOP) - M(LOOP) + M(ARC) * 0
        assert x.is_zero() and len(x) == 0

    def test_deterministic_order(self):
        x = M(L2) + M(LOOP) * 3 + M(ARC)
        assert list(x.terms) == [LOOP, ARC, L2]

    def test_fractions(self):
        x = M(LOOP) * Fraction(1, 3) + M(LOOP) * Fraction(2, 3)
        assert x == M(LOOP)

    def test_basis_mismatch(self):
        with pytest.raises(BasisMismatch):
            M(LOOP) + S(LOOP)
        with pytest.raises(BasisMismatch):
            product_M(M(LOOP), S(LOOP))
        with pytest.raises(BasisMismatch):
            product_S(M(LOOP), S(LOOP))

    def test_homogeneous(self):
        x = M(EMPTY) + M(LOOP) + M(L2)
        assert x.homogeneous(2) == M(L2)
        assert x.degrees() == {0, 1, 2}

    def test_tensor_flip(self):
        t = TensorElement.tensor(M(LOOP), M(ARC) * 2)
        assert t.flip().terms == {(ARC, LOOP): 2}


class TestProductM:
    def test_quasi_shuffle_counts_are_delannoy(self):
        # central Delannoy numbers 1, 3, 13, 63
        assert [len(quasi_shuffles(n, n)) for n in range(4)] == [1, 3, 13, 63]

    def test_unit(self):
        assert product_M(M(EMPTY), M(L2)) == M(L2) == product_M(M(L2), M(EMPTY))

    def test_loop_squared(self):
        expected = {DOUBLE_LOOP: 1, L2: 2}
        assert oracle_structure_constants(LOOP, LOOP) == expected
        assert product_M(M(LOOP), M(LOOP)) == M(DOUBLE_LOOP) + M(L2) * 2

    def test_loop_times_arc(self):
        assert oracle_structure_constants(LOOP, ARC) == LOOP_ARC
        assert product_M(M(LOOP), M(ARC)) == AlgebraElement("M", LOOP_ARC)

    def test_commutative(self):
        for g1, g2 in tuples_upto(2, 2):
            assert structure_constants(g1, g2) == structure_constants(g2, g1)

    def test_constants_are_natural_numbers(self):
        for g1, g2 in tuples_upto(3, 2):
            assert all(isinstance(c, int) and c > 0 for c in structure_constants(g1, g2).values())

    def test_degree_additive(self):
        for g1, g2 in tuples_upto(3, 2):
            assert all(g.degree == g1.degree + g2.degree for g in structure_constants(g1, g2))


class TestCoproductM:
    def test_empty(self):
        assert coproduct_M(M(EMPTY)) == TensorElement.tensor(M(EMPTY), M(EMPTY))

    def test_arc(self):
        assert coproduct_M(M(ARC)) == TensorElement.tensor(M(EMPTY), M(ARC)) + TensorElement.tensor(M(ARC), M(EMPTY))

    def test_two_loops(self):
        expected = (TensorElement.tensor(M(EMPTY), M(L2)) + TensorElement.tensor(M(LOOP), M(LOOP))
                    + TensorElement.tensor(M(L2), M(EMPTY)))
        assert coproduct_M(M(L2)) == expected

    def test_not_cocommutative(self):
        g = LabeledGraph.from_matrix([[1, 0, 0], [0, 0, 1], [0, 0, 0]])
        assert coproduct_M(M(g)) != coproduct_M(M(g)).flip()


class TestCounitAntipode:
    def test_counit(self):
        assert counit(M(EMPTY)) == 1
        assert all(counit(M(g)) == 0 for g in graphs_upto(2) if g.degree)
        assert counit(M(EMPTY) * 3 - M(LOOP) * 2) == 3

    def test_antipode_small(self):
        assert antipode_M(M(EMPTY)) == M(EMPTY)
        assert antipode_M(M(LOOP)) == -M(LOOP)

    def test_antipode_two_loops(self):
        # S(L2) = -L2 - S(loop) loop = -L2 + loop*loop = double loop + L2
        s = antipode_M(M(L2))
        assert s == M(DOUBLE_LOOP) + M(L2)
        delta = coproduct_M(M(L2))
        assert multiply_legs(delta.map(lambda a: antipode_M(M(a)), M)).is_zero()

    def test_antipode_is_involutive_on_commutative_algebra(self):
        for g in graphs_upto(2):
            assert antipode_M(antipode_M(M(g))) == M(g)


class TestHopfAxiomsSmall:
    def test_exhaustive_degree_2(self):
        for triple in tuples_upto(2, 3):
            assert associative_at(*triple)
        for pair in tuples_upto(2, 2):
            assert compatible_at(*pair)
        for g in graphs_upto(2):
            assert coassociative_at(g) and counit_at(g) and antipode_at(g)

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_vertices=3, max_edges=2), graphs(max_vertices=3, max_edges=2), graphs(max_vertices=2, max_edges=1))
    def test_random_associativity_and_compatibility(self, g1, g2, g3):
        assert associative_at(g1, g2, g3)
        assert compatible_at(g1, g2)

    @settings(max_examples=30, deadline=None)
    @given(graphs(max_vertices=4, max_edges=3))
    def test_random_antipode(self, g):
        assert antipode_at(g) and coassociative_at(g)


class TestDual:
    def test_product_is_concatenation(self):
        assert product_S(S(LOOP), S(LOOP)) == S(L2)
        assert product_S(S(EMPTY), S(ARC)) == S(ARC)

    def test_coproduct_degree_one(self):
        assert coproduct_S(S(LOOP)) == TensorElement.tensor(S(EMPTY), S(LOOP)) + TensorElement.tensor(S(LOOP), S(EMPTY))

    def test_coproduct_double_loop(self):
        # read off M_loop * M_loop = M_{double loop} + 2 M_{L2}: c^{double loop}_{loop, loop} = 1
        expected = (TensorElement.tensor(S(EMPTY), S(DOUBLE_LOOP)) + TensorElement.tensor(S(LOOP), S(LOOP))
                    + TensorElement.tensor(S(DOUBLE_LOOP), S(EMPTY)))
        assert coproduct_S(S(gamma(2))) == expected

    def test_coproduct_two_loops(self):
        # c^{L2}_{loop, loop} = 2
        assert coproduct_S(S(L2)).terms[(LOOP, LOOP)] == 2

    def test_pairing(self):
        assert pairing(S(LOOP), M(LOOP)) == 1
        assert pairing(S(LOOP), M(L2)) == 0
        assert pairing(S(LOOP) * 2 + S(L2), M(L2) * 3 + M(LOOP)) == 5

    def test_dual_product_adjunction_exhaustive(self):
        # <S^{G1} S^{G2}, M_G> is nonzero only for G = G1 G2, so index the pairs by G
        paired = {}
        for g1, g2 in tuples_upto(3, 2):
            (g, c), = product_S(S(g1), S(g2)).items()
            paired.setdefault(g, {})[(g1, g2)] = c
        for g in graphs_upto(3):
            delta = coproduct_M(M(g))
            assert delta.terms == paired[g]
            for (g1, g2), c in paired[g].items():
                assert tensor_pairing(TensorElement.tensor(S(g1), S(g2)), delta) == c == pairing(
                    product_S(S(g1), S(g2)), M(g))

    def test_dual_coproduct_adjunction_exhaustive(self):
        for g1, g2 in tuples_upto(3, 2):
            prod = product_M(M(g1), M(g2))
            for g in prod.terms:
                lhs = tensor_pairing(coproduct_S(S(g)), TensorElement.tensor(M(g1), M(g2)))
                assert lhs == pairing(S(g), prod)

    def test_dual_coproduct_is_multiplicative(self):
        for g1, g2 in tuples_upto(2, 2):
            lhs = coproduct_S(product_S(S(g1), S(g2)))
            assert lhs == tensor_product(coproduct_S(S(g1)), coproduct_S(S(g2)))


def test_unit_element():
    assert unit() == M(EMPTY)
    assert unit("S", 3) == S(LabeledGraph.empty(3))
