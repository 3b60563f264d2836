from fractions import Fraction

import pytest

from graphhopf.enumeration import (
    _series_term,
    dim_labeled,
    dim_series_111,
    dim_unlabeled,
    dimension_table,
    dimensions_from_irreducibles,
    inclusion_exclusion_count,
    irreducible_count,
    irreducibles_from_dimensions,
    orbit_partition_count,
)
from graphhopf.graphs import enumerate_graphs

PUBLISHED = [1, 3, 39, 819, 23949]


def test_labeled_dimensions_small():
    assert [dim_labeled(n) for n in range(4)] == PUBLISHED[:4]


@pytest.mark.slow
def test_labeled_dimension_degree_4():
    assert dim_labeled(4) == PUBLISHED[4]


def test_series_values():
    assert [dim_series_111(n) for n in range(5)] == PUBLISHED


def test_series_degree_zero_is_geometric():
    # sum 1/2^(m+1) = 1
    assert sum(_series_term(m, 0) for m in range(60)) == 1 - Fraction(1, 2 ** 60)


def test_series_continues_with_inclusion_exclusion():
    for n in range(5, 8):
        assert dim_series_111(n) == inclusion_exclusion_count(n)


def test_series_rejects_negative():
    with pytest.raises(ValueError):
        dim_series_111(-1)


def test_inclusion_exclusion():
    assert [inclusion_exclusion_count(n) for n in range(5)] == PUBLISHED
    assert [inclusion_exclusion_count(n, simple=True) for n in range(4)] == [1, 3, 36, 744]


def test_simple_count_matches_variant_110():
    assert [dim_labeled(n, "110") for n in range(4)] == [inclusion_exclusion_count(n, simple=True) for n in range(4)]


def test_hypergraph_counts():
    assert [dim_labeled(n, arity=3) for n in range(3)] == [inclusion_exclusion_count(n, arity=3) for n in range(3)]


def test_irreducibles_two_routes():
    inverted = irreducibles_from_dimensions(PUBLISHED[:4])
    assert inverted[1:] == [3, 30, 612]
    assert [irreducible_count(n) for n in range(1, 4)] == [3, 30, 612]


def test_irreducibles_degree_4_from_series():
    assert irreducibles_from_dimensions(PUBLISHED)[4] == 18486


def test_freeness_identity():
    irr = irreducibles_from_dimensions(PUBLISHED)
    assert [dimensions_from_irreducibles(irr, n) for n in range(5)] == PUBLISHED


def test_inversion_rejects_bad_series():
    with pytest.raises(ValueError):
        irreducibles_from_dimensions([2, 3])


def test_unlabeled_dimensions():
    assert dim_unlabeled(0) == 1
    assert dim_unlabeled(1) == 2
    for n in range(4):
        assert dim_unlabeled(n) == orbit_partition_count(enumerate_graphs(n))
    assert [dim_unlabeled(n) for n in range(4)] == [1, 2, 11, 52]


def test_variant_dimensions_are_filter_counts():
    for v in ("011", "101", "001"):
        for n in range(4):
            assert dim_labeled(n, v) == sum(1 for g in enumerate_graphs(n) if g in set(enumerate_graphs(n, v)))


def test_table():
    rows = dimension_table(3)
    assert rows[-1] == {"n": 3, "enum": 819, "series": 819, "irreducibles": 612, "unlabeled": 52}
    assert rows[0]["irreducibles"] is None
    assert all(r["series"] is None for r in dimension_table(2, "011", unlabeled=False))
