"""Graded dimensions, computed by several independent routes."""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, prod
from typing import Sequence, Union

from .graphs import LabeledGraph, VariantFlags, canonicalize, enumerate_graphs, is_irreducible
from .sym import compositions

TAIL_RATIO = Fraction(3, 4)


def dim_labeled(n: int, variant: Union[str, VariantFlags] = "111", arity: int = 2) -> int:
    return len(enumerate_graphs(n, variant, arity))


def _multisets(slots: int, n: int) -> int:
    # multisets of size n drawn from `slots` items; 1 for n = 0 even when slots = 0
    return comb(slots + n - 1, n) if slots else int(n == 0)


def _series_term(m: int, n: int) -> Fraction:
    return Fraction(_multisets(m * m, n), 2 ** (m + 1))


def dim_series_111(n: int) -> int:
    """Exact value of ``sum_{m>=0} C(m^2+n-1, n) / 2^(m+1)``.

    Partial sums are exact rationals. Once ``m^2 + m > n - 1`` the ratio of
    consecutive terms is decreasing in ``m``, so as soon as it also drops below
    ``TAIL_RATIO`` the remaining terms are dominated by a geometric series. We
    stop when the certified interval ``[partial, partial + tail]`` contains
    exactly one integer.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    partial = Fraction(0)
    m = 0
    while True:
        term = _series_term(m, n)
        partial += term
        nxt = _series_term(m + 1, n)
        if term and m * m + m > n - 1 and nxt / term <= TAIL_RATIO:
            tail = nxt / (1 - TAIL_RATIO)
            lo = -(-partial.numerator // partial.denominator)  # ceil
            if partial + tail < lo + 1:
                if lo > partial + tail:
                    raise ArithmeticError(f"series for n={n} does not bracket an integer")
                return lo
        m += 1


def inclusion_exclusion_count(n: int, arity: int = 2, simple: bool = False) -> int:
    """Graphs of degree ``n`` without isolated vertices, all orientations and loops allowed.

    Counts edge multisets (or sets when ``simple``) over ``m^k`` tuples and
    removes those missing some vertex by inclusion-exclusion; independent of
    the backtracking enumerator.
    """
    if n == 0:
        return 1
    total = 0
    for m in range(1, arity * n + 1):
        for j in range(m + 1):
            slots = (m - j) ** arity
            count = comb(slots, n) if simple else _multisets(slots, n)
            total += (-1) ** j * comb(m, j) * count
    return total


def irreducible_count(n: int, variant: Union[str, VariantFlags] = "111", arity: int = 2) -> int:
    """Direct count of degree-``n`` graphs with no nontrivial admissible cut."""
    if n < 1:
        raise ValueError("irreducible counts start at degree 1")
    return sum(1 for g in enumerate_graphs(n, variant, arity) if is_irreducible(g))


def irreducibles_from_dimensions(dims: Sequence[int]) -> list[int]:
    """Coefficients of ``1 - 1/d(t)`` for ``d(t) = sum dims[n] t^n`` (``dims[0] == 1``)."""
    if not dims or dims[0] != 1:
        raise ValueError("dimension series must start with 1")
    inv = [Fraction(1)]
    for n in range(1, len(dims)):
        inv.append(-sum(dims[j] * inv[n - j] for j in range(1, n + 1)))
    out = [0] + [int(-c) for c in inv[1:]]
    return out


def dimensions_from_irreducibles(irr: Sequence[int], n: int) -> int:
    """Free-algebra dimension: sum over compositions of ``n`` of products of generator counts."""
    return sum(prod(irr[p] for p in c) for c in compositions(n))


def dim_unlabeled(n: int, variant: Union[str, VariantFlags] = "111", arity: int = 2) -> int:
    return len({canonicalize(g) for g in enumerate_graphs(n, variant, arity)})


def orbit_partition_count(graphs: Sequence[LabeledGraph]) -> int:
    """Number of relabeling orbits, by marking every permuted image of each unseen graph."""
    seen: set = set()
    orbits = 0
    for g in graphs:
        if g in seen:
            continue
        orbits += 1
        for p in itertools.permutations(range(1, g.num_vertices + 1)):
            seen.add(g.relabel(p))
    return orbits


def dimension_table(max_degree: int, variant: Union[str, VariantFlags] = "111", arity: int = 2,
                    unlabeled: bool = True) -> list[dict]:
    """Rows ``n, enum, series, irreducibles, unlabeled``; ``None`` where a route does not apply."""
    v = VariantFlags.parse(variant)
    with_series = str(v) == "111" and arity == 2
    rows = []
    for n in range(max_degree + 1):
        rows.append({
            "n": n,
            "enum": dim_labeled(n, v, arity),
            "series": dim_series_111(n) if with_series else None,
            "irreducibles": irreducible_count(n, v, arity) if n else None,
            "unlabeled": dim_unlabeled(n, v, arity) if unlabeled else None,
        })
    return rows
