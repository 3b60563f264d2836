"""Polynomial realization of ``M_G`` in variables ``x[i1,...,ik]``, truncated to indices ``<= N``.

This is the reference definition of the product: expand, multiply polynomials,
and read the structure constants back off the monomials.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction
from typing import Mapping

from .graphs import GraphError, LabeledGraph

# a monomial is a sorted tuple of (index tuple, exponent)
Monomial = tuple[tuple[tuple[int, ...], int], ...]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    acc = dict(a)
    for var, e in b:
        acc[var] = acc.get(var, 0) + e
    return tuple(sorted(acc.items()))


class TruncatedPolynomial:
    __slots__ = ("num_indices", "terms")

    def __init__(self, num_indices: int, terms: Mapping[Monomial, Fraction] | None = None):
        self.num_indices = num_indices
        terms = terms or {}
        for mono in terms:
            if any(i < 1 or i > num_indices for var, _ in mono for i in var):
                raise GraphError(f"monomial {mono} uses an index above {num_indices}")
        self.terms = {m: Fraction(c) for m, c in sorted(terms.items()) if c}

    def __mul__(self, other: TruncatedPolynomial) -> TruncatedPolynomial:
        acc: dict = defaultdict(Fraction)
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                acc[_mono_mul(a, b)] += ca * cb
        return TruncatedPolynomial(max(self.num_indices, other.num_indices), acc)

    def __add__(self, other: TruncatedPolynomial) -> TruncatedPolynomial:
        acc: dict = defaultdict(Fraction, self.terms)
        for m, c in other.terms.items():
            acc[m] += c
        return TruncatedPolynomial(max(self.num_indices, other.num_indices), acc)

    def __rmul__(self, scalar) -> TruncatedPolynomial:
        return TruncatedPolynomial(self.num_indices, {m: c * scalar for m, c in self.terms.items()})

    def __sub__(self, other: TruncatedPolynomial) -> TruncatedPolynomial:
        return self + (-1) * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for mono, c in self.terms.items():
            factors = "*".join(
                "x[" + ",".join(map(str, var)) + "]" + (f"^{e}" if e > 1 else "") for var, e in mono
            ) or "1"
            out.append(factors if c == 1 else f"{c}*{factors}")
        return " + ".join(out)


def expand(g: LabeledGraph, n_indices: int) -> TruncatedPolynomial:
    """Sum over ``i_1 < ... < i_m <= N`` of the monomial of ``g`` with vertex ``j`` placed at ``i_j``."""
    if n_indices < 0:
        raise GraphError("number of indices must be nonnegative")
    terms = {}
    for idx in itertools.combinations(range(1, n_indices + 1), g.num_vertices):
        mono = tuple(sorted((tuple(idx[v - 1] for v in t), mult) for t, mult in g.edges))
        terms[mono] = Fraction(1)
    return TruncatedPolynomial(n_indices, terms)


def monomial_graph(mono: Monomial, arity: int) -> LabeledGraph | None:
    """The graph whose leading monomial is ``mono``, or None if the support is not ``1..p``."""
    support = sorted({i for var, _ in mono for i in var})
    if support != list(range(1, len(support) + 1)):
        return None
    return LabeledGraph(arity, len(support), list(mono))


def oracle_structure_constants(g1: LabeledGraph, g2: LabeledGraph) -> dict[LabeledGraph, int]:
    """Structure constants of ``M_{g1} M_{g2}`` read from the truncated polynomial product."""
    if g1.arity != g2.arity:
        raise GraphError("cannot multiply graphs of different arity")
    n = g1.num_vertices + g2.num_vertices
    prod = expand(g1, n) * expand(g2, n)
    out = {}
    for mono, c in prod.terms.items():
        g = monomial_graph(mono, g1.arity)
        if g is not None:
            if c.denominator != 1 or c < 0:
                raise ArithmeticError(f"non-integral coefficient {c} in realization product")
            out[g] = int(c)
    return dict(sorted(out.items(), key=lambda kv: kv[0].key))


def oracle_residual(g1: LabeledGraph, g2: LabeledGraph) -> TruncatedPolynomial:
    """``expand(g1) expand(g2) - sum c^G expand(G)``; zero exactly when the product closes."""
    n = g1.num_vertices + g2.num_vertices
    acc: dict = defaultdict(Fraction, (expand(g1, n) * expand(g2, n)).terms)
    for g, c in oracle_structure_constants(g1, g2).items():
        for mono in expand(g, n).terms:
            acc[mono] -= c
    return TruncatedPolynomial(n, acc)
