"""Orbit sums ``MM_Gamma``: the unlabeled graph algebras as subalgebras of the labeled ones."""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Callable

from .algebra import AlgebraElement, TensorElement, coproduct_M, product_M, register_product
from .graphs import LabeledGraph, UnlabeledGraph, canonicalize, enumerate_graphs, format_graph, labelings_of


class NotInSpan(ValueError):
    """A labeled element is not constant on some relabeling orbit."""


def MM(g: LabeledGraph | UnlabeledGraph, coeff=1) -> AlgebraElement:
    u = g if isinstance(g, UnlabeledGraph) else canonicalize(g)
    return AlgebraElement.monomial("MM", u, coeff)


def mm_expand(x: AlgebraElement | UnlabeledGraph) -> AlgebraElement:
    if isinstance(x, UnlabeledGraph):
        x = MM(x)
    if x.basis != "MM":
        raise NotInSpan(f"mm_expand expects the MM basis, got {x.basis}")
    acc: dict = defaultdict(Fraction)
    for u, c in x.items():
        for g in labelings_of(u):
            acc[g] += c
    return AlgebraElement("M", acc)


def mm_recognize(x: AlgebraElement) -> AlgebraElement:
    """Rewrite an ``M`` element constant on orbits as an ``MM`` combination."""
    by_class: dict = defaultdict(dict)
    for g, c in x.items():
        by_class[canonicalize(g)][g] = c
    out = {}
    for u, coeffs in by_class.items():
        orbit = labelings_of(u)
        values = {coeffs.get(g, Fraction(0)) for g in orbit}
        if len(values) != 1:
            raise NotInSpan(f"coefficients vary on the orbit of {format_graph(u.canonical)}")
        out[u] = values.pop()
    return AlgebraElement("MM", out)


def mm_recognize_tensor(t: TensorElement) -> TensorElement:
    """Joint recognition on pairs: constant on each (orbit x orbit) block."""
    by_pair: dict = defaultdict(dict)
    for (a, b), c in t.items():
        by_pair[(canonicalize(a), canonicalize(b))][(a, b)] = c
    out = {}
    for (u, w), coeffs in by_pair.items():
        values = {coeffs.get((a, b), Fraction(0)) for a in labelings_of(u) for b in labelings_of(w)}
        if len(values) != 1:
            raise NotInSpan(
                f"coefficients vary on the orbit pair {format_graph(u.canonical)} (x) {format_graph(w.canonical)}"
            )
        out[(u, w)] = values.pop()
    return TensorElement(("MM", "MM"), out)


def mm_product(x: AlgebraElement, y: AlgebraElement, product: Callable = product_M) -> AlgebraElement:
    """Expand, multiply in the ``M`` basis, recognize back."""
    return mm_recognize(product(mm_expand(x), mm_expand(y)))


def mm_coproduct(x: AlgebraElement, coproduct: Callable = coproduct_M) -> TensorElement:
    return mm_recognize_tensor(coproduct(mm_expand(x)))


def mm_tensor_expand(t: TensorElement) -> TensorElement:
    return t.map(mm_expand, mm_expand)


def unlabeled_basis(n: int, variant: str = "111", arity: int = 2) -> list[UnlabeledGraph]:
    return sorted({canonicalize(g) for g in enumerate_graphs(n, variant, arity)})


register_product("MM", mm_product)
