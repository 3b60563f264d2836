"""Just enough of Sym and QSym to test the maps into and out of the graph algebras.

Sym is modelled on its complete basis ``S^I`` (concatenation product,
``Delta S_n = sum_{p+q=n} S_p (x) S_q``); QSym on its monomial basis ``M_I``
(quasi-shuffle product, deconcatenation coproduct). Elements of both are plain
``dict[Composition, Fraction]``.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .algebra import AlgebraElement, BasisMismatch, S, TensorElement, product_S
from .graphs import LabeledGraph, gamma, gamma_pq

Composition = tuple[int, ...]
SymElement = dict  # Composition -> Fraction
MORPHISMS = ("loop", "arc12", "arc21", "gamma_pq")


class CompositionError(ValueError):
    pass


def composition(parts: Iterable[int]) -> Composition:
    parts = tuple(int(p) for p in parts)
    if any(p < 1 for p in parts):
        raise CompositionError(f"composition parts must be positive, got {parts}")
    return parts


def compositions(n: int) -> list[Composition]:
    """All compositions of ``n`` in lexicographic order."""
    if n == 0:
        return [()]
    return [(first,) + rest for first in range(1, n + 1) for rest in compositions(n - first)]


def _clean(d: dict) -> dict:
    return {k: Fraction(v) for k, v in sorted(d.items()) if v}


# -- QSym -----------------------------------------------------------------------


@lru_cache(maxsize=None)
def stuffle(a: Composition, b: Composition) -> dict[Composition, int]:
    """Quasi-shuffle product of monomial quasi-symmetric functions."""
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    out: dict = defaultdict(int)
    for c, n in stuffle(a[1:], b).items():
        out[(a[0],) + c] += n
    for c, n in stuffle(a, b[1:]).items():
        out[(b[0],) + c] += n
    for c, n in stuffle(a[1:], b[1:]).items():
        out[(a[0] + b[0],) + c] += n
    return dict(out)


def qsym_product(x: SymElement, y: SymElement) -> SymElement:
    out: dict = defaultdict(Fraction)
    for a, ca in x.items():
        for b, cb in y.items():
            for c, n in stuffle(a, b).items():
                out[c] += ca * cb * n
    return _clean(out)


def qsym_coproduct(x: SymElement) -> dict[tuple[Composition, Composition], Fraction]:
    out: dict = defaultdict(Fraction)
    for a, c in x.items():
        for i in range(len(a) + 1):
            out[(a[:i], a[i:])] += c
    return _clean(out)


def qsym_specialize(x: AlgebraElement) -> SymElement:
    """Image under ``x[i,j] -> x_i x_j``: ``M_G -> M_I`` with ``I`` the vertex degree sequence.

    A loop meets its vertex twice, so it counts twice.
    """
    if x.basis != "M":
        raise BasisMismatch("qsym_specialize expects the M basis")
    out: dict = defaultdict(Fraction)
    for g, c in x.items():
        out[tuple(g.vertex_occurrences())] += c
    return _clean(out)


def qsym_specialize_tensor(t: TensorElement) -> dict[tuple[Composition, Composition], Fraction]:
    out: dict = defaultdict(Fraction)
    for (g1, g2), c in t.items():
        out[(tuple(g1.vertex_occurrences()), tuple(g2.vertex_occurrences()))] += c
    return _clean(out)


# -- Sym and the morphisms into the dual ----------------------------------------


def sym_coproduct(i: Composition) -> dict[tuple[Composition, Composition], Fraction]:
    """``Delta S^I`` as a product of ``Delta S_n = sum S_p (x) S_q``, zero parts dropped."""
    acc: dict = {((), ()): Fraction(1)}
    for n in composition(i):
        nxt: dict = defaultdict(Fraction)
        for (a, b), c in acc.items():
            for p in range(n + 1):
                q = n - p
                nxt[(a + ((p,) if p else ()), b + ((q,) if q else ()))] += c
        acc = nxt
    return _clean(acc)


def _generator_image(which: str, n: int) -> AlgebraElement:
    if which == "loop":
        return S(gamma(n))
    if which == "arc12":
        return S(gamma_pq(n, 0))
    if which == "arc21":
        return S(gamma_pq(0, n))
    if which == "gamma_pq":
        # the p = 0 and q = 0 summands are the single-direction arc graphs
        acc = AlgebraElement.zero("S")
        for p in range(n + 1):
            acc = acc + S(gamma_pq(p, n - p))
        return acc
    raise CompositionError(f"unknown morphism {which!r}; choose from {', '.join(MORPHISMS)}")


def sym_morphism(which: str, i: Iterable[int], arity: int = 2) -> AlgebraElement:
    """Image of ``S^I = S_{i1} ... S_{ir}`` in the dual graph algebra."""
    acc = S(LabeledGraph.empty(arity))
    for n in composition(i):
        acc = product_S(acc, _generator_image(which, n))
    return acc


def sym_morphism_tensor(which: str, t: dict[tuple[Composition, Composition], Fraction]) -> TensorElement:
    acc = TensorElement(("S", "S"))
    for (a, b), c in t.items():
        acc = acc + TensorElement.tensor(sym_morphism(which, a), sym_morphism(which, b)) * c
    return acc



# the single arc 1->2: Delta M_G = 1 (x) M_G + M_G (x) 1 specializes to
# 1 (x) M_11 + M_11 (x) 1, which misses the M_1 (x) M_1 term of Delta M_11
QSYM_COUNTEREXAMPLE = LabeledGraph.from_matrix([[0, 1], [0, 0]])
