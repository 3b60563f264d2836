"""Free-module arithmetic and the Hopf structure on the ``M`` basis and its dual ``S`` basis.

Elements are finite linear combinations with :class:`fractions.Fraction`
coefficients. Three basis tags share one class: ``"M"`` (labeled graphs),
``"S"`` (the dual basis) and ``"MM"`` (orbit sums, indexed by
:class:`~graphhopf.graphs.UnlabeledGraph`).
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence, Union

from .graphs import LabeledGraph, GraphError, admissible_cuts, concatenate, restrict

BASES = ("M", "S", "MM")
Scalar = Union[int, Fraction]


class BasisMismatch(TypeError):
    """Operands live in different bases, or in a basis the operation does not accept."""


def _check_basis(name: str, *elements: "AlgebraElement | TensorElement", basis: str) -> None:
    for x in elements:
        tags = x.bases if isinstance(x, TensorElement) else (x.basis,)
        if any(t != basis for t in tags):
            raise BasisMismatch(f"{name} expects basis {basis}, got {'/'.join(tags)}")


def _sort_key(index) -> tuple:
    return index.key if hasattr(index, "key") else (index,)


class AlgebraElement:
    """Finite linear combination of basis indices with exact rational coefficients."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Union[Mapping, Iterable] = ()):
        if basis not in BASES:
            raise BasisMismatch(f"unknown basis {basis!r}")
        acc: dict = defaultdict(Fraction)
        for index, c in (terms.items() if isinstance(terms, Mapping) else terms):
            acc[index] += Fraction(c)
        self.basis = basis
        self.terms = {i: c for i, c in sorted(acc.items(), key=lambda kv: _sort_key(kv[0])) if c}

    @classmethod
    def monomial(cls, basis: str, index, coeff: Scalar = 1) -> AlgebraElement:
        return cls(basis, {index: coeff})

    @classmethod
    def zero(cls, basis: str) -> AlgebraElement:
        return cls(basis)

    def items(self) -> Iterator[tuple[Hashable, Fraction]]:
        return iter(self.terms.items())

    def coefficient(self, index) -> Fraction:
        return self.terms.get(index, Fraction(0))

    def homogeneous(self, n: int) -> AlgebraElement:
        return AlgebraElement(self.basis, {i: c for i, c in self.terms.items() if i.degree == n})

    def degrees(self) -> set[int]:
        return {i.degree for i in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _same(self, other: AlgebraElement) -> None:
        if not isinstance(other, AlgebraElement) or other.basis != self.basis:
            raise BasisMismatch("cannot combine elements of different bases")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._same(other)
        return AlgebraElement(self.basis, itertools.chain(self.terms.items(), other.terms.items()))

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.basis, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> AlgebraElement:
        if not isinstance(scalar, Rational):
            return NotImplemented
        return AlgebraElement(self.basis, {i: c * scalar for i, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.basis, tuple(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, c in self.terms.items():
            coeff = "" if c == 1 else "-" if c == -1 else f"{c}*"
            parts.append(f"{coeff}{self.basis}[{i}]")
        return " + ".join(parts).replace("+ -", "- ")


class TensorElement:
    """Finite linear combination of ordered pairs of basis indices."""

    __slots__ = ("bases", "terms")

    def __init__(self, bases: tuple[str, str], terms: Union[Mapping, Iterable] = ()):
        acc: dict = defaultdict(Fraction)
        for pair, c in (terms.items() if isinstance(terms, Mapping) else terms):
            acc[tuple(pair)] += Fraction(c)
        self.bases = tuple(bases)
        self.terms = {
            p: c for p, c in sorted(acc.items(), key=lambda kv: tuple(_sort_key(i) for i in kv[0])) if c
        }

    @classmethod
    def tensor(cls, x: AlgebraElement, y: AlgebraElement) -> TensorElement:
        return cls(
            (x.basis, y.basis),
            (((i, j), a * b) for i, a in x.terms.items() for j, b in y.terms.items()),
        )

    def items(self):
        return iter(self.terms.items())

    def flip(self) -> TensorElement:
        return TensorElement(self.bases[::-1], {(j, i): c for (i, j), c in self.terms.items()})

    def map(self, left: Callable, right: Callable) -> TensorElement:
        """Apply linear maps (basis index -> element) on each leg."""
        acc: dict = defaultdict(Fraction)
        bases = None
        for (i, j), c in self.terms.items():
            a, b = left(i), right(j)
            bases = (a.basis, b.basis)
            for ii, ca in a.terms.items():
                for jj, cb in b.terms.items():
                    acc[(ii, jj)] += c * ca * cb
        return TensorElement(bases or self.bases, acc)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: TensorElement) -> TensorElement:
        if self.bases != other.bases:
            raise BasisMismatch("cannot add tensors over different bases")
        return TensorElement(self.bases, itertools.chain(self.terms.items(), other.terms.items()))

    def __neg__(self) -> TensorElement:
        return TensorElement(self.bases, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: TensorElement) -> TensorElement:
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> TensorElement:
        if not isinstance(scalar, Rational):
            return NotImplemented
        return TensorElement(self.bases, {p: c * scalar for p, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.bases == other.bases and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        b1, b2 = self.bases
        return " + ".join(f"{c}*{b1}[{i}] (x) {b2}[{j}]" for (i, j), c in self.terms.items())


def M(g: Union[LabeledGraph, Sequence[Sequence[int]]], coeff: Scalar = 1) -> AlgebraElement:
    """Basis element ``M_G``; a nested list is read as an adjacency matrix."""
    if not isinstance(g, LabeledGraph):
        g = LabeledGraph.from_matrix(g)
    if not g.is_valid:
        raise GraphError("basis graphs may not have isolated vertices")
    return AlgebraElement.monomial("M", g, coeff)


def S(g: Union[LabeledGraph, Sequence[Sequence[int]]], coeff: Scalar = 1) -> AlgebraElement:
    """Dual basis element ``S^G``."""
    return AlgebraElement("S", M(g, coeff).terms)


def _bilinear(x: AlgebraElement, y: AlgebraElement, rule: Callable, basis: str) -> AlgebraElement:
    acc: dict = defaultdict(Fraction)
    for g1, a in x.terms.items():
        for g2, b in y.terms.items():
            for g, c in rule(g1, g2).items():
                acc[g] += a * b * c
    return AlgebraElement(basis, acc)


def _linear_tensor(x: AlgebraElement, rule: Callable, bases: tuple[str, str]) -> TensorElement:
    acc: dict = defaultdict(Fraction)
    for g, a in x.terms.items():
        for pair, c in rule(g).items():
            acc[pair] += a * c
    return TensorElement(bases, acc)


# -- the M basis ----------------------------------------------------------------


@lru_cache(maxsize=None)
def quasi_shuffles(m1: int, m2: int) -> tuple[tuple[int, tuple[int, ...], tuple[int, ...]], ...]:
    """Pairs of increasing maps ``[m1] -> [p]``, ``[m2] -> [p]`` whose images cover ``[p]``.

    Returned as ``(p, f, g)`` with ``f[i-1]`` the image of ``i``.
    """
    if m1 == 0:
        return ((m2, (), tuple(range(1, m2 + 1))),)
    if m2 == 0:
        return ((m1, tuple(range(1, m1 + 1)), ()),)
    out = []
    # the last target position holds the last vertex of the first graph, the second, or both
    for p, f, g in quasi_shuffles(m1 - 1, m2):
        out.append((p + 1, f + (p + 1,), g))
    for p, f, g in quasi_shuffles(m1, m2 - 1):
        out.append((p + 1, f, g + (p + 1,)))
    for p, f, g in quasi_shuffles(m1 - 1, m2 - 1):
        out.append((p + 1, f + (p + 1,), g + (p + 1,)))
    return tuple(out)


@lru_cache(maxsize=None)
def structure_constants(g1: LabeledGraph, g2: LabeledGraph) -> dict[LabeledGraph, int]:
    """Coefficients ``c`` with ``M_{g1} M_{g2} = sum_G c[G] M_G``, by superposition."""
    if g1.arity != g2.arity:
        raise GraphError("cannot multiply graphs of different arity")
    out: dict = defaultdict(int)
    for p, f, g in quasi_shuffles(g1.num_vertices, g2.num_vertices):
        edges = [(tuple(f[v - 1] for v in t), mult) for t, mult in g1.edges]
        edges += [(tuple(g[v - 1] for v in t), mult) for t, mult in g2.edges]
        out[LabeledGraph(g1.arity, p, edges)] += 1
    return dict(out)


def product_M(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    _check_basis("product_M", x, y, basis="M")
    return _bilinear(x, y, structure_constants, "M")


@lru_cache(maxsize=None)
def _cut_pairs(g: LabeledGraph) -> dict[tuple[LabeledGraph, LabeledGraph], int]:
    m = g.num_vertices
    out: dict = defaultdict(int)
    for i in admissible_cuts(g):
        out[(restrict(g, range(1, i + 1))[0], restrict(g, range(i + 1, m + 1))[0])] += 1
    return dict(out)


def coproduct_M(x: AlgebraElement) -> TensorElement:
    """Sum over admissible cuts of prefix (x) suffix."""
    _check_basis("coproduct_M", x, basis="M")
    return _linear_tensor(x, _cut_pairs, ("M", "M"))


def counit(x: AlgebraElement) -> Fraction:
    return sum((c for i, c in x.terms.items() if i.degree == 0), Fraction(0))


def unit(basis: str = "M", arity: int = 2) -> AlgebraElement:
    from .graphs import UnlabeledGraph

    e = LabeledGraph.empty(arity)
    return AlgebraElement.monomial(basis, UnlabeledGraph(e) if basis == "MM" else e)


@lru_cache(maxsize=None)
def _antipode_graph(g: LabeledGraph) -> AlgebraElement:
    if g.degree == 0:
        return M(g)
    # S(x) = -x - sum S(x') x'' over the reduced coproduct
    acc = -M(g)
    for (left, right), c in _cut_pairs(g).items():
        if left.degree == 0 or right.degree == 0:
            continue
        acc = acc - product_M(_antipode_graph(left), M(right)) * c
    return acc


def antipode_M(x: AlgebraElement) -> AlgebraElement:
    _check_basis("antipode_M", x, basis="M")
    acc = AlgebraElement.zero("M")
    for g, c in x.terms.items():
        acc = acc + _antipode_graph(g) * c
    return acc


def tensor_product(t1: TensorElement, t2: TensorElement, product: Callable | None = None) -> TensorElement:
    """Componentwise product ``(a (x) b)(c (x) d) = ac (x) bd``."""
    if t1.bases != t2.bases:
        raise BasisMismatch("tensor legs live in different bases")
    if product is None:
        product = _PRODUCTS[t1.bases[0]]
    acc: dict = defaultdict(Fraction)
    for (a, b), c1 in t1.terms.items():
        for (c, d), c2 in t2.terms.items():
            left = product(AlgebraElement.monomial(t1.bases[0], a), AlgebraElement.monomial(t1.bases[0], c))
            right = product(AlgebraElement.monomial(t1.bases[1], b), AlgebraElement.monomial(t1.bases[1], d))
            for i, ci in left.terms.items():
                for j, cj in right.terms.items():
                    acc[(i, j)] += c1 * c2 * ci * cj
    return TensorElement(t1.bases, acc)


def multiply_legs(t: TensorElement, product: Callable | None = None) -> AlgebraElement:
    """The multiplication map ``a (x) b -> ab``."""
    if product is None:
        product = _PRODUCTS[t.bases[0]]
    acc = AlgebraElement.zero(t.bases[0])
    for (a, b), c in t.terms.items():
        acc = acc + product(AlgebraElement.monomial(t.bases[0], a), AlgebraElement.monomial(t.bases[1], b)) * c
    return acc


# -- the dual basis -------------------------------------------------------------


@lru_cache(maxsize=None)
def _concat_rule(g1: LabeledGraph, g2: LabeledGraph) -> dict[LabeledGraph, int]:
    return {concatenate(g1, g2): 1}


def product_S(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """``S^{G1} S^{G2} = S^{G1 G2}`` (concatenation)."""
    _check_basis("product_S", x, y, basis="S")
    return _bilinear(x, y, _concat_rule, "S")


@lru_cache(maxsize=None)
def unshuffle(g: LabeledGraph) -> dict[tuple[LabeledGraph, LabeledGraph], int]:
    """All ``(G', G'')`` with their multiplicity ``c^G_{G',G''}``.

    Reads the superposition rule backwards: cover the vertices of ``g`` by two
    sets ``A`` and ``B``, hand each edge to a side containing it (edges inside
    ``A`` and ``B`` split their multiplicity), and keep splits where both
    sides are free of isolated vertices.
    """
    m, k = g.num_vertices, g.arity
    out: dict = defaultdict(int)
    # role 1: only in A, 2: only in B, 3: both
    for roles in itertools.product((1, 2, 3), repeat=m):
        shared, only_a, only_b = [], [], []
        ok = True
        for t, mult in g.edges:
            rs = {roles[v - 1] for v in t}
            if rs == {3}:
                shared.append((t, mult))
            elif rs <= {1, 3}:
                only_a.append((t, mult))
            elif rs <= {2, 3}:
                only_b.append((t, mult))
            else:
                ok = False
                break
        if not ok:
            continue
        a_vertices = [v for v in range(1, m + 1) if roles[v - 1] != 2]
        b_vertices = [v for v in range(1, m + 1) if roles[v - 1] != 1]
        pos_a = {v: i + 1 for i, v in enumerate(a_vertices)}
        pos_b = {v: i + 1 for i, v in enumerate(b_vertices)}
        for split in itertools.product(*(range(mult + 1) for _, mult in shared)):
            ea = only_a + [(t, s) for (t, _), s in zip(shared, split)]
            eb = only_b + [(t, mult - s) for (t, mult), s in zip(shared, split)]
            left = LabeledGraph(k, len(a_vertices), [(tuple(pos_a[v] for v in t), s) for t, s in ea])
            right = LabeledGraph(k, len(b_vertices), [(tuple(pos_b[v] for v in t), s) for t, s in eb])
            if left.is_valid and right.is_valid:
                out[(left, right)] += 1
    return dict(out)


def coproduct_S(x: AlgebraElement) -> TensorElement:
    """Dual of the product: ``S^G -> sum c^G_{G',G''} S^{G'} (x) S^{G''}``."""
    _check_basis("coproduct_S", x, basis="S")
    return _linear_tensor(x, unshuffle, ("S", "S"))


def pairing(d: AlgebraElement, x: AlgebraElement) -> Fraction:
    """``<S^G, M_H> = [G == H]`` extended bilinearly."""
    _check_basis("pairing", d, basis="S")
    _check_basis("pairing", x, basis="M")
    return sum((c * x.coefficient(g) for g, c in d.terms.items()), Fraction(0))


def tensor_pairing(d: TensorElement, x: TensorElement) -> Fraction:
    _check_basis("tensor_pairing", d, basis="S")
    _check_basis("tensor_pairing", x, basis="M")
    return sum((c * x.terms.get(p, 0) for p, c in d.terms.items()), Fraction(0))


_PRODUCTS: dict[str, Callable] = {"M": product_M, "S": product_S}


def register_product(basis: str, product: Callable) -> None:
    _PRODUCTS[basis] = product
