"""Sub-Hopf-algebras cut out by symmetry/loop conditions, and quotients by pattern ideals."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .algebra import AlgebraElement, TensorElement, coproduct_M, product_M
from .graphs import (
    GraphError,
    LabeledGraph,
    VariantFlags,
    contains_pattern,
    enumerate_graphs,
    format_graph,
    is_irreducible,
)


class IdealError(ValueError):
    """An operand of a quotient operation has support inside the ideal."""


@dataclass(frozen=True)
class ForbiddenSet:
    """Irreducible patterns; graphs containing one of them span the ideal."""

    patterns: tuple[LabeledGraph, ...]

    def __post_init__(self) -> None:
        pats = tuple(sorted(set(self.patterns)))
        if len({p.arity for p in pats}) > 1:
            raise GraphError("forbidden patterns must share one arity")
        for p in pats:
            if not is_irreducible(p):
                raise GraphError(f"forbidden pattern {format_graph(p)} is not irreducible")
        object.__setattr__(self, "patterns", pats)

    def __or__(self, other: ForbiddenSet) -> ForbiddenSet:
        return ForbiddenSet(self.patterns + other.patterns)

    def __len__(self) -> int:
        return len(self.patterns)


# double arc 1=>2, double arc 2=>1, double loop
MULTIEDGE_PATTERNS = ForbiddenSet(
    (
        LabeledGraph.from_matrix([[0, 2], [0, 0]]),
        LabeledGraph.from_matrix([[0, 0], [2, 0]]),
        LabeledGraph.from_matrix([[2]]),
    )
)
LOOP_PATTERNS = ForbiddenSet((LabeledGraph.from_matrix([[1]]),))

PRESETS = {
    "none": ForbiddenSet(()),
    "simple": MULTIEDGE_PATTERNS,
    "loopless": LOOP_PATTERNS,
    "simple-loopless": MULTIEDGE_PATTERNS | LOOP_PATTERNS,
}


def multiedge_patterns(arity: int) -> ForbiddenSet:
    """Doubled copies of every irreducible degree-1 graph of the given arity."""
    return ForbiddenSet(tuple(LabeledGraph(arity, g.num_vertices, [(t, 2) for t, _ in g.edges])
                              for g in enumerate_graphs(1, "111", arity)))


def in_subvariant(g: LabeledGraph, v: Union[str, VariantFlags]) -> bool:
    """Orientation and loop conditions only; multi-edges are removed by quotients."""
    v = VariantFlags.parse(v)
    return VariantFlags(v.oriented, v.loops, True).admits(g)


def in_ideal(g: LabeledGraph, f: ForbiddenSet) -> bool:
    return any(contains_pattern(g, p) for p in f.patterns)


def _require_outside(x: AlgebraElement, f: ForbiddenSet) -> None:
    for g in x.terms:
        if in_ideal(g, f):
            raise IdealError(f"{format_graph(g)} lies in the ideal")


def reduce_mod(x: AlgebraElement, f: ForbiddenSet) -> AlgebraElement:
    return AlgebraElement(x.basis, {g: c for g, c in x.terms.items() if not in_ideal(g, f)})


def reduce_tensor_mod(t: TensorElement, f: ForbiddenSet) -> TensorElement:
    return TensorElement(
        t.bases, {(a, b): c for (a, b), c in t.terms.items() if not (in_ideal(a, f) or in_ideal(b, f))}
    )


def quotient_product(x: AlgebraElement, y: AlgebraElement, f: ForbiddenSet) -> AlgebraElement:
    _require_outside(x, f)
    _require_outside(y, f)
    return reduce_mod(product_M(x, y), f)


def quotient_coproduct(x: AlgebraElement, f: ForbiddenSet) -> TensorElement:
    _require_outside(x, f)
    return reduce_tensor_mod(coproduct_M(x), f)


def quotient_basis(n: int, f: ForbiddenSet, arity: int = 2, variant: str = "111") -> list[LabeledGraph]:
    """Representatives ``G`` outside the ideal, degree ``n``."""
    return [g for g in enumerate_graphs(n, variant, arity) if not in_ideal(g, f)]


def load_patterns(graphs: Iterable[LabeledGraph]) -> ForbiddenSet:
    return ForbiddenSet(tuple(graphs))
