"""Exhaustive and randomized property checks, shared by the test-suite and ``graphhopf verify``.

Every check returns a :class:`Report`; ``report.counterexample`` is the first
failure found (``None`` on success) and ``report.checked`` counts the cases.
"""
from __future__ import annotations

import itertools
import random
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional

from .algebra import (
    M,
    S,
    AlgebraElement,
    TensorElement,
    antipode_M,
    coproduct_M,
    coproduct_S,
    counit,
    multiply_legs,
    product_M,
    product_S,
    structure_constants,
    tensor_product,
    unit,
    unshuffle,
)
from .enumeration import (
    dim_labeled,
    dim_series_111,
    dimensions_from_irreducibles,
    inclusion_exclusion_count,
    irreducible_count,
    irreducibles_from_dimensions,
    orbit_partition_count,
    dim_unlabeled,
)
from .graphs import (
    LabeledGraph,
    VariantFlags,
    admissible_cuts,
    concatenate,
    concatenate_all,
    enumerate_graphs,
    factor_irreducible,
    format_graph,
)
from .realization import oracle_residual, oracle_structure_constants
from .structures import MULTIEDGE_PATTERNS, ForbiddenSet, in_ideal, in_subvariant, quotient_coproduct, quotient_product
from .sym import (
    MORPHISMS,
    QSYM_COUNTEREXAMPLE,
    compositions,
    qsym_coproduct,
    qsym_product,
    qsym_specialize,
    qsym_specialize_tensor,
    sym_coproduct,
    sym_morphism,
    sym_morphism_tensor,
)
from .unlabeled import NotInSpan, mm_coproduct, mm_expand, mm_product, unlabeled_basis, MM

RANDOM_SEED = 20051001
RANDOM_CASES = 200


@dataclass
class Report:
    name: str
    checked: int = 0
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def fail(self, detail: str) -> "Report":
        if self.counterexample is None:
            self.counterexample = detail
        return self

    def __str__(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = "" if self.ok else f": {self.counterexample}"
        return f"{status} {self.name} ({self.checked} cases){tail}"


def graphs_upto(max_degree: int, variant: str = "111", arity: int = 2) -> list[LabeledGraph]:
    return [g for n in range(max_degree + 1) for g in enumerate_graphs(n, variant, arity)]


def tuples_upto(max_degree: int, length: int, variant: str = "111", arity: int = 2) -> Iterator[tuple]:
    """Tuples of graphs whose degrees sum to at most ``max_degree``."""
    by_degree = [enumerate_graphs(n, variant, arity) for n in range(max_degree + 1)]
    for degs in itertools.product(range(max_degree + 1), repeat=length):
        if sum(degs) <= max_degree:
            yield from itertools.product(*(by_degree[d] for d in degs))


def _names(*graphs: LabeledGraph) -> str:
    return ", ".join(format_graph(g) for g in graphs)


# -- Hopf axioms on single basis elements ----------------------------------------


def _coproduct_triples(x: AlgebraElement, first: bool) -> dict:
    acc: dict = defaultdict(Fraction)
    for (a, b), c in coproduct_M(x).items():
        inner = coproduct_M(M(a) if first else M(b))
        for (p, q), d in inner.items():
            acc[(p, q, b) if first else (a, p, q)] += c * d
    return {k: v for k, v in acc.items() if v}


def associative_at(g1, g2, g3) -> bool:
    x, y, z = M(g1), M(g2), M(g3)
    return product_M(product_M(x, y), z) == product_M(x, product_M(y, z))


def coassociative_at(g) -> bool:
    return _coproduct_triples(M(g), True) == _coproduct_triples(M(g), False)


def compatible_at(g1, g2) -> bool:
    return coproduct_M(product_M(M(g1), M(g2))) == tensor_product(coproduct_M(M(g1)), coproduct_M(M(g2)))


def counit_at(g) -> bool:
    x = M(g)
    delta = coproduct_M(x)
    left = AlgebraElement("M", {b: c * counit(M(a)) for (a, b), c in delta.items()})
    right = AlgebraElement("M", {a: c * counit(M(b)) for (a, b), c in delta.items()})
    return left == x and right == x


def antipode_at(g) -> bool:
    delta = coproduct_M(M(g))
    expected = unit("M", g.arity) * counit(M(g))
    left = multiply_legs(delta.map(lambda a: antipode_M(M(a)), M))
    right = multiply_legs(delta.map(M, lambda b: antipode_M(M(b))))
    return left == expected and right == expected


def check_hopf_axioms(max_degree: int = 3, arity: int = 2, variant: str = "111") -> Report:
    r = Report(f"hopf-axioms(k={arity}, degree<={max_degree})")
    for g1, g2, g3 in tuples_upto(max_degree, 3, variant, arity):
        r.checked += 1
        if not associative_at(g1, g2, g3):
            return r.fail(f"associativity at {_names(g1, g2, g3)}")
    for g1, g2 in tuples_upto(max_degree, 2, variant, arity):
        r.checked += 1
        if not compatible_at(g1, g2):
            return r.fail(f"coproduct not multiplicative at {_names(g1, g2)}")
    for g in graphs_upto(max_degree, variant, arity):
        r.checked += 1
        if not coassociative_at(g):
            return r.fail(f"coassociativity at {_names(g)}")
        if not counit_at(g):
            return r.fail(f"counit law at {_names(g)}")
        if not antipode_at(g):
            return r.fail(f"antipode identity at {_names(g)}")
    return r


def random_cases(cases: int = RANDOM_CASES, degree: int = 4, seed: int = RANDOM_SEED, arity: int = 2):
    """Reproducible ``(triple, graph)`` samples: a triple of total degree ``degree`` and one graph of that degree."""
    rng = random.Random(seed)
    by_degree = [enumerate_graphs(n, "111", arity) for n in range(degree + 1)]
    for _ in range(cases):
        cut = sorted(rng.randint(0, degree) for _ in range(2))
        degs = (cut[0], cut[1] - cut[0], degree - cut[1])
        triple = tuple(rng.choice(by_degree[d]) for d in degs)
        yield triple, rng.choice(by_degree[degree])


def check_hopf_random(cases: int = RANDOM_CASES, degree: int = 4, seed: int = RANDOM_SEED, arity: int = 2) -> Report:
    r = Report(f"hopf-axioms-random(degree={degree}, seed={seed})")
    for (g1, g2, g3), g in random_cases(cases, degree, seed, arity):
        r.checked += 1
        if not associative_at(g1, g2, g3):
            return r.fail(f"associativity at {_names(g1, g2, g3)}")
        if not compatible_at(g1, concatenate(g2, g3)):
            return r.fail(f"coproduct not multiplicative at {_names(g1, concatenate(g2, g3))}")
        if not (coassociative_at(g) and counit_at(g) and antipode_at(g)):
            return r.fail(f"coalgebra/antipode law at {_names(g)}")
    return r


# -- realization oracle ----------------------------------------------------------


def oracle_pairs(max_degree: int = 3, arity: int = 2, square_degree: int | None = 2) -> list[tuple]:
    """Ordered pairs of total degree ``<= max_degree``, plus all pairs of degree ``<= square_degree`` graphs."""
    pairs = list(tuples_upto(max_degree, 2, "111", arity))
    if square_degree is not None:
        small = graphs_upto(square_degree, "111", arity)
        seen = set(pairs)
        pairs += [p for p in itertools.product(small, small) if p not in seen]
    return pairs


def check_oracle(max_degree: int = 3, arity: int = 2, square_degree: int | None = 2) -> Report:
    r = Report(f"oracle(k={arity}, degree<={max_degree})")
    for g1, g2 in oracle_pairs(max_degree, arity, square_degree):
        r.checked += 1
        if structure_constants(g1, g2) != oracle_structure_constants(g1, g2):
            return r.fail(f"superposition rule disagrees with realization at {_names(g1, g2)}")
        if g1.degree + g2.degree <= max_degree and not oracle_residual(g1, g2).is_zero():
            return r.fail(f"realization product leaves a residual at {_names(g1, g2)}")
    return r


# -- duality and freeness --------------------------------------------------------


def check_duality(max_degree: int = 3, arity: int = 2) -> Report:
    r = Report(f"duality(degree<={max_degree})")
    from_products: dict = defaultdict(dict)
    for g1, g2 in tuples_upto(max_degree, 2, "111", arity):
        for g, c in structure_constants(g1, g2).items():
            from_products[g][(g1, g2)] = c
    for g in graphs_upto(max_degree, "111", arity):
        r.checked += 1
        # <S^{G1} S^{G2}, M_G> is the coefficient of M_{G1} (x) M_{G2} in Delta M_G
        delta = coproduct_M(M(g)).terms
        for (a, b), c in delta.items():
            if product_S(S(a), S(b)) != S(g) or c != 1:
                return r.fail(f"dual product is not deconcatenation at {_names(g)}")
        if len(delta) != len(admissible_cuts(g)):
            return r.fail(f"repeated cut pair at {_names(g)}")
        # <Delta' S^G, M_{G1} (x) M_{G2}> = <S^G, M_{G1} M_{G2}>
        if dict(unshuffle(g)) != from_products[g]:
            return r.fail(f"dual coproduct disagrees with structure constants at {_names(g)}")
    return r


def check_freeness(max_degree: int = 3, arity: int = 2) -> Report:
    r = Report(f"freeness(degree<={max_degree})")
    for g in graphs_upto(max_degree, "111", arity):
        r.checked += 1
        factors = factor_irreducible(g)
        if concatenate_all(factors, arity) != g:
            return r.fail(f"factorization does not round-trip at {_names(g)}")
        if any(len(admissible_cuts(f)) != 2 for f in factors):
            return r.fail(f"reducible factor in {_names(g)}")
    dims = [dim_labeled(n, "111", arity) for n in range(max_degree + 1)]
    direct = [0] + [irreducible_count(n, "111", arity) for n in range(1, max_degree + 1)]
    if irreducibles_from_dimensions(dims) != direct:
        return r.fail(f"irreducible counts {direct[1:]} differ from series inversion of {dims}")
    for n in range(max_degree + 1):
        if dimensions_from_irreducibles(direct, n) != dims[n]:
            return r.fail(f"free-algebra dimension identity fails in degree {n}")
    return r


# -- sub-Hopf algebras and quotients ---------------------------------------------


def check_subhopf(max_degree: int = 3, variants: Iterable[str] = ("011", "101", "001")) -> Report:
    r = Report(f"sub-hopf(degree<={max_degree})")
    for v in variants:
        inside = VariantFlags.parse(v)
        gens = VariantFlags(inside.oriented, inside.loops, True)
        for g1, g2 in tuples_upto(max_degree, 2, str(gens)):
            r.checked += 1
            if not all(in_subvariant(g, v) for g in product_M(M(g1), M(g2)).terms):
                return r.fail(f"product leaves variant {v} at {_names(g1, g2)}")
        for g in graphs_upto(max_degree, str(gens)):
            r.checked += 1
            if not all(in_subvariant(a, v) and in_subvariant(b, v) for a, b in coproduct_M(M(g)).terms):
                return r.fail(f"coproduct leaves variant {v} at {_names(g)}")
            if not all(in_subvariant(h, v) for h in antipode_M(M(g)).terms):
                return r.fail(f"antipode leaves variant {v} at {_names(g)}")
    return r


def check_quotient(max_degree: int = 3, patterns: ForbiddenSet = MULTIEDGE_PATTERNS) -> Report:
    r = Report(f"quotient(degree<={max_degree}, {len(patterns)} patterns)")
    for g, h in tuples_upto(max_degree, 2):
        if not in_ideal(g, patterns):
            continue
        r.checked += 1
        prod = product_M(M(g), M(h)).terms
        if not all(in_ideal(x, patterns) for x in prod):
            return r.fail(f"ideal property fails at {_names(g, h)}")
    for g in graphs_upto(max_degree):
        r.checked += 1
        if in_ideal(g, patterns):
            if not all(in_ideal(a, patterns) or in_ideal(b, patterns) for a, b in coproduct_M(M(g)).terms):
                return r.fail(f"coideal property fails at {_names(g)}")
    # quotient coassociativity and compatibility on the complement basis
    for g in graphs_upto(max_degree):
        if in_ideal(g, patterns):
            continue
        r.checked += 1
        if not _quotient_coassociative(g, patterns):
            return r.fail(f"quotient coproduct not coassociative at {_names(g)}")
    for g1, g2 in tuples_upto(max_degree, 2):
        if in_ideal(g1, patterns) or in_ideal(g2, patterns):
            continue
        r.checked += 1
        lhs = quotient_coproduct(quotient_product(M(g1), M(g2), patterns), patterns)
        rhs = tensor_product(
            quotient_coproduct(M(g1), patterns),
            quotient_coproduct(M(g2), patterns),
            lambda x, y: quotient_product(x, y, patterns),
        )
        if lhs != rhs:
            return r.fail(f"quotient coproduct not multiplicative at {_names(g1, g2)}")
    if patterns == MULTIEDGE_PATTERNS:
        for n in range(max_degree + 1):
            r.checked += 1
            count = sum(1 for g in enumerate_graphs(n) if not in_ideal(g, patterns))
            if count != inclusion_exclusion_count(n, 2, simple=True):
                return r.fail(f"quotient dimension {count} in degree {n} differs from 0/1 matrix count")
    return r


def _quotient_coassociative(g: LabeledGraph, patterns: ForbiddenSet) -> bool:
    def triples(first: bool) -> dict:
        acc: dict = defaultdict(Fraction)
        for (a, b), c in quotient_coproduct(M(g), patterns).items():
            for (p, q), d in quotient_coproduct(M(a) if first else M(b), patterns).items():
                acc[(p, q, b) if first else (a, p, q)] += c * d
        return {k: v for k, v in acc.items() if v}

    return triples(True) == triples(False)


# -- unlabeled algebras ----------------------------------------------------------


def _variant_ops(v: VariantFlags):
    """Product and coproduct for the variant, going through the quotient when multi-edges are off."""
    if v.multiedges:
        return product_M, coproduct_M
    return (lambda x, y: quotient_product(x, y, MULTIEDGE_PATTERNS),
            lambda x: quotient_coproduct(x, MULTIEDGE_PATTERNS))


def check_unlabeled(max_degree: int = 3, variants: Iterable[str] = ("111", "011", "101", "001", "110", "010", "100", "000")) -> Report:
    r = Report(f"unlabeled(degree<={max_degree})")
    for vtext in variants:
        v = VariantFlags.parse(vtext)
        product, coproduct = _variant_ops(v)
        classes = [unlabeled_basis(n, vtext) for n in range(max_degree + 1)]
        for n1 in range(max_degree + 1):
            for n2 in range(max_degree + 1 - n1):
                for u in classes[n1]:
                    for w in classes[n2]:
                        r.checked += 1
                        try:
                            z = mm_product(MM(u), MM(w), product)
                        except NotInSpan as exc:
                            return r.fail(f"variant {vtext}: product {u} * {w} leaves the orbit-sum span ({exc})")
                        if mm_expand(z) != product(mm_expand(MM(u)), mm_expand(MM(w))):
                            return r.fail(f"variant {vtext}: expansion mismatch for {u} * {w}")
                        if not all(v.admits(g.canonical) for g in z.terms):
                            return r.fail(f"variant {vtext}: product {u} * {w} leaves the variant")
        for n in range(max_degree + 1):
            for u in classes[n]:
                r.checked += 1
                try:
                    t = mm_coproduct(MM(u), coproduct)
                except NotInSpan as exc:
                    return r.fail(f"variant {vtext}: coproduct of {u} leaves the span ({exc})")
                if t.map(mm_expand, mm_expand) != coproduct(mm_expand(MM(u))):
                    return r.fail(f"variant {vtext}: coproduct expansion mismatch at {u}")
                lhs: dict = defaultdict(Fraction)
                rhs: dict = defaultdict(Fraction)
                for (a, b), c in t.items():
                    for (p, q), d in mm_coproduct(MM(a), coproduct).items():
                        lhs[(p, q, b)] += c * d
                    for (p, q), d in mm_coproduct(MM(b), coproduct).items():
                        rhs[(a, p, q)] += c * d
                if {k: x for k, x in lhs.items() if x} != {k: x for k, x in rhs.items() if x}:
                    return r.fail(f"variant {vtext}: unlabeled coproduct not coassociative at {u}")
    for n in range(max_degree + 1):
        r.checked += 1
        graphs = enumerate_graphs(n)
        if dim_unlabeled(n) != orbit_partition_count(graphs):
            return r.fail(f"unlabeled dimension in degree {n} differs from orbit partition count")
    return r


# -- morphisms -------------------------------------------------------------------


def check_morphisms(max_degree: int = 4) -> Report:
    r = Report(f"sym-morphisms(degree<={max_degree})")
    comps = [c for n in range(max_degree + 1) for c in compositions(n)]
    for which in MORPHISMS:
        for i in comps:
            for j in comps:
                if sum(i) + sum(j) > max_degree:
                    continue
                r.checked += 1
                if sym_morphism(which, i + j) != product_S(sym_morphism(which, i), sym_morphism(which, j)):
                    return r.fail(f"{which} not multiplicative at {i}, {j}")
            r.checked += 1
            if coproduct_S(sym_morphism(which, i)) != sym_morphism_tensor(which, sym_coproduct(i)):
                return r.fail(f"{which} not comultiplicative at S^{i}")
    return r


def qsym_coproduct_fails_at(g: LabeledGraph) -> bool:
    return qsym_coproduct(qsym_specialize(M(g))) != qsym_specialize_tensor(coproduct_M(M(g)))


def check_qsym(max_degree: int = 3) -> Report:
    r = Report(f"qsym-specialization(degree<={max_degree})")
    for g1, g2 in tuples_upto(max_degree, 2):
        r.checked += 1
        lhs = qsym_specialize(product_M(M(g1), M(g2)))
        if lhs != qsym_product(qsym_specialize(M(g1)), qsym_specialize(M(g2))):
            return r.fail(f"specialization not multiplicative at {_names(g1, g2)}")
    r.checked += 1
    if not qsym_coproduct_fails_at(QSYM_COUNTEREXAMPLE):
        return r.fail(f"stored counterexample {_names(QSYM_COUNTEREXAMPLE)} is a coalgebra-compatible point")
    first = next((g for g in graphs_upto(max_degree) if qsym_coproduct_fails_at(g)), None)
    if first != QSYM_COUNTEREXAMPLE:
        return r.fail(f"first comultiplicativity failure is {first}, not the stored counterexample")
    return r


# -- dimensions ------------------------------------------------------------------


PUBLISHED_DIMENSIONS_111 = (1, 3, 39, 819, 23949)


def check_dimensions(max_degree: int = 4) -> Report:
    r = Report(f"dimensions(degree<={max_degree})")
    for n in range(max_degree + 1):
        r.checked += 1
        enum = dim_labeled(n)
        if n < len(PUBLISHED_DIMENSIONS_111) and enum != PUBLISHED_DIMENSIONS_111[n]:
            return r.fail(f"degree {n}: enumeration gives {enum}, expected {PUBLISHED_DIMENSIONS_111[n]}")
        if dim_series_111(n) != enum:
            return r.fail(f"degree {n}: series gives {dim_series_111(n)}, enumeration {enum}")
        if inclusion_exclusion_count(n) != enum:
            return r.fail(f"degree {n}: inclusion-exclusion disagrees with enumeration")
    for v in ("011", "101", "001"):
        for n in range(min(max_degree, 3) + 1):
            r.checked += 1
            inside = sum(1 for g in enumerate_graphs(n) if in_subvariant(g, v))
            if dim_labeled(n, v[:2] + "1") != inside:
                return r.fail(f"variant {v} degree {n}: enumeration and filtered count disagree")
    for v in ("110", "010", "100", "000"):
        for n in range(min(max_degree, 3) + 1):
            r.checked += 1
            outside = sum(1 for g in enumerate_graphs(n, v[:2] + "1") if not in_ideal(g, MULTIEDGE_PATTERNS))
            if dim_labeled(n, v) != outside:
                return r.fail(f"variant {v} degree {n}: enumeration and quotient complement disagree")
    return r


SUITES: dict[str, Callable[..., list[Report]]] = {
    "hopf-axioms": lambda d, k: [check_hopf_axioms(d, k)] + ([check_hopf_random(arity=k)] if k == 2 else []),
    "oracle": lambda d, k: [check_oracle(d, k, 2 if k == 2 else None)],
    "duality": lambda d, k: [check_duality(d, k)],
    "freeness": lambda d, k: [check_freeness(d, k)],
    "sub-hopf": lambda d, k: [check_subhopf(d)],
    "quotient": lambda d, k: [check_quotient(d)],
    "unlabeled": lambda d, k: [check_unlabeled(d)],
    "morphisms": lambda d, k: [check_morphisms(max(d, 4)), check_qsym(d)],
    "dimensions": lambda d, k: [check_dimensions(max(d, 4))],
}


def run_suite(name: str, max_degree: int = 3, arity: int = 2) -> list[Report]:
    if name == "all":
        return [rep for suite in SUITES.values() for rep in suite(max_degree, arity)]
    return SUITES[name](max_degree, arity)
