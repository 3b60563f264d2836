"""Labeled graphs and k-uniform hypergraphs, the basis indices of the graph algebras.

A graph on vertices ``1..m`` is stored as a multiset of ordered ``k``-tuples of
vertices. For ``k = 2`` the multiplicity of ``(i, j)`` is the adjacency entry
``a_ij``; loops are tuples with a repeated vertex. Everything here is immutable.
"""
from __future__ import annotations

import itertools
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence, Union

Edge = tuple[int, ...]
EdgeData = Union[Mapping[Edge, int], Iterable[tuple[Edge, int]]]

WORKERS_ENV = "GRAPHHOPF_WORKERS"


class GraphError(ValueError):
    """Malformed graph data."""


@dataclass(frozen=True)
class VariantFlags:
    """The ``abc`` triple: oriented, loops allowed, multiple edges allowed."""

    oriented: bool = True
    loops: bool = True
    multiedges: bool = True

    @classmethod
    def parse(cls, text: Union[str, VariantFlags]) -> VariantFlags:
        if isinstance(text, VariantFlags):
            return text
        text = str(text).strip()
        if len(text) != 3 or any(c not in "01" for c in text):
            raise GraphError(f"variant must be three binary digits, got {text!r}")
        return cls(*(c == "1" for c in text))

    def __str__(self) -> str:
        return "".join("1" if f else "0" for f in (self.oriented, self.loops, self.multiedges))

    def admits(self, g: LabeledGraph) -> bool:
        edges = dict(g.edges)
        for t, mult in edges.items():
            if not self.multiedges and mult > 1:
                return False
            if not self.loops and len(set(t)) < len(t):
                return False
            if not self.oriented:
                for s in set(itertools.permutations(t)):
                    if edges.get(s, 0) != mult:
                        return False
        return True


ALL_VARIANTS = tuple(VariantFlags.parse(f"{i:03b}") for i in range(7, -1, -1))


def _normalize_edges(edges: EdgeData) -> tuple[tuple[Edge, int], ...]:
    items = edges.items() if isinstance(edges, Mapping) else edges
    acc: Counter = Counter()
    for t, mult in items:
        mult = int(mult)
        if mult < 0:
            raise GraphError(f"negative multiplicity {mult} on edge {t}")
        if mult:
            acc[tuple(int(v) for v in t)] += mult
    return tuple(sorted(acc.items()))


@dataclass(frozen=True)
class LabeledGraph:
    """Edge multiset on vertices ``1..num_vertices``.

    Construction normalizes ``edges`` (merges repeats, sorts, drops zero
    multiplicities) and checks tuple lengths and vertex ranges. Isolated
    vertices are representable, because raw restrictions need them; use
    :attr:`is_valid` before treating a graph as a basis index.
    """

    arity: int
    num_vertices: int
    edges: tuple[tuple[Edge, int], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.arity < 2:
            raise GraphError(f"arity must be >= 2, got {self.arity}")
        if self.num_vertices < 0:
            raise GraphError("number of vertices must be nonnegative")
        edges = _normalize_edges(self.edges)
        for t, _ in edges:
            if len(t) != self.arity:
                raise GraphError(f"edge {t} does not have arity {self.arity}")
            if any(v < 1 or v > self.num_vertices for v in t):
                raise GraphError(f"edge {t} leaves vertex range 1..{self.num_vertices}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def empty(cls, arity: int = 2) -> LabeledGraph:
        return cls(arity, 0, ())

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> LabeledGraph:
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise GraphError("adjacency matrix must be square")
        return cls(2, m, {(i + 1, j + 1): a for i, r in enumerate(rows) for j, a in enumerate(r)})

    def matrix(self) -> list[list[int]]:
        if self.arity != 2:
            raise GraphError("dense adjacency view only exists for arity 2")
        a = [[0] * self.num_vertices for _ in range(self.num_vertices)]
        for (i, j), mult in self.edges:
            a[i - 1][j - 1] = mult
        return a

    @cached_property
    def degree(self) -> int:
        return sum(mult for _, mult in self.edges)

    @cached_property
    def key(self) -> tuple:
        """Total order used everywhere: degree, then vertex count, then edges."""
        return (self.degree, self.num_vertices, self.edges)

    def __lt__(self, other: LabeledGraph) -> bool:
        return self.key < other.key

    def multiplicity(self, t: Edge) -> int:
        return dict(self.edges).get(tuple(t), 0)

    def vertex_occurrences(self) -> list[int]:
        """Occurrences of each vertex across all edge tuples, with multiplicity."""
        occ = [0] * self.num_vertices
        for t, mult in self.edges:
            for v in t:
                occ[v - 1] += mult
        return occ

    @cached_property
    def is_valid(self) -> bool:
        covered = {v for t, _ in self.edges for v in t}
        return len(covered) == self.num_vertices

    def relabel(self, perm: Sequence[int]) -> LabeledGraph:
        """Send vertex ``i`` to ``perm[i - 1]``."""
        return LabeledGraph(
            self.arity,
            self.num_vertices,
            [(tuple(perm[v - 1] for v in t), mult) for t, mult in self.edges],
        )

    def __str__(self) -> str:
        return format_graph(self)


def format_graph(g: LabeledGraph) -> str:
    """Compact text form ``m; i->j:mult, ...``."""
    body = ", ".join("->".join(map(str, t)) + f":{mult}" for t, mult in g.edges)
    return f"{g.num_vertices};" + (f" {body}" if body else "")


def gamma(n: int) -> LabeledGraph:
    """One vertex carrying ``n`` loops."""
    return LabeledGraph(2, 1, {(1, 1): n})


def gamma_pq(p: int, q: int) -> LabeledGraph:
    """Two vertices, ``p`` arcs 1->2 and ``q`` arcs 2->1."""
    if p < 0 or q < 0 or p + q == 0:
        raise GraphError("gamma(p, q) needs p, q >= 0 and p + q > 0")
    return LabeledGraph(2, 2, {(1, 2): p, (2, 1): q})


def _require_valid(g: LabeledGraph) -> None:
    if not g.is_valid:
        raise GraphError(f"graph {format_graph(g)} has an isolated vertex")


def admissible_cuts(g: LabeledGraph) -> tuple[int, ...]:
    """Positions ``i`` in ``0..m`` with no edge meeting both ``[1, i]`` and ``[i+1, m]``."""
    m = g.num_vertices
    # an edge spanning [lo, hi] blocks every cut lo <= i < hi
    blocked = [False] * (m + 1)
    for t, _ in g.edges:
        for i in range(min(t), max(t)):
            blocked[i] = True
    return tuple(i for i in range(m + 1) if not blocked[i])


def restrict(g: LabeledGraph, d: Iterable[int]) -> tuple[LabeledGraph, bool]:
    """Induced sub-multigraph on ``d``, renumbered in order; also reports validity."""
    d = sorted(set(d))
    pos = {v: i + 1 for i, v in enumerate(d)}
    if any(v < 1 or v > g.num_vertices for v in d):
        raise GraphError(f"vertex subset {d} leaves range 1..{g.num_vertices}")
    sub = LabeledGraph(
        g.arity,
        len(d),
        [(tuple(pos[v] for v in t), mult) for t, mult in g.edges if all(v in pos for v in t)],
    )
    return sub, sub.is_valid


def concatenate(g1: LabeledGraph, g2: LabeledGraph) -> LabeledGraph:
    """Disjoint union with ``g2`` placed after ``g1``."""
    if g1.arity != g2.arity:
        raise GraphError("cannot concatenate graphs of different arity")
    shift = g1.num_vertices
    return LabeledGraph(
        g1.arity,
        g1.num_vertices + g2.num_vertices,
        list(g1.edges) + [(tuple(v + shift for v in t), mult) for t, mult in g2.edges],
    )


def concatenate_all(graphs: Iterable[LabeledGraph], arity: int = 2) -> LabeledGraph:
    out = LabeledGraph.empty(arity)
    for g in graphs:
        out = concatenate(out, g) if out.num_vertices else g
    return out


def factor_irreducible(g: LabeledGraph) -> tuple[LabeledGraph, ...]:
    _require_valid(g)
    cuts = admissible_cuts(g)
    return tuple(restrict(g, range(a + 1, b + 1))[0] for a, b in zip(cuts, cuts[1:]))


def is_irreducible(g: LabeledGraph) -> bool:
    return g.num_vertices > 0 and len(admissible_cuts(g)) == 2


@dataclass(frozen=True)
class UnlabeledGraph:
    """Isomorphism class, represented by its lexicographically least labeling."""

    canonical: LabeledGraph

    @property
    def arity(self) -> int:
        return self.canonical.arity

    @property
    def degree(self) -> int:
        return self.canonical.degree

    @property
    def num_vertices(self) -> int:
        return self.canonical.num_vertices

    @property
    def key(self) -> tuple:
        return self.canonical.key

    def __lt__(self, other: UnlabeledGraph) -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        return "[" + format_graph(self.canonical) + "]"


@lru_cache(maxsize=None)
def _orbit(g: LabeledGraph) -> tuple[LabeledGraph, ...]:
    return tuple(sorted({g.relabel(p) for p in itertools.permutations(range(1, g.num_vertices + 1))}))


def canonicalize(g: LabeledGraph) -> UnlabeledGraph:
    """Minimum of the relabeling orbit in the graph order (exhaustive over ``m!`` permutations)."""
    _require_valid(g)
    return UnlabeledGraph(_orbit(g)[0])


def labelings_of(u: UnlabeledGraph) -> tuple[LabeledGraph, ...]:
    """All distinct labeled graphs with support ``u``, sorted."""
    orbit = _orbit(u.canonical)
    if orbit[0] != u.canonical:
        raise GraphError(f"{format_graph(u.canonical)} is not a canonical representative")
    return orbit


def contains_pattern(g: LabeledGraph, p: LabeledGraph) -> bool:
    """Whether some order-preserving placement of ``p`` inside ``g`` is dominated edgewise."""
    if g.arity != p.arity:
        raise GraphError("pattern and graph must have the same arity")
    for d in itertools.combinations(range(1, g.num_vertices + 1), p.num_vertices):
        sub = dict(restrict(g, d)[0].edges)
        if all(sub.get(t, 0) >= mult for t, mult in p.edges):
            return True
    return False


# -- enumeration --------------------------------------------------------------


def _slots(m: int, v: VariantFlags, k: int) -> list[tuple[tuple[Edge, ...], int]]:
    """Independent edge "slots" on ``m`` vertices: (tuples set together, degree weight)."""
    slots = []
    seen = set()
    for t in itertools.product(range(1, m + 1), repeat=k):
        if not v.loops and len(set(t)) < k:
            continue
        if v.oriented:
            slots.append(((t,), 1))
        else:
            cls = tuple(sorted(set(itertools.permutations(t))))
            if cls[0] not in seen:
                seen.add(cls[0])
                slots.append((cls, len(cls)))
    return slots


def _enumerate_m(n: int, m: int, v: VariantFlags, k: int) -> list[LabeledGraph]:
    slots = _slots(m, v, k)
    span = [sorted({x for t in tuples for x in t}) for tuples, _ in slots]
    cover = [0] * (m + 1)
    uncovered = m
    chosen: list[tuple[int, int]] = []
    out: list[LabeledGraph] = []
    cap = None if v.multiedges else 1

    def rec(start: int, remaining: int) -> None:
        nonlocal uncovered
        if remaining == 0:
            if uncovered == 0:
                edges = [(t, mult) for s, mult in chosen for t in slots[s][0]]
                out.append(LabeledGraph(k, m, edges))
            return
        for s in range(start, len(slots)):
            w = slots[s][1]
            top = remaining // w if cap is None else min(cap, remaining // w)
            for mult in range(1, top + 1):
                newly = [x for x in span[s] if cover[x] == 0]
                for x in span[s]:
                    cover[x] += 1
                uncovered -= len(newly)
                # each further degree unit covers at most k new vertices
                if uncovered <= k * (remaining - mult * w):
                    chosen.append((s, mult))
                    rec(s + 1, remaining - mult * w)
                    chosen.pop()
                for x in span[s]:
                    cover[x] -= 1
                uncovered += len(newly)

    rec(0, n)
    return out


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


@lru_cache(maxsize=None)
def enumerate_graphs(n: int, variant: Union[str, VariantFlags] = "111", arity: int = 2) -> tuple[LabeledGraph, ...]:
    """Every valid graph of degree ``n`` admitted by ``variant``, in the graph order.

    Set ``GRAPHHOPF_WORKERS`` to split the work over vertex counts in
    separate processes; the result does not depend on it.
    """
    if n < 0:
        raise GraphError("degree must be nonnegative")
    v = VariantFlags.parse(variant)
    if n == 0:
        return (LabeledGraph.empty(arity),)
    ms = range(1, arity * n + 1)
    workers = _workers()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_enumerate_m, [n] * len(ms), ms, [v] * len(ms), [arity] * len(ms)))
    else:
        parts = [_enumerate_m(n, m, v, arity) for m in ms]
    return tuple(sorted(g for part in parts for g in part))


def orbit_size(g: LabeledGraph) -> int:
    return len(_orbit(g))


def automorphism_count(g: LabeledGraph) -> int:
    return factorial(g.num_vertices) // orbit_size(g)
