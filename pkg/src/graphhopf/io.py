"""JSON and compact text formats for graphs, elements and tensors.

Graph object: ``{"arity": 2, "vertices": m, "edges": [[i, j, mult], ...]}``.
Element: ``{"basis": "M", "terms": [{"coeff": "p/q", "graph": <graph>}, ...]}``.
Tensor: ``{"basis": ["M", "M"], "terms": [{"coeff": ..., "left": <graph>, "right": <graph>}]}``.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

from .algebra import BASES, AlgebraElement, TensorElement
from .graphs import GraphError, LabeledGraph, UnlabeledGraph, canonicalize, format_graph


class FormatError(ValueError):
    """Input that does not parse as a graph, element or tensor."""


def graph_to_obj(g: Union[LabeledGraph, UnlabeledGraph]) -> dict:
    if isinstance(g, UnlabeledGraph):
        g = g.canonical
    return {
        "arity": g.arity,
        "vertices": g.num_vertices,
        "edges": [list(t) + [mult] for t, mult in g.edges],
    }


def graph_from_obj(obj: Any) -> LabeledGraph:
    if isinstance(obj, str):
        return parse_graph_text(obj)
    if isinstance(obj, list):
        return LabeledGraph.from_matrix(obj)
    try:
        arity = int(obj.get("arity", 2))
        edges = []
        for row in obj["edges"]:
            if len(row) != arity + 1:
                raise FormatError(f"edge {row} should list {arity} vertices and a multiplicity")
            edges.append((tuple(row[:arity]), row[arity]))
        return LabeledGraph(arity, int(obj["vertices"]), edges)
    except (KeyError, TypeError, AttributeError) as exc:
        raise FormatError(f"not a graph object: {obj!r}") from exc


_EDGE_RE = re.compile(r"^\s*(\d+(?:\s*->\s*\d+)+)\s*(?::\s*(\d+))?\s*$")


def parse_graph_text(text: str) -> LabeledGraph:
    """Parse ``m; i->j:mult, ...`` (multiplicity defaults to 1; hyperedges as ``i->j->l``)."""
    head, sep, body = text.partition(";")
    if not sep:
        raise FormatError(f"graph text needs 'm;' before the edges: {text!r}")
    try:
        m = int(head)
    except ValueError as exc:
        raise FormatError(f"bad vertex count in {text!r}") from exc
    edges = []
    for chunk in filter(str.strip, body.split(",")):
        match = _EDGE_RE.match(chunk)
        if not match:
            raise FormatError(f"bad edge {chunk.strip()!r}")
        t = tuple(int(v) for v in match.group(1).split("->"))
        edges.append((t, int(match.group(2) or 1)))
    arity = len(edges[0][0]) if edges else 2
    return LabeledGraph(arity, m, edges)


def _coeff(c: Fraction) -> str:
    return str(c)


def _parse_coeff(c: Any) -> Fraction:
    if isinstance(c, float):
        raise FormatError("coefficients must be exact: use an integer or a 'p/q' string")
    try:
        return Fraction(c)
    except (ValueError, TypeError) as exc:
        raise FormatError(f"bad coefficient {c!r}") from exc


def element_to_obj(x: AlgebraElement) -> dict:
    return {
        "basis": x.basis,
        "terms": [{"coeff": _coeff(c), "graph": graph_to_obj(g)} for g, c in x.items()],
    }


def _index(basis: str, g: LabeledGraph):
    if not g.is_valid:
        raise GraphError(f"basis graph {format_graph(g)} has an isolated vertex")
    if basis == "MM":
        u = canonicalize(g)
        if u.canonical != g:
            raise FormatError(f"MM terms must use canonical representatives; got {format_graph(g)}")
        return u
    return g


def element_from_obj(obj: Any, default_basis: str = "M") -> AlgebraElement:
    """Accepts an element object, or a bare graph (read as a basis element of ``default_basis``)."""
    if isinstance(obj, dict) and "terms" in obj:
        basis = obj.get("basis", default_basis)
        if basis not in BASES:
            raise FormatError(f"unknown basis {basis!r}")
        terms = []
        for term in obj["terms"]:
            try:
                terms.append((_index(basis, graph_from_obj(term["graph"])), _parse_coeff(term["coeff"])))
            except (KeyError, TypeError) as exc:
                raise FormatError(f"bad term {term!r}") from exc
        return AlgebraElement(basis, terms)
    g = graph_from_obj(obj)
    if default_basis == "MM":
        return AlgebraElement("MM", {canonicalize(g): 1})
    return AlgebraElement(default_basis, {_index(default_basis, g): 1})


def tensor_to_obj(t: TensorElement) -> dict:
    return {
        "basis": list(t.bases),
        "terms": [
            {"coeff": _coeff(c), "left": graph_to_obj(a), "right": graph_to_obj(b)} for (a, b), c in t.items()
        ],
    }


def tensor_from_obj(obj: Any) -> TensorElement:
    try:
        bases = tuple(obj["basis"])
        terms = [
            ((_index(bases[0], graph_from_obj(t["left"])), _index(bases[1], graph_from_obj(t["right"]))),
             _parse_coeff(t["coeff"]))
            for t in obj["terms"]
        ]
    except (KeyError, TypeError, IndexError) as exc:
        raise FormatError("not a tensor object") from exc
    return TensorElement(bases, terms)


_FLAT_ARRAY = re.compile(r"\[\s*([-\d,\s]*?)\s*\]")


def dumps(obj: Any) -> str:
    """Indented JSON with arrays of integers kept on one line."""
    text = json.dumps(obj, indent=2)
    text = _FLAT_ARRAY.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",") if x.strip()) + "]", text)
    return text + "\n"


def load(source: Union[str, Path]) -> Any:
    """Read JSON from a file; a string that is not a file is parsed as JSON or graph text."""
    try:
        is_file = Path(source).is_file()
    except OSError:  # e.g. inline JSON longer than a file name may be
        is_file = False
    text = Path(source).read_text() if is_file else str(source)
    text = text.strip()
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        if ";" in text:
            return text
        raise FormatError(f"cannot read {source!r} as a file, JSON or graph text")


def element_text(x: AlgebraElement) -> str:
    if not x.terms:
        return "0\n"
    return "".join(f"{_coeff(c)}\t{x.basis}[{format_graph(getattr(g, 'canonical', g))}]\n" for g, c in x.items())


def tensor_text(t: TensorElement) -> str:
    if not t.terms:
        return "0\n"
    b1, b2 = t.bases
    return "".join(
        f"{_coeff(c)}\t{b1}[{format_graph(getattr(a, 'canonical', a))}] (x) {b2}[{format_graph(getattr(b, 'canonical', b))}]\n"
        for (a, b), c in t.items()
    )
