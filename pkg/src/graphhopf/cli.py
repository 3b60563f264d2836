"""``graphhopf`` command line: algebra operations on JSON files, dimension tables, verification."""
from __future__ import annotations

import argparse
import csv
import io as _io
import json
import sys
from typing import Sequence

from . import io
from .algebra import (
    BasisMismatch,
    antipode_M,
    coproduct_M,
    coproduct_S,
    pairing,
    product_M,
    product_S,
)
from .enumeration import dimension_table, irreducible_count, irreducibles_from_dimensions, dim_labeled
from .graphs import GraphError, VariantFlags, enumerate_graphs
from .realization import expand
from .structures import PRESETS, ForbiddenSet, IdealError, quotient_basis, quotient_coproduct, quotient_product, reduce_mod
from .sym import MORPHISMS, CompositionError, qsym_specialize, sym_morphism
from .unlabeled import NotInSpan, mm_coproduct, mm_expand, mm_product, mm_recognize, unlabeled_basis
from .verify import SUITES, run_suite

EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _element(source: str, basis: str):
    x = io.element_from_obj(io.load(source), default_basis=basis)
    if x.basis != basis:
        raise BasisMismatch(f"{source}: expected a {basis} element, got {x.basis}")
    return x


def _emit_element(x, fmt: str) -> str:
    return io.dumps(io.element_to_obj(x)) if fmt == "json" else io.element_text(x)


def _emit_tensor(t, fmt: str) -> str:
    return io.dumps(io.tensor_to_obj(t)) if fmt == "json" else io.tensor_text(t)


def _emit_graphs(graphs, fmt: str) -> str:
    if fmt == "json":
        return io.dumps([io.graph_to_obj(g) for g in graphs])
    return "".join(f"{g}\n" for g in graphs)


def _forbidden(source: str) -> ForbiddenSet:
    if source in PRESETS:
        return PRESETS[source]
    data = io.load(source)
    if not isinstance(data, list):
        raise io.FormatError("a forbidden-pattern file holds a JSON list of graph objects")
    return ForbiddenSet(tuple(io.graph_from_obj(obj) for obj in data))


def _dims(args) -> str:
    rows = dimension_table(args.max_degree, args.variant, args.arity, unlabeled=not args.no_unlabeled)
    cols = ["n", "enum", "series", "irreducibles", "unlabeled"]
    if args.format == "json":
        return io.dumps(rows)
    cells = [[("-" if r[c] is None else str(r[c])) for c in cols] for r in rows]
    if args.format == "csv":
        buf = _io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        writer.writerows(cells)
        return buf.getvalue()
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = [" ".join(c.rjust(w) for c, w in zip(cols, widths))]
    lines += [" ".join(x.rjust(w) for x, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def _irreducibles(args) -> str:
    dims = [dim_labeled(n, args.variant, args.arity) for n in range(args.max_degree + 1)]
    series = irreducibles_from_dimensions(dims)
    rows = [(n, irreducible_count(n, args.variant, args.arity), series[n]) for n in range(1, args.max_degree + 1)]
    if args.format == "json":
        return io.dumps([{"n": n, "direct": d, "series_inversion": s} for n, d, s in rows])
    return "n direct series_inversion\n" + "".join(f"{n} {d} {s}\n" for n, d, s in rows)


def _verify(args) -> tuple[str, int]:
    reports = run_suite(args.suite, args.max_degree, args.arity)
    out = "".join(f"{r}\n" for r in reports)
    return out, 0 if all(r.ok for r in reports) else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--variant", default="111", help="flags abc: oriented, loops, multi-edges (default 111)")
    common.add_argument("--arity", type=int, default=2, help="edge arity k (default 2)")
    common.add_argument("--max-degree", type=int, default=3)
    common.add_argument("--format", choices=("json", "text", "csv"), default="json")

    parser = argparse.ArgumentParser(prog="graphhopf", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name: str, help: str, *args: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        for a in args:
            p.add_argument(a)
        return p

    verb("product", "M_x * M_y", "x", "y")
    verb("coproduct", "coproduct of an M element", "x")
    verb("antipode", "antipode of an M element", "x")
    verb("dual-product", "S^x * S^y (concatenation)", "x", "y")
    verb("dual-coproduct", "coproduct of an S element", "x")
    verb("pair", "<S element, M element>", "d", "x")
    verb("specialize-qsym", "image in QSym under x_ij = x_i x_j", "x")
    p = verb("morphism", "image of S^I under a morphism from Sym")
    p.add_argument("which", choices=MORPHISMS)
    p.add_argument("parts", nargs="+", type=int)
    p = verb("expand", "polynomial realization of a graph", "graph")
    p.add_argument("--indices", type=int, default=None, help="truncation N (default: number of vertices)")

    q = sub.add_parser("quotient", help="operations modulo a forbidden-pattern ideal")
    q.add_argument("patterns", help=f"preset ({', '.join(PRESETS)}) or JSON file of graphs")
    qsub = q.add_subparsers(dest="qverb", required=True)
    for name, args_ in (("product", ("x", "y")), ("coproduct", ("x",)), ("reduce", ("x",)), ("basis", ())):
        p = qsub.add_parser(name, parents=[common])
        for a in args_:
            p.add_argument(a)
        if name == "basis":
            p.add_argument("--degree", type=int, required=True)

    u = sub.add_parser("unlabeled", help="orbit-sum (MM) basis operations")
    usub = u.add_subparsers(dest="uverb", required=True)
    for name, args_ in (("expand", ("x",)), ("recognize", ("x",)), ("product", ("x", "y")),
                        ("coproduct", ("x",)), ("basis", ())):
        p = usub.add_parser(name, parents=[common])
        for a in args_:
            p.add_argument(a)
        if name == "basis":
            p.add_argument("--degree", type=int, required=True)

    p = verb("enumerate", "list the basis graphs of one degree")
    p.add_argument("--degree", type=int, required=True)
    p = verb("dims", "dimension table: n, enum, series, irreducibles, unlabeled")
    p.add_argument("--no-unlabeled", action="store_true", help="skip the unlabeled column")
    verb("irreducibles", "irreducible counts, direct and by series inversion")
    p = verb("verify", "run a property suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    return parser


def execute(args) -> tuple[str, int]:
    fmt = "text" if args.format == "csv" and args.verb != "dims" else args.format
    VariantFlags.parse(args.variant)
    v = args.verb
    if v == "product":
        return _emit_element(product_M(_element(args.x, "M"), _element(args.y, "M")), fmt), 0
    if v == "coproduct":
        return _emit_tensor(coproduct_M(_element(args.x, "M")), fmt), 0
    if v == "antipode":
        return _emit_element(antipode_M(_element(args.x, "M")), fmt), 0
    if v == "dual-product":
        return _emit_element(product_S(_element(args.x, "S"), _element(args.y, "S")), fmt), 0
    if v == "dual-coproduct":
        return _emit_tensor(coproduct_S(_element(args.x, "S")), fmt), 0
    if v == "pair":
        value = pairing(_element(args.d, "S"), _element(args.x, "M"))
        return (io.dumps({"value": str(value)}) if fmt == "json" else f"{value}\n"), 0
    if v == "specialize-qsym":
        image = qsym_specialize(_element(args.x, "M"))
        if fmt == "json":
            return io.dumps({"basis": "QSym-M", "terms": [{"coeff": str(c), "composition": list(k)} for k, c in image.items()]}), 0
        return "".join(f"{c}\tM{list(k)}\n" for k, c in image.items()) or "0\n", 0
    if v == "morphism":
        return _emit_element(sym_morphism(args.which, args.parts, args.arity), fmt), 0
    if v == "expand":
        g = io.graph_from_obj(io.load(args.graph))
        poly = expand(g, g.num_vertices if args.indices is None else args.indices)
        return (io.dumps({"indices": poly.num_indices, "polynomial": str(poly)}) if fmt == "json" else f"{poly}\n"), 0
    if v == "quotient":
        f = _forbidden(args.patterns)
        if args.qverb == "product":
            return _emit_element(quotient_product(_element(args.x, "M"), _element(args.y, "M"), f), fmt), 0
        if args.qverb == "coproduct":
            return _emit_tensor(quotient_coproduct(_element(args.x, "M"), f), fmt), 0
        if args.qverb == "reduce":
            return _emit_element(reduce_mod(_element(args.x, "M"), f), fmt), 0
        return _emit_graphs(quotient_basis(args.degree, f, args.arity, args.variant), fmt), 0
    if v == "unlabeled":
        if args.uverb == "expand":
            return _emit_element(mm_expand(_element(args.x, "MM")), fmt), 0
        if args.uverb == "recognize":
            return _emit_element(mm_recognize(_element(args.x, "M")), fmt), 0
        if args.uverb == "product":
            return _emit_element(mm_product(_element(args.x, "MM"), _element(args.y, "MM")), fmt), 0
        if args.uverb == "coproduct":
            return _emit_tensor(mm_coproduct(_element(args.x, "MM")), fmt), 0
        return _emit_graphs([u.canonical for u in unlabeled_basis(args.degree, args.variant, args.arity)], fmt), 0
    if v == "enumerate":
        return _emit_graphs(enumerate_graphs(args.degree, args.variant, args.arity), fmt), 0
    if v == "dims":
        return _dims(args), 0
    if v == "irreducibles":
        return _irreducibles(args), 0
    if v == "verify":
        return _verify(args)
    raise UsageError(f"unknown verb {v}")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, status = execute(args)
    except (io.FormatError, GraphError, BasisMismatch, CompositionError, IdealError, NotInSpan,
            UsageError, json.JSONDecodeError, OSError) as exc:
        print(f"graphhopf: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
