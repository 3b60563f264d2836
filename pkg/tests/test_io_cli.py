import json
import shlex
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings

from graphhopf import io
from graphhopf.algebra import M, S, TensorElement, coproduct_M
from graphhopf.cli import main
from graphhopf.graphs import LabeledGraph, enumerate_graphs, format_graph
from graphhopf.unlabeled import MM

from conftest import ARC, L2, LOOP, graphs

CORPUS = Path(__file__).parent / "data" / "corpus"


def corpus_commands():
    lines = (CORPUS / "commands.txt").read_text().splitlines()
    return [shlex.split(l) for l in lines if l.strip() and not l.startswith("#")]


class TestRoundTrip:
    def test_graphs_to_degree_2(self):
        for n in range(3):
            for g in enumerate_graphs(n):
                assert io.graph_from_obj(io.graph_to_obj(g)) == g
                assert io.parse_graph_text(format_graph(g)) == g

    @settings(max_examples=60, deadline=None)
    @given(graphs(arity=3))
    def test_hypergraphs(self, g):
        assert io.graph_from_obj(json.loads(io.dumps(io.graph_to_obj(g)))) == g
        if g.edges:
            assert io.parse_graph_text(format_graph(g)) == g

    def test_elements(self):
        for x in (M(LOOP) * Fraction(-2, 7) + M(L2), S(ARC) * 5, MM(ARC) * 3 + MM(LOOP)):
            assert io.element_from_obj(json.loads(io.dumps(io.element_to_obj(x)))) == x

    def test_tensor(self):
        t = coproduct_M(M(L2) + M(ARC) * Fraction(1, 2))
        assert io.tensor_from_obj(json.loads(io.dumps(io.tensor_to_obj(t)))) == t

    def test_corpus_files(self):
        for path in sorted(CORPUS.glob("*.json")):
            obj = io.load(path)
            if isinstance(obj, dict) and "terms" in obj:
                x = io.element_from_obj(obj)
                assert io.element_from_obj(io.element_to_obj(x)) == x
            elif isinstance(obj, dict):
                g = io.graph_from_obj(obj)
                assert io.graph_from_obj(io.graph_to_obj(g)) == g

    def test_text_graph_form(self):
        assert io.parse_graph_text("2; 1->2") == ARC
        assert io.parse_graph_text("2; 1->1:1, 2->2") == L2
        assert io.parse_graph_text("2; 1->2->2:1").arity == 3


class TestRejects:
    @pytest.mark.parametrize("text", ["1->2", "x; 1->2", "2; 1-2", "2; 1->2:a"])
    def test_bad_graph_text(self, text):
        with pytest.raises(io.FormatError):
            io.parse_graph_text(text)

    def test_float_coefficient(self):
        with pytest.raises(io.FormatError):
            io.element_from_obj({"basis": "M", "terms": [{"coeff": 0.5, "graph": "1; 1->1"}]})

    def test_non_canonical_mm(self):
        with pytest.raises(io.FormatError):
            io.element_from_obj({"basis": "MM", "terms": [{"coeff": 1, "graph": "2; 2->1"}]})

    def test_unknown_basis(self):
        with pytest.raises(io.FormatError):
            io.element_from_obj({"basis": "Q", "terms": []})


def run(argv, capsys):
    status = main(argv)
    captured = capsys.readouterr()
    return status, captured.out, captured.err


class TestCli:
    def test_product_of_loops(self, capsys):
        status, out, _ = run(["product", str(CORPUS / "loop.json"), str(CORPUS / "loop.json")], capsys)
        assert status == 0
        assert io.element_from_obj(json.loads(out)) == M([[2]]) + M(L2) * 2

    def test_text_format(self, capsys):
        status, out, _ = run(["product", "1; 1->1", "1; 1->1", "--format", "text"], capsys)
        assert out == "1\tM[1; 1->1:2]\n2\tM[2; 1->1:1, 2->2:1]\n"

    def test_dims_table(self, capsys):
        status, out, _ = run(["dims", "--variant", "111", "--max-degree", "3", "--format", "text"], capsys)
        assert status == 0
        assert out.splitlines()[-1].split() == ["3", "819", "819", "612", "52"]

    def test_dims_csv(self, capsys):
        _, out, _ = run(["dims", "--max-degree", "1", "--format", "csv"], capsys)
        assert out == "n,enum,series,irreducibles,unlabeled\n0,1,1,-,1\n1,3,3,3,2\n"

    def test_verify_passes(self, capsys):
        status, out, _ = run(["verify", "freeness", "--max-degree", "2"], capsys)
        assert status == 0 and out.startswith("PASS")

    def test_parse_error_exits_2(self, capsys):
        status, out, err = run(["product", "1; 1=>1", "1; 1->1"], capsys)
        assert status == 2 and out == ""
        assert err.startswith("graphhopf: error:") and err.count("\n") == 1

    def test_missing_file_exits_2(self, capsys):
        status, _, err = run(["antipode", "/nonexistent/graph.json"], capsys)
        assert status == 2

    def test_bad_variant_exits_2(self, capsys):
        status, _, _ = run(["enumerate", "--degree", "1", "--variant", "1x1"], capsys)
        assert status == 2

    def test_ideal_input_to_quotient_exits_2(self, capsys):
        status, _, err = run(["quotient", "simple", "product", "1; 1->1:2", "1; 1->1"], capsys)
        assert status == 2 and "ideal" in err

    def test_partial_orbit_exits_2(self, capsys):
        status, _, _ = run(["unlabeled", "recognize", "2; 1->2"], capsys)
        assert status == 2

    def test_morphism(self, capsys):
        _, out, _ = run(["morphism", "arc12", "2", "--format", "text"], capsys)
        assert out == "1\tS[2; 1->2:2]\n"

    def test_whole_corpus_runs(self, capsys, monkeypatch):
        monkeypatch.chdir(CORPUS)
        for argv in corpus_commands():
            status, out, err = run(argv, capsys)
            assert status == 0, (argv, err)
            assert out.endswith("\n")


def test_subprocess_entry_point():
    proc = subprocess.run([sys.executable, "-m", "graphhopf", "enumerate", "--degree", "1", "--format", "text"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.splitlines() == ["1; 1->1:1", "2; 1->2:1", "2; 2->1:1"]
