import io
import json

import networkx as nx
import pytest

from conftest import to_nx
from toughkit.cli import main
from toughkit.codecs import parse_graph6, to_graph6
from toughkit.generators import complete_bipartite, path_graph, petersen_graph, three_bridge_cubic
from toughkit.graph import Graph


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return {
        "p3": write("p3.g6", "Bg\n"),
        "k3": write("k3.g6", "Bw\n"),
        "petersen": write("petersen.g6", to_graph6(petersen_graph()) + "\n"),
        "c25": write("c25.el", "25 25\n" + "\n".join(f"{i} {(i + 1) % 25}" for i in range(25)) + "\n"),
        "p3el": write("p3.el", "3 2\n0 1\n1 2\n"),
        "many": write("many.g6", "Bg\nBw\n"),
        "bad": write("bad.g6", "B!\n"),
        "odd": write("graph.txt", "Bg\n"),
        "tripod": write("tripod.g6", to_graph6(three_bridge_cubic()) + "\n"),
        "dir": str(tmp_path),
    }


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_tau(capsys, files):
    assert run(capsys, "tau", "--in", files["p3"]) == (0, "finite 1/2 tough_set=[1]\n", "")
    code, out, _ = run(capsys, "tau", "--in", files["p3el"], "--json")
    assert json.loads(out) == {"kind": "finite", "value": "1/2", "tough_set": [1]}
    code, out, _ = run(capsys, "tau", "--in", files["many"])
    assert out.splitlines() == ["finite 1/2 tough_set=[1]", "infinite"]


def test_tau_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("Bg\n"))
    assert run(capsys, "tau", "--in", "-")[1] == "finite 1/2 tough_set=[1]\n"
    monkeypatch.setattr("sys.stdin", io.StringIO("3 2\n0 1\n1 2\n"))
    assert run(capsys, "tau", "--in", "-", "--format", "el")[1] == "finite 1/2 tough_set=[1]\n"


def test_decide_exit_codes(capsys, files):
    code, out, _ = run(capsys, "decide", "--t", "1", "--in", files["petersen"])
    assert code == 0 and out.strip() == "yes"
    code, out, _ = run(capsys, "decide", "--t", "1", "--in", files["p3"])
    assert code == 1 and out.startswith("no ")
    assert json.loads(out[3:]) == {"cutset": [1], "components": 2, "ratio": "1/2"}
    code, out, _ = run(capsys, "decide", "--t", "1/2", "--in", files["p3"], "--json")
    assert code == 0 and json.loads(out) == {"tough": True, "witness": None}


def test_decide_above_cap(capsys, files):
    # the cycle is 1-tough so no heuristic witness exists: refusal
    code, _, err = run(capsys, "decide", "--t", "1", "--in", files["c25"])
    assert code == 3 and "cap" in err
    # a 16-vertex graph above a lowered cap, refuted by the heuristic
    code, out, _ = run(capsys, "decide", "--t", "1/2", "--in", files["tripod"], "--max-n", "10")
    assert code == 1 and out.startswith("no ")


def test_size_cap_refusal(capsys, files):
    code, _, err = run(capsys, "tau", "--in", files["c25"])
    assert code == 3 and "refused" in err
    code, out, _ = run(capsys, "tau", "--in", files["petersen"], "--workers", "2")
    assert code == 0 and out.startswith("finite 4/3")


@pytest.mark.parametrize(
    "argv",
    [
        ["nope"],
        ["tau"],
        ["decide", "--t", "0.5", "--in", "x.g6"],
        ["decide", "--t", "1/0", "--in", "x.g6"],
        ["tau", "--in", "missing.g6"],
        ["gadget", "gk"],
    ],
)
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_input_errors(capsys, files):
    code, _, err = run(capsys, "tau", "--in", files["bad"])
    assert code == 2 and "offset" in err
    code, _, err = run(capsys, "tau", "--in", files["odd"])
    assert code == 2 and "--format" in err
    assert run(capsys, "tau", "--in", files["odd"], "--format", "g6")[0] == 0


def test_witness_verify(capsys, files):
    assert run(capsys, "witness-verify", "--in", files["p3"], "--t", "1", "--cutset", "1")[:2] == (0, "valid\n")
    assert run(capsys, "witness-verify", "--in", files["p3"], "--t", "1/2", "--cutset", "1")[0] == 1
    w = json.dumps({"cutset": [1], "components": 2, "ratio": "1/2"})
    assert run(capsys, "witness-verify", "--in", files["p3"], "--t", "1", "--witness", w)[0] == 0
    bad = json.dumps({"cutset": [1], "components": 3, "ratio": "1/3"})
    assert run(capsys, "witness-verify", "--in", files["p3"], "--t", "1", "--witness", bad)[0] == 1
    assert run(capsys, "witness-verify", "--in", files["p3"], "--t", "1", "--witness", "{")[0] == 2
    assert run(capsys, "witness-verify", "--in", files["p3"], "--t", "1", "--cutset", "7")[0] == 1


def test_spanning_half(capsys, files):
    code, out, _ = run(capsys, "spanning-half", "--in", files["k3"])
    assert code == 0 and parse_graph6(out.strip()).m == 2
    code, out, _ = run(capsys, "spanning-half", "--in", files["k3"], "--json")
    assert json.loads(out)["removed_edges"] == 1
    code, _, err = run(capsys, "spanning-half", "--in", files["c25"])
    assert code == 3


def test_gadget_bg_of_triangle(capsys, files):
    code, out, _ = run(capsys, "gadget", "bg", "--in", files["k3"])
    g6, labels = out.splitlines()
    assert code == 0
    assert nx.is_isomorphic(to_nx(parse_graph6(g6)), to_nx(complete_bipartite(3, 3)))
    assert json.loads(labels)["v[1,2]"] == 3


def test_gadget_variants(capsys, files, tmp_path):
    code, out, _ = run(capsys, "gadget", "hr", "--r", "6", "--json")
    data = json.loads(out)
    assert parse_graph6(data["graph6"]).n == 12 and data["labels"]["w_b"] == 6
    code, out, _ = run(capsys, "gadget", "gk", "--in", files["p3"], "--t", "1/2", "--k", "1")
    g = parse_graph6(out.splitlines()[0])
    assert g.n == 3 + 6 + 1 + 1
    k5 = tmp_path / "k5.g6"
    k5.write_text(to_graph6(Graph.complete(5)) + "\n")
    out_path = tmp_path / "big.g6"
    code, out, _ = run(capsys, "gadget", "attach-odd", "--in", str(k5), "--r", "5", "--out", str(out_path))
    assert code == 0 and parse_graph6(out_path.read_text().strip()).n == 40 and "w[1]" in json.loads(out)
    assert run(capsys, "gadget", "attach-even", "--in", str(k5), "--r", "6")[0] == 0
    assert run(capsys, "gadget", "attach-even", "--in", str(k5), "--r", "8")[0] == 2
    assert run(capsys, "gadget", "hr")[0] == 2


def test_recognize(capsys, files, tmp_path):
    code, out, _ = run(capsys, "recognize", "cubic", "--in", files["tripod"])
    assert out.strip() == "TauOneThird cut_vertex=0"
    code, out, _ = run(capsys, "recognize", "cubic", "--in", files["petersen"], "--json")
    assert json.loads(out) == {"class": "TauAtLeastTwoThirds", "cut_vertex": None}
    two = tmp_path / "two.g6"
    two.write_text(to_graph6(Graph.complete(5).disjoint_union(Graph.complete(5))) + "\n")
    assert run(capsys, "recognize", "4reg", "--in", str(two))[:2] == (1, "no\n")
    assert run(capsys, "recognize", "4reg", "--in", files["petersen"])[0] == 2


def test_convert(capsys, files):
    code, out, _ = run(capsys, "convert", "--in", files["p3"], "--to", "el")
    assert out == "3 2\n0 1\n1 2\n"
    code, out, _ = run(capsys, "convert", "--in", files["p3el"], "--to", "g6")
    assert out == "Bg\n"
    assert run(capsys, "convert", "--in", files["many"], "--to", "el")[0] == 2


def test_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--max-n", "3", "--json")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(lines) == 10
    for rec in lines:
        assert {"check_id", "mode", "corpus_size", "passed", "failures", "elapsed"} <= set(rec)
    report = tmp_path / "r.jsonl"
    code, out, _ = run(capsys, "verify", "hr", "bg-identity", "--max-n", "4", "--report", str(report))
    assert code == 0 and "PASS" in out and len(report.read_text().splitlines()) == 2
    code, out, _ = run(capsys, "verify", "bg-identity", "--max-n", "4", "--inject-fault", "bg")
    assert code == 1 and "FAIL" in out
    assert run(capsys, "verify", "no-such-check")[0] == 2
    assert "solver-oracle" in run(capsys, "verify", "--list")[1]


def test_verify_external_corpus(capsys, tmp_path):
    corpus = tmp_path / "cubic.g6"
    corpus.write_text(to_graph6(petersen_graph()) + "\n" + to_graph6(three_bridge_cubic()) + "\n")
    code, out, _ = run(capsys, "verify", "cubic-4regular", "--max-n", "16", "--cubic-corpus", str(corpus), "--json")
    rec = json.loads(out)
    assert code == 0 and rec["stats"]["cubic_ingested"] == 2 and rec["stats"]["cubic_skipped"] == 0
    corpus.write_text(to_graph6(petersen_graph()) + "\nBw\n")
    rec = json.loads(run(capsys, "verify", "cubic-4regular", "--max-n", "10", "--cubic-corpus", str(corpus), "--json")[1])
    assert rec["stats"]["cubic_skipped"] == 1


def test_path_graph_fixture_is_p3():
    assert parse_graph6("Bg") == path_graph(3)
