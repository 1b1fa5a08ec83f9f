import io
import json

import pydot
import pytest

from sytcount.cli import cmd_genfun, cmd_table, cmd_verify, main
from sytcount.graph import young_graph_dot
from sytcount.closedform import count_two_row
from sytcount.oracle import count_oracle
from sytcount.partitions import shapes_in_box
from math import comb


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


def test_count_text():
    code, out = run("count", "--shape", "5,2", "--method", "closed")
    assert code == 0 and out.startswith("5,2: 14 ")
    code, out = run("count", "--shape", "0")
    assert code == 0 and out.startswith("0: 1 ")


def test_count_dft_json():
    code, out = run("count", "--shape", "4,3,2", "--method", "dft", "--json")
    rec = json.loads(out)
    assert code == 0
    assert int(rec["count"]) == 168 == count_oracle((4, 3, 2))
    assert rec["dft_residual"] < 1e-6
    assert abs(rec["dft_imag"]) < 1e-6 and round(rec["dft_real"]) == 168


@pytest.mark.parametrize("method", ["dp", "genfun", "closed", "tworow", "dft", "oracle", "auto"])
def test_count_json_round_trip(method):
    code, out = run("count", "--shape", "9,6", "--method", method, "--json")
    assert code == 0
    assert int(json.loads(out)["count"]) == count_two_row(9, 6).value


def test_big_counts_are_exact_strings():
    code, out = run("count", "--shape", "40,30,20,10", "--json")
    rec = json.loads(out)
    assert isinstance(rec["count"], str) and int(rec["count"]) > 2**64


@pytest.mark.parametrize("argv", [
    ("count", "--shape", "1,2"),
    ("count", "--shape", "2,1,1", "--method", "tworow"),
    ("count", "--shape", "1,1,1,1", "--method", "dft"),
    ("count", "--shape", "3,2", "--r", "1"),
    ("count", "--shape", "17", "--method", "oracle"),
    ("genfun", "--n", "1000", "--r", "2"),
    ("graph", "--r", "4", "--max-coordinate", "2"),
])
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        code, _ = run(*argv)
        raise SystemExit(code)
    assert exc.value.code == 2


def test_table():
    rows = cmd_table(4, 2)
    assert [(r["shape"], r["count"]) for r in rows] == [("4", "1"), ("3,1", "3"), ("2,2", "2")]
    assert all(r["agree"] for r in rows)
    assert [r["count"] for r in cmd_table(0, 1)] == ["1"]
    assert [r["count"] for r in cmd_table(7, 2)] == ["1", "6", "14", "14"]
    code, out = run("table", "--n", "7", "--max-r", "2", "--json")
    assert code == 0 and [r["count"] for r in json.loads(out)] == ["1", "6", "14", "14"]


def test_genfun_cli():
    # the printed listing drops the -x2^2 term of F_{2,2}; the binomial expansion keeps it
    assert cmd_genfun(1, 2) == "x1 - x2^2/x1"
    assert cmd_genfun(2, 2) == "x1^2 + x1*x2 - x2^2 - x2^3/x1"
    assert cmd_genfun(0, 1) == "1"
    assert cmd_genfun(3, 2) == "x1^3 + 2*x1^2*x2 - 2*x2^3 - x2^4/x1"
    rec = json.loads(cmd_genfun(1, 2, "json"))
    assert rec["terms"] == [{"exponents": [1, 0], "coefficient": "1"},
                            {"exponents": [-1, 2], "coefficient": "-1"}]


def _labels(graph):
    return {n.get_name(): n.get_label().strip('"') for n in graph.get_nodes() if n.get_label()}


@pytest.mark.parametrize("r, m", [(1, 2), (2, 4), (3, 3), (3, 6)])
def test_graph_parses_and_node_count(r, m):
    (graph,) = pydot.graph_from_dot_data(young_graph_dot(r, m))
    labels = _labels(graph)
    assert len(labels) == len(shapes_in_box(r, m)) == comb(m + r, r)


def test_graph_values():
    (g,) = pydot.graph_from_dot_data(young_graph_dot(2, 4))
    for name, label in _labels(g).items():
        shape, count = label.split(" : ")
        k, l = map(int, shape.strip("()").split(","))
        assert int(count) == count_two_row(k, l).value
    (g,) = pydot.graph_from_dot_data(young_graph_dot(1, 2))
    assert sorted(_labels(g).values()) == ["(0) : 1", "(1) : 1", "(2) : 1"]
    assert len(g.get_edges()) == 2
    (g,) = pydot.graph_from_dot_data(young_graph_dot(3, 3))
    labels = _labels(g)
    assert labels["p_1_1_1"] == f"(1,1,1) : {count_oracle((1, 1, 1))}" == "(1,1,1) : 1"
    assert labels["p_2_1_0"] == "(2,1,0) : 2"
    for name, label in labels.items():
        shape = tuple(int(x) for x in label.split(" : ")[0].strip("()").split(","))
        assert label.endswith(f" : {count_oracle(shape)}")
    heads = {e.get("arrowhead") for e in g.get_edges()}
    assert len(heads) == 3


def test_verify_defaults_clean():
    rep = cmd_verify()
    assert rep.disagreements == [] and rep.exit_code == 0
    assert len(rep.rows) == sum(1 for _ in rep.rows)
    code, out = run("verify", "--max-n", "0", "--json")
    rec = json.loads(out)
    assert code == 0
    assert set(rec["shapes"][0]["values"].values()) == {"1"}


def test_verify_verbatim_has_diff_section():
    code, out = run("verify", "--max-n", "6", "--dft-mode", "verbatim", "--json")
    rec = json.loads(out)
    assert code == 0
    assert all(d["max_abs_diff"] < 1e-9 for d in rec["v0_mode_diff"])


def test_verify_exit_code_tracks_disagreements():
    # a tolerance no residual can meet makes every dft entry an error -> disagreement
    code, out = run("verify", "--max-n", "3", "--dft-tolerance", "-1", "--json")
    rec = json.loads(out)
    assert code == 1 and rec["disagreements"]
    code, _ = run("verify", "--max-n", "3", "--jobs", "2")
    assert code == 0


def test_bench_csv():
    code, out = run("bench", "--max-n", "3", "--methods", "closed,oracle")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "method,n,shapes,seconds"
    assert len(lines) == 1 + 2 * 4


def test_bench_excludes_oracle_above_cap():
    from sytcount.cli import cmd_bench
    rows = cmd_bench(17, methods=("oracle",), max_r=1)
    assert max(r["n"] for r in rows) == 16


def test_enumerate():
    code, out = run("enumerate", "--shape", "2,2")
    assert code == 0 and out.strip() == "1 2\n3 4\n\n1 3\n2 4"
    code, out = run("enumerate", "--shape", "3,1", "--json")
    assert json.loads(out) == [[[1, 2, 3], [4]], [[1, 2, 4], [3]], [[1, 3, 4], [2]]]
