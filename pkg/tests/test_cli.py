import json

import pytest

import imsolve as im
from imsolve import cli
from imsolve.kernel import Instance

from conftest import build, cycle


@pytest.fixture()
def files(tmp_path):
    paths = {}

    def put(name, inst):
        p = tmp_path / name
        p.write_text(im.write_instance(inst))
        paths[name] = str(p)

    put("paw.im", Instance(im.paw_with_tail(), 2))
    put("c5-l2.im", Instance(cycle(5), 2))
    put("fig2.im", Instance(im.naive_branch_trap(), 4))
    put("tstar.im", Instance(im.triangle_star_graph(4), 4))
    paths["dir"] = str(tmp_path)
    return paths


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, argv):
    code, out = run(capsys, argv + ["--json"])
    return code, json.loads(out)


def test_solve_yes_with_certificate(capsys, files):
    code, doc = run_json(capsys, ["solve", files["paw.im"]])
    assert code == 0
    assert doc["answer"] == "yes"
    # labels a,b,c,x,y map to 1..5 in file order
    assert doc["certificate"] == [[2, 3], [4, 5]]
    assert doc["stats"]["nodes_visited"] >= 1
    assert set(doc["stats"]) == {
        "nodes_visited", "max_depth", "branchings_by_rule", "reductions_by_rule",
    }


def test_solve_fixed_budget_exhausts_with_exit_3(capsys, files):
    code, doc = run_json(capsys, ["solve", files["c5-l2.im"], "--budget", "0"])
    assert code == 3
    assert doc["answer"] == "exhausted"


def test_solve_auto_no_and_answer_status(capsys, files):
    code, doc = run_json(capsys, ["solve", files["c5-l2.im"]])
    assert code == 0 and doc["answer"] == "no"
    code, _ = run(capsys, ["solve", files["c5-l2.im"], "--answer-status"])
    assert code == 1
    code, _ = run(capsys, ["solve", files["paw.im"], "--answer-status"])
    assert code == 0


def test_solve_oracle_k_mode(capsys, files):
    code, doc = run_json(capsys, ["solve", files["c5-l2.im"], "--oracle-k"])
    assert code == 0 and doc["answer"] == "no"
    code, doc = run_json(capsys, ["solve", files["fig2.im"], "--oracle-k", "--ell", "2"])
    assert code == 0 and doc["answer"] == "yes"


def test_solve_tg_agrees(capsys, files):
    for name in ("paw.im", "c5-l2.im", "fig2.im", "tstar.im"):
        _, a = run_json(capsys, ["solve", files[name]])
        _, b = run_json(capsys, ["solve-tg", files[name]])
        assert a["answer"] == b["answer"]


def test_oracle_reports_fig2_values(capsys, files):
    code, doc = run_json(capsys, ["oracle", files["fig2.im"], "--ell", "4"])
    assert code == 0
    assert doc["mm"] == 4 and doc["is"] == 4
    assert doc["k_avg"] == 0.0


def test_oracle_cap_exceeded_exit_3(capsys, tmp_path):
    p = tmp_path / "big.im"
    p.write_text(im.write_instance(Instance(build(18), 1)))
    code = cli.main(["oracle", str(p)])
    assert code == 3


def test_decompose_audit_ok(capsys, files):
    code, doc = run_json(capsys, ["decompose", files["fig2.im"]])
    assert code == 0
    assert doc["audit"]["ok"] is True
    assert len(doc["d"]) == 7 and len(doc["a"]) == 2 and doc["c"] == []


def test_classify(capsys, files):
    code, doc = run_json(capsys, ["classify", files["tstar.im"]])
    assert code == 0
    assert doc["cameron_walker"]["kind"] == "triangle-star"
    assert doc["tight"]["kind"] == "triangle-star"


def test_gen_is_deterministic_and_loadable(capsys):
    code1, out1 = run(capsys, ["gen", "random:n=8,p=0.5", "--seed", "3", "--ell", "2"])
    code2, out2 = run(capsys, ["gen", "random:n=8,p=0.5", "--seed", "3", "--ell", "2"])
    assert code1 == code2 == 0
    assert out1 == out2
    inst = im.read_instance(out1)
    assert inst.graph.vertex_count == 8 and inst.ell == 2


def test_gen_cw_tight(capsys):
    code, out = run(capsys, ["gen", "cw:u=1,w=1,nu=1,nw=1,tight", "--seed", "1"])
    assert code == 0
    inst = im.read_instance(out)
    from imsolve.oracle import classify_tight

    assert classify_tight(inst.graph).kind != "not-tight"


def test_reduce_ds_roundtrip(capsys, tmp_path):
    src = tmp_path / "k3.im"
    src.write_text(im.write_instance(Instance(build(3, [(1, 2), (1, 3), (2, 3)]), 1)))
    code, out = run(capsys, ["reduce-ds", str(src)])
    assert code == 0
    reduced = im.read_instance(out)
    assert reduced.graph.vertex_count == 6
    assert reduced.ell == 2


def test_reduce_mis(capsys, tmp_path):
    src = tmp_path / "g.im"
    src.write_text(
        im.write_instance(Instance(build(4, [(1, 2), (3, 4), (1, 3)]), 0))
    )
    code, out = run(capsys, ["reduce-mis", str(src), "--cliques", "1,2;3,4"])
    assert code == 0
    reduced = im.read_instance(out)
    assert reduced.graph.vertex_count == 6
    assert reduced.ell == 2


def test_bench_table(capsys, files):
    code, doc = run_json(capsys, ["bench", files["dir"]])
    assert code == 0
    names = [r["instance"] for r in doc["results"]]
    assert names == sorted(names)
    assert len(doc["results"]) == 4
    answers = {r["instance"]: r["answer"] for r in doc["results"]}
    assert answers["paw.im"] == "yes"
    assert answers["c5-l2.im"] == "no"


def test_json_output_is_byte_identical(capsys, files):
    _, out1 = run(capsys, ["solve", files["fig2.im"], "--json"])
    _, out2 = run(capsys, ["solve", files["fig2.im"], "--json"])
    assert out1 == out2


def test_trace_file_written(tmp_path, files, capsys):
    trace_path = tmp_path / "trace.jsonl"
    code, _ = run(capsys, ["solve", files["c5-l2.im"], "--budget", "1",
                           "--trace", str(trace_path)])
    assert code == 0  # budget 1 explores the full tree and settles on no
    lines = trace_path.read_text().splitlines()
    assert len(lines) >= 8  # root branch record plus seven leaves
    for line in lines:
        record = json.loads(line)
        assert "depth" in record and "rule" in record


def test_parse_error_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.im"
    bad.write_text("p im 2 9 1\ne 1 2\n")
    assert cli.main(["solve", str(bad)]) == 2
    missing = tmp_path / "missing.im"
    assert cli.main(["solve", str(missing)]) == 2
    assert cli.main(["gen", "bogus:n=1"]) == 2


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as info:
        cli.main(["solve"])  # missing path
    assert info.value.code == 2
