import json

from tvlab.cli import complex_from_json_dict, complex_to_json_dict, main
from tvlab.matroids import block_matroid


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_complex_json_roundtrip():
    cpx = block_matroid(3).complex
    data = complex_to_json_dict(cpx)
    back = complex_from_json_dict(data)
    assert back.facets == cpx.facets
    assert [v.label for v in back.vertices] == [v.label for v in cpx.vertices]
    assert [v.block for v in back.vertices] == [v.block for v in cpx.vertices]


def test_build_and_homology_pipeline(tmp_path, capsys):
    target = tmp_path / "m2.json"
    rc, _, _ = run(capsys, "build", "mr", "--r", "2", "-o", str(target))
    assert rc == 0
    rc, out, _ = run(capsys, "homology", "--deleted-join", "2", str(target))
    assert rc == 0
    payload = json.loads(out)
    assert payload["betti"] == [0, 0, 1, 0]


def test_build_deleted_join_and_betti_r3(tmp_path, capsys):
    target = tmp_path / "m3dj.json"
    rc, _, _ = run(capsys, "build", "mr", "--r", "3", "--deleted-join", "2",
                   "-o", str(target))
    assert rc == 0
    rc, out, _ = run(capsys, "homology", str(target))
    assert rc == 0
    assert json.loads(out)["betti"] == [0, 0, 0, 0, 8, 1]


def test_build_variants(tmp_path, capsys):
    for argv in (["build", "mr-prime", "--r", "2"],
                 ["build", "uniform", "--m", "2", "--n", "5"],
                 ["build", "chessboard", "--k", "2", "--r", "4"]):
        rc, out, _ = run(capsys, *argv)
        assert rc == 0
        data = json.loads(out)
        assert "facets" in data and "vertices" in data


def test_shell_roundtrip(tmp_path, capsys):
    cpx_path = tmp_path / "c.json"
    order_path = tmp_path / "o.json"
    rc, _, _ = run(capsys, "shell", "mr2", "--r", "3", "-o", str(order_path),
                   "--complex-output", str(cpx_path))
    assert rc == 0
    rc, out, _ = run(capsys, "shell", "verify", str(cpx_path), str(order_path))
    assert rc == 0
    assert json.loads(out)["status"] == "pass"


def test_shell_verify_rejects_bad_order(tmp_path, capsys):
    cpx_path = tmp_path / "c.json"
    order_path = tmp_path / "o.json"
    rc, out, _ = run(capsys, "build", "chessboard", "--k", "2", "--r", "2",
                     "-o", str(cpx_path))
    assert rc == 0
    order_path.write_text(json.dumps({"order": [0, 1], "witnesses": []}))
    rc, out, _ = run(capsys, "shell", "verify", str(cpx_path), str(order_path))
    assert rc == 2
    assert json.loads(out)["status"] == "fail"


def test_shell_search(tmp_path, capsys):
    cpx_path = tmp_path / "c.json"
    rc, _, _ = run(capsys, "build", "chessboard", "--k", "2", "--r", "4",
                   "-o", str(cpx_path))
    rc, out, _ = run(capsys, "shell", "search", str(cpx_path))
    assert rc == 0
    assert "order" in json.loads(out)
    cb22 = tmp_path / "cb22.json"
    run(capsys, "build", "chessboard", "--k", "2", "--r", "2", "-o", str(cb22))
    rc, out, _ = run(capsys, "shell", "search", str(cb22))
    assert rc == 2
    assert json.loads(out)["status"] == "not-shellable"


def test_delprod_command(tmp_path, capsys):
    cpx_path = tmp_path / "u.json"
    run(capsys, "build", "uniform", "--m", "3", "--n", "3", "-o", str(cpx_path))
    rc, out, _ = run(capsys, "delprod", str(cpx_path), "--k", "2",
                     "--bases", "1", "--rank", "3")
    assert rc == 0
    payload = json.loads(out)
    assert payload["betti"] == [0, 1]
    assert payload["homological_connectivity"] == 0
    assert payload["hypotheses"] == {"b_ge_r_km1_plus_1": False,
                                     "b_ge_rm1_km1_plus_1": False}


def test_delprod_cell_budget(tmp_path, capsys):
    cpx_path = tmp_path / "u.json"
    run(capsys, "build", "uniform", "--m", "4", "--n", "6", "-o", str(cpx_path))
    rc, _, err = run(capsys, "delprod", str(cpx_path), "--k", "3",
                     "--max-dim-cap", "50")
    assert rc == 1
    assert "budget" in err


def test_bounds_command(capsys):
    rc, out, _ = run(capsys, "bounds", "--b", "16", "--r", "4", "--d", "3")
    assert rc == 0
    payload = json.loads(out)
    assert payload["best_prime_power"] >= 2
    rc, out, _ = run(capsys, "--format", "md", "bounds", "--b", "3", "--r", "3",
                     "--d", "2")
    assert rc == 0


def test_malformed_json_reports_byte_offset(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": [], "facets": [[0,]]}')
    rc, _, err = run(capsys, "homology", str(bad))
    assert rc == 1
    assert "byte offset" in err


def test_facet_out_of_range_rejected(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"vertices": [{"label": "a"}], "facets": [[0, 1]]}))
    rc, _, err = run(capsys, "homology", str(bad))
    assert rc == 1
    assert "outside" in err


def test_usage_error_exit_code(capsys):
    rc, _, err = run(capsys, "build", "mr")
    assert rc == 1


def test_verify_paper_rmax2_deterministic(tmp_path, capsys):
    cache = tmp_path / "cache"
    env_argv = ["verify-paper", "--rmax", "2", "--cache-dir", str(cache)]
    rc1, out1, _ = run(capsys, *env_argv)
    rc2, out2, _ = run(capsys, *env_argv)
    assert rc1 == rc2 == 0
    strip = lambda s: {r["claim"]: {k: v for k, v in r.items() if k != "seconds"}
                       for r in json.loads(s)["results"]}
    assert strip(out1) == strip(out2)
    skipped = [c for c, r in strip(out1).items() if r["status"] == "skipped"]
    assert "deleted-join.r3.betti" in skipped
    passed = [c for c, r in strip(out1).items() if r["status"] == "pass"]
    assert "deleted-join.r2.invariants" in passed


def test_verify_paper_env_cache(tmp_path, capsys, monkeypatch):
    cache = tmp_path / "envcache"
    monkeypatch.setenv("TVLAB_CACHE", str(cache))
    rc, out, _ = run(capsys, "verify-paper", "--rmax", "2", "--only",
                     "deleted-join.r2.invariants")
    assert rc == 0
    assert cache.exists() and any(cache.iterdir())
