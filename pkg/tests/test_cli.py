import json

import pytest

from k3fourh import cli


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_version(capsys):
    assert cli.main(["--version"]) == 0


def test_bad_suite(capsys):
    code, _, _ = run(["verify", "nonsense"], capsys)
    assert code == 2


def test_missing_config(tmp_path, capsys):
    code, _, err = run(["genericity", "check", "--config", str(tmp_path / "none.json")], capsys)
    assert code == 2 and "error" in err


def test_reference_genericity(capsys):
    code, out, _ = run(["genericity", "check", "--json"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["summary"]["fail"] == 0


def test_degenerate_config(tmp_path, capsys):
    cfg = {"curves": [[["0", "-1"], ["1", "0"]], [["0", "-1"], ["1", "0"]],
                      [["2", "-5"], ["5", "-2"]], [["4", "-3"], ["27", "-64"]]]}
    path = tmp_path / "degenerate.json"
    path.write_text(json.dumps(cfg))
    code, out, _ = run(["genericity", "check", "--json", "--config", str(path)], capsys)
    rep = json.loads(out)
    assert code == 1
    failed = {c["id"] for c in rep["checks"] if c["status"] == "fail"}
    assert "genericity.g2_12" in failed


def test_periods_reject_degenerate(tmp_path, capsys):
    cfg = {"curves": [[["0", "-1"], ["1", "0"]], [["0", "-1"], ["1", "0"]],
                      [["2", "-5"], ["5", "-2"]], [["4", "-3"], ["27", "-64"]]]}
    path = tmp_path / "degenerate.json"
    path.write_text(json.dumps(cfg))
    code, _, _ = run(["periods", "vector", "--config", str(path)], capsys)
    assert code == 2


def test_bad_eta(tmp_path, capsys):
    path = tmp_path / "eta.json"
    path.write_text(json.dumps([[1, 0]] * 8))
    code, _, err = run(["ks", "check-riemann", "--eta", str(path)], capsys)
    assert code == 2 and "error" in err
    path.write_text("[1, 2")
    assert run(["ks", "check-riemann", "--eta", str(path)], capsys)[0] == 2


def test_good_eta(tmp_path, capsys):
    path = tmp_path / "eta.json"
    path.write_text(json.dumps([[1, 0], [1, 0], [0, 1], [0, 1], [0, 0], [0, 0], [0, 0], [0, 0]]))
    code, out, _ = run(["ks", "check-riemann", "--json", "--eta", str(path)], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["summary"]["fail"] == 0


def test_same_seed_same_report(tmp_path, capsys):
    outs = []
    for name in ("a.json", "b.json"):
        path = tmp_path / name
        code, _, _ = run(["verify", "genericity", "--seed", "5", "--cache", str(tmp_path),
                          "--output", str(path)], capsys)
        assert code == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_ks_algebra_seed_determinism(capsys):
    a = run(["ks", "check-algebra", "--json", "--seed", "3"], capsys)[1]
    b = run(["ks", "check-algebra", "--json", "--seed", "3"], capsys)[1]
    assert a == b and json.loads(a)["summary"]["pass"] == 1


def test_text_rendering(capsys):
    code, out, _ = run(["verify", "lattice"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1].endswith("0 failed, 0 skipped")
    assert any(line.startswith("[PASS   ] accept.glue") for line in lines)


def test_report_structure(cache_dir):
    cfg = cli.RunConfig(seed=0, cache_dir=cache_dir, tolerances=dict(cli.DEFAULT_TOLERANCES))
    rep = cli.run_suites(["genericity", "gkz"], cfg)
    assert set(rep) >= {"toolkit", "version", "seed", "suites", "summary", "checks"}
    for c in rep["checks"]:
        assert set(c) == {"id", "anchor", "status", "details"}
        assert c["status"] in ("pass", "fail", "skipped")
    assert cli.exit_code(rep) == 0


def test_parallel_matches_serial(cache_dir):
    cfg = cli.RunConfig(seed=1, cache_dir=cache_dir, tolerances=dict(cli.DEFAULT_TOLERANCES))
    a = cli.run_suites(["lattice", "genericity"], cfg, parallel=1)
    b = cli.run_suites(["lattice", "genericity"], cfg, parallel=2)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
