"""One pass/fail line per acceptance criterion, from a single full verification run."""
import pytest

from k3fourh import cli

from conftest import ACCEPTANCE_LINES

CRITERIA = [
    ("Lattice constants", "accept.lattice_constants"),
    ("Glue", "accept.glue"),
    ("G(2)", "accept.g2"),
    ("Fibration", "accept.fibration"),
    ("Genericity", "accept.genericity"),
    ("GKZ", "accept.gkz"),
    ("Periods", "accept.periods"),
    ("Kuga-Satake", "accept.ks"),
]


@pytest.fixture(scope="module")
def report(cache_dir):
    cfg = cli.RunConfig(seed=42, cache_dir=cache_dir, tolerances=dict(cli.DEFAULT_TOLERANCES))
    rep = cli.run_suites(list(cli.SUITES), cfg, parallel=len(cli.SUITES))
    by_id = {c["id"]: c for c in rep["checks"]}
    print()
    for name, cid in CRITERIA:
        status = by_id[cid]["status"].upper() if cid in by_id else "MISSING"
        line = f"{status} {name} ({cid})"
        print(line)
        ACCEPTANCE_LINES.append(line)
    return rep, by_id


@pytest.mark.parametrize("name,cid", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_criterion(report, name, cid):
    _, by_id = report
    assert cid in by_id, f"{name}: no check {cid}"
    assert by_id[cid]["status"] == "pass", f"{name}: {by_id[cid]['details']}"


def test_all_checks_pass(report):
    rep, _ = report
    failed = [c["id"] for c in rep["checks"] if c["status"] != "pass"]
    assert not failed
    assert cli.exit_code(rep) == 0
