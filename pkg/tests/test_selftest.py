import json

from graphforms import run_selftest
from graphforms.selftest import SELFTEST_GRAPHS, render_text


def test_selftest_passes():
    report = run_selftest(seed=0, trials=2)
    assert report["passed"] is True
    assert all(row["status"] == "pass" for row in report["checks"])
    # every corpus graph appears in every per-graph check family
    graphs = {row["graph"] for row in report["checks"]}
    assert graphs == set(SELFTEST_GRAPHS)


def test_selftest_is_deterministic():
    a = json.dumps(run_selftest(seed=3, trials=2), sort_keys=True)
    b = json.dumps(run_selftest(seed=3, trials=2), sort_keys=True)
    assert a == b


def test_selftest_report_has_no_volatile_fields():
    report = run_selftest(seed=0, trials=1)
    assert set(report) == {"seed", "trials", "checks", "passed"}
    for row in report["checks"]:
        assert set(row) == {"name", "graph", "status"}


def test_render_text_summarizes():
    report = run_selftest(seed=0, trials=1)
    text = render_text(report)
    assert "PASS" in text
    assert text.strip().endswith(f"all {len(report['checks'])} checks passed")
