"""Tests for the cross-checking harness."""

import json

import pytest

from svtab.paths import weight_counts
from svtab.verify import (
    CheckReport,
    check_identity_10_1,
    check_lemma,
    check_theorem,
    documented_edge,
    feasible_weights,
    report_is_documented,
    run_all,
)


def by_status(reports):
    out = {}
    for r in reports:
        out.setdefault(r.status, []).append(r)
    return out


def test_feasible_weights_match_oracle_support():
    # the predicate must carve out exactly the weights some path attains
    for n in range(7):
        for f in range(3):
            for t in range(3):
                support = set(weight_counts(n, f, t))
                assert set(feasible_weights(n, f, t)) == support, (n, f, t)


def test_documented_edge_table():
    assert documented_edge("cor4", {"n": 1, "t": 0})
    assert not documented_edge("cor4", {"n": 2, "t": 0})
    assert documented_edge("thm5", {"n": 2, "t": 1})
    assert not documented_edge("thm5", {"n": 3, "t": 1})
    assert documented_edge("thm6", {"n": 5, "f": 2, "t": 1})
    assert not documented_edge("thm6", {"n": 5, "f": 2, "t": 2})
    assert not documented_edge("thm6", {"n": 5, "f": 2, "t": 0})
    assert documented_edge("thm7", {"n": 4, "f": 3, "t": 2})
    assert not documented_edge("thm7", {"n": 4, "f": 1, "t": 1})
    assert documented_edge("lemma17", {"n": 2, "t": 0})
    assert not documented_edge("lemma17", {"n": 3, "t": 0})
    assert documented_edge("lemma20", {"f": 3, "t": 1, "n": 9})
    assert not documented_edge("lemma20", {"f": 1, "t": 1, "n": 9})
    assert documented_edge("lemma30", {"f": 2, "t": 1, "n": 4})
    assert documented_edge("identity_10_1", {"K": 0, "M": 0})
    assert not documented_edge("identity_10_1", {"K": 0, "M": 1})
    assert not documented_edge("thm1", {"n": 3, "t": 0})


def test_check_thm1_all_agree():
    reports = by_status(check_theorem("thm1", 6))
    assert set(reports) <= {"agree"}
    assert len(reports["agree"]) > 0


def test_check_cor4_flags_only_n1():
    reports = check_theorem("cor4", 5)
    bad = [r for r in reports if r.status == "disagree"]
    assert {r.params["n"] for r in bad} == {1}
    for r in bad:
        assert report_is_documented(r)


def test_check_thm5_documented_points():
    reports = check_theorem("thm5", 5)
    bad = [(r.params["n"], r.params["t"]) for r in reports
           if r.status == "disagree"]
    assert sorted(bad) == [(2, 0), (2, 1)]


def test_check_thm6_defect_region():
    reports = check_theorem("thm6", 6)
    for r in reports:
        if r.status == "disagree":
            assert 0 < r.params["t"] < r.params["f"], r.params
            assert report_is_documented(r)


def test_check_thm7_spot():
    reports = check_theorem("thm7", 6)
    spot = {(r.params["n"], r.params["f"], r.params["t"]): r for r in reports}
    r = spot[(3, 1, 1)]
    assert r.status == "agree"
    assert r.formula == 6
    r = spot[(3, 2, 1)]
    assert r.status == "disagree"
    assert (r.formula, r.path) == (3, 4)


def test_check_theorem_rejects_unknown_id():
    with pytest.raises(ValueError):
        check_theorem("thm9", 4)


def test_report_json_shape():
    r = check_theorem("thm1", 3)[0]
    data = r.to_json_dict()
    assert sorted(data) == ["check", "formula", "params", "path",
                            "series", "status", "tableau"]
    json.dumps(data)
    assert "timing" not in data


def test_report_json_renders_fractions():
    reports = check_theorem("thm5", 3)
    r = next(x for x in reports if x.params["n"] == 3 and x.params["t"] == 1)
    data = r.to_json_dict()
    assert data["formula"] == "2/3"
    assert data["status"] == "agree"


def test_lemma_agreement_and_mismatch_reporting():
    ok = check_lemma(13, 6, 6)
    assert ok.status == "agree"
    bad = check_lemma(20, 8, 8)
    assert bad.status == "disagree"
    assert bad.params["mismatches"]
    for point in bad.params["mismatches"]:
        assert 0 < point["t"] < point["f"]
    clean = check_lemma(21, 8, 8)
    assert clean.status == "agree"


def test_lemma17_single_defect_point():
    assert check_lemma(17, 2, 4).status == "disagree"
    assert check_lemma(17, 3, 4).status == "agree"
    assert check_lemma(17, 4, 6).status == "agree"


def test_lemma30_defect_values():
    bad = check_lemma(30, 4, 4)
    assert bad.status == "disagree"
    first = bad.params["mismatches"][0]
    assert (first["f"], first["t"]) == (2, 1)


def test_lemma_rejects_bad_arguments():
    with pytest.raises(ValueError):
        check_lemma(11, 4, 4)
    with pytest.raises(ValueError):
        check_lemma(13, 9, 4)  # n beyond the series order


def test_identity_10_1_only_origin_fails():
    reports = check_identity_10_1(bound=10)
    bad = [r for r in reports if r.status == "disagree"]
    assert [(r.params["K"], r.params["M"]) for r in bad] == [(0, 0)]
    assert all(report_is_documented(r) for r in bad)


def test_run_all_small_is_ok_and_deterministic():
    a = run_all(3)
    b = run_all(3)
    # timing varies run to run; the serialized projection must not
    assert [r.to_json_dict() for r in a["reports"]] == \
        [r.to_json_dict() for r in b["reports"]]
    assert a["summary"] == b["summary"]
    assert a["summary"]["ok"] is True
    assert a["summary"]["undocumented_disagreements"] == []
    assert a["summary"]["counts"]["builder-error"] == 0
    assert a["summary"]["total"] == len(a["reports"])


def test_run_all_zero_is_empty():
    out = run_all(0)
    assert out["reports"] == []
    assert out["summary"]["ok"] is True


def test_run_all_reports_are_serializable():
    out = run_all(2)
    payload = {"summary": out["summary"],
               "reports": [r.to_json_dict() for r in out["reports"]]}
    text = json.dumps(payload, sort_keys=True)
    assert json.loads(text) == payload


def test_synthetic_undocumented_report_is_flagged():
    r = CheckReport(check="cor4", params={"n": 5, "t": 0},
                    tableau=7, path=7, series=7, formula=8,
                    status="disagree")
    assert not report_is_documented(r)
