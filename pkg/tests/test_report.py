"""Certification report plumbing: records, rendering, failure capture."""

import json

from srg216 import report


def test_full_certification_passes(build):
    rep = report.run_certification(build)
    assert rep.passed
    assert len(rep.records) == 11
    assert [c.claim_id for c in rep.records] == [
        "C%d" % i for i in range(1, 12)]
    for c in rep.records:
        assert c.passed
        assert c.expected == c.computed
        assert isinstance(c.runtime_ms, int)
        assert c.runtime_ms >= 0


def test_render_text(build):
    rep = report.run_certification(build)
    text = report.render_text(rep)
    lines = text.strip().split("\n")
    assert len([ln for ln in lines if ln.startswith("C")]) == 11
    assert lines[0].startswith("C1")
    assert "PASS" in lines[0]
    assert "overall" in text.lower()


def test_render_json_round_trip(build):
    rep = report.run_certification(build)
    payload = json.loads(report.render_json(rep))
    assert payload["overall_pass"] is True
    assert len(payload["claims"]) == 11
    # deterministic rendering
    assert report.render_json(rep) == report.render_json(rep)


def test_exception_becomes_failed_claim(build, monkeypatch):
    def boom(b):
        raise RuntimeError("synthetic fault")

    monkeypatch.setattr(report, "_claim_surface_census", boom)
    rep = report.run_certification(build)
    c1 = rep.records[0]
    assert not c1.passed
    assert "synthetic fault" in c1.computed
    assert not rep.passed
    text = report.render_text(rep)
    assert "FAIL" in text
