import pytest

from verbclosure.models import KleinElt
from verbclosure.services.selfcheck import SUITES, run_selfcheck


@pytest.mark.parametrize("name", ["nielsen", "group-axioms", "squares", "retraction", "certificate", "grammar"])
def test_suite_passes(name):
    report = run_selfcheck("quick", [name])
    assert report.ok, [c for c in report.checks if not c.passed]
    assert report.result["suites"][name]["passed"]


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_selfcheck("quick", ["nosuch"])


def test_mutated_group_law_is_caught(monkeypatch):
    # abelian law: a^b = a⁻¹ no longer holds
    monkeypatch.setattr(KleinElt, "__mul__", lambda self, other: KleinElt(self.l + other.l, self.k + other.k))
    report = run_selfcheck("quick", ["group-axioms", "squares"])
    assert not report.ok
    assert report.exit_status == 1
    assert any(c.name == "group-axioms.K-relation" and not c.passed for c in report.checks)


def test_crashing_suite_becomes_failed_check(monkeypatch):
    def explode(bounds, rng, report):
        raise RuntimeError("boom")

    monkeypatch.setitem(SUITES, "certificate", explode)
    report = run_selfcheck("quick", ["certificate"])
    assert not report.ok
    assert report.checks[0].name == "certificate.completed"
    assert "boom" in report.checks[0].detail


def test_reports_are_deterministic():
    first = run_selfcheck("quick", ["nielsen", "grammar"]).to_json()
    second = run_selfcheck("quick", ["nielsen", "grammar"]).to_json()
    assert first == second


@pytest.mark.slow
def test_quick_profile_passes():
    report = run_selfcheck("quick")
    assert report.ok, [c for c in report.checks if not c.passed]
    assert set(report.result["suites"]) == set(SUITES)


@pytest.mark.slow
def test_full_profile_passes():
    assert run_selfcheck("full").ok


def test_nielsen_suite_covers_random_automorphisms():
    report = run_selfcheck("quick", ["nielsen"])
    names = {c.name for c in report.checks}
    assert {"nielsen.gcd-invariant", "nielsen.random-aut-round-trip", "nielsen.reduce-idempotent"} <= names
