# test_verify.py
import pytest

from checks import CATALOGUE
from errors import RingError
from verify import FAMILIES, MUTATIONS, get_family, resolve_suite, run_suite


def test_resolve_suite():
    assert resolve_suite("all") == list(CATALOGUE)
    assert resolve_suite(None) == list(CATALOGUE)
    assert resolve_suite("ideal-closure, ring-axioms") == ["ring-axioms", "ideal-closure"]
    with pytest.raises(RingError, match="unknown check ids"):
        resolve_suite("ring-axioms,no-such-check")


def test_families_are_registered():
    assert set(FAMILIES) == {"cyclic", "products", "monomial", "triangular", "matrix",
                             "morita", "gmr-2x2-over-z4", "examples"}
    assert len(get_family("gmr-2x2-over-z4").builders()) == 9
    with pytest.raises(RingError):
        get_family("no-such-family")


def test_oversized_members_are_skipped_not_dropped():
    report = run_suite(get_family("cyclic"), ["ring-axioms"], max_size=12, progress=False)
    assert len(report.results) == 63
    assert report.counts == {"pass": 11, "fail": 0, "skipped": 52}
    assert not report.failed
    assert report.coverage_gaps == []
    skipped = [r for r in report.results if r.verdict == "skipped"]
    assert skipped[0].ring == "Z13"
    assert skipped[0].reason.startswith("budget:")


def test_results_follow_member_order():
    report = run_suite(get_family("cyclic"), ["ring-axioms", "ideal-closure"], max_size=6,
                       progress=False)
    rings = [r.ring for r in report.results if r.verdict != "skipped"]
    assert rings == ["Z2", "Z2", "Z3", "Z3", "Z4", "Z4", "Z5", "Z5", "Z6", "Z6"]


def test_corrupted_theta_is_detected():
    report = run_suite(get_family("gmr-2x2-over-z4"), ["ring-axioms"], mutation="corrupt-theta",
                       progress=False)
    assert report.failed
    assert all(r.verdict == "fail" for r in report.results)


def test_dropped_closure_is_detected():
    report = run_suite(get_family("cyclic"), ["ideal-closure"], max_size=8,
                       mutation="drop-closure", progress=False)
    assert report.failed
    assert any(r.ring == "Z6" and r.verdict == "fail" for r in report.results)


def test_unmutated_suite_is_clean():
    report = run_suite(get_family("cyclic"), ["ideal-closure"], max_size=8, progress=False)
    assert not report.failed


def test_unknown_mutation_is_rejected():
    assert "corrupt-theta" in MUTATIONS
    with pytest.raises(RingError):
        run_suite(get_family("cyclic"), ["ring-axioms"], mutation="flip-bits")


SLOW_FAMILIES = {"cyclic", "products", "triangular", "matrix", "examples"}


@pytest.mark.parametrize("family_id", [
    pytest.param(f, marks=[pytest.mark.slow] if f in SLOW_FAMILIES else [], id=f)
    for f in FAMILIES])
def test_full_catalogue_passes_on_every_family(family_id):
    report = run_suite(get_family(family_id), resolve_suite("all"), progress=False)
    failures = [(r.check_id, r.ring, r.reason, r.witness)
                for r in report.results if r.verdict == "fail"]
    assert not report.failed, failures
    assert report.counts["pass"] > 0
