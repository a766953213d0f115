"""Verification harness: witnesses, reports, re-runs, and check outcomes."""

import pytest

from matroidsplit import catalog, verify
from matroidsplit.gf2 import Gf2Matrix
from matroidsplit.matroid import BinaryMatroid
from matroidsplit.ops import splitting
from matroidsplit.verifyreport import VerificationReport, make_failure


def f_plus_loop():
    f = catalog.get("F").matroid
    from matroidsplit.ops import add_loops

    return add_loops(f, ("l",))


# -- splitting-minor witnesses -------------------------------------------------------


def test_marked_triple_witness_for_f1():
    entry = catalog.get("F_1")
    w = verify.splitting_minor_witness(entry.matroid, 3)
    assert w is not None
    assert w.verify(entry.matroid)


def test_f_itself_has_no_single_element_witness():
    # Any splitting of F on one element raises the rank to 3, but an F minor
    # needs rank 2 on all five elements.
    assert verify.splitting_minor_witness(catalog.get("F").matroid, 1) is None


def test_small_ground_sets_never_produce_witnesses():
    m = BinaryMatroid.from_matrix(("a", "b", "c"),
                                  Gf2Matrix.from_bits(["111"]))
    for k in (1, 2, 3):
        assert verify.splitting_minor_witness(m, k) is None


def test_witness_bounds():
    m = catalog.get("F").matroid
    with pytest.raises(ValueError):
        verify.splitting_minor_witness(m, 0)
    with pytest.raises(ValueError):
        verify.splitting_minor_witness(m, 6)


def test_loop_splitting_produces_a_witness():
    # Splitting a loop turns it into a coloop; contracting it restores F.
    host = f_plus_loop()
    w = verify.splitting_minor_witness(host, 1)
    assert w is not None
    assert w.y_set == {"l"}
    assert w.verify(host)


# -- emptiness checks (known to fail; see the gf-empty reports) -----------------------


def test_split_minor_empty_records_counterexamples(corpus7):
    report = verify.check_split_minor_empty(corpus7, 1)
    assert report.verdict == "fail"
    assert len(report.failures) == 25
    for failure in report.failures:
        assert verify.rerun_case(report.name, failure)
    tokens = {f.matroid for f in report.failures}
    assert verify.compact(f_plus_loop()) not in tokens  # labels differ
    assert any(verify.from_compact(t).is_isomorphic(f_plus_loop()) is not None
               for t in tokens)
    report2 = verify.check_split_minor_empty(corpus7, 2)
    assert report2.verdict == "fail"
    assert len(report2.failures) == 35


def test_split_minor_empty_observes_all_binary_reading(corpus7):
    report = verify.check_split_minor_empty(corpus7, 1)
    assert report.observations["all_binary_reading_members"] == 7
    assert report.observations["all_binary_reading_witnesses"] >= 1


def test_split_minor_empty_rejects_large_k(corpus6):
    with pytest.raises(ValueError):
        verify.check_split_minor_empty(corpus6, 3)


# -- the k >= 3 characterization --------------------------------------------------------


def test_characterization_holds_exhaustively(corpus7):
    report = verify.check_split_minor_characterization(corpus7, 3)
    assert report.verdict == "pass"
    assert report.cases == len(corpus7.gammoids())
    assert report.observations["members_with_splitting_minor"] == 76


def test_characterization_requires_k_at_least_three(corpus6):
    with pytest.raises(ValueError):
        verify.check_split_minor_characterization(corpus6, 2)


# -- quotient enumeration -----------------------------------------------------------------


def test_quotients_of_f():
    report = verify.check_quotients_of_f()
    assert report.verdict == "pass"
    assert report.observations["quotient_class_counts"] == {
        "Q_1": 6, "Q_2": 2, "Q_3": 4}


# -- splittings on three elements -----------------------------------------------------------


def test_splitting_excluded_minors(corpus7):
    report = verify.check_splitting_excluded_minors(corpus7)
    assert report.verdict == "pass"
    obs = report.observations
    assert obs["members_with_excluded_minor"] == 14
    assert obs["members_where_some_splitting_non_gammoid"] == 14
    assert obs["pinned_reading_agreements"] == obs["pinned_reading_pairs_checked"]


# -- 3-fold --------------------------------------------------------------------------------


def test_three_fold_check(corpus6):
    report = verify.check_three_fold_excluded_minor(corpus6)
    assert report.verdict == "pass"
    obs = report.observations
    assert obs["direction_a_admissible_pairs"] == 0
    assert obs["members_with_excluded_minor"] == 55
    assert obs["members_where_some_fold_non_gammoid"] == 55
    assert obs["ghafari_construction_identical"] == \
        obs["ghafari_construction_compared"]


# -- element-splitting identities ----------------------------------------------------------


def test_esplit_identities(corpus6):
    report = verify.check_element_splitting_identities(corpus6.members)
    assert report.verdict == "pass"
    assert report.failures == ()


# -- dispatch / reports / re-runs -------------------------------------------------------------


def test_run_checks_unknown_name(corpus6):
    with pytest.raises(ValueError, match="unknown check"):
        verify.run_checks(["nope"], corpus6)


def test_run_checks_corpusless_subset():
    reports = verify.run_checks(["catalog", "quotients"], None)
    assert [r.name for r in reports] == ["catalog", "quotients"]
    assert all(r.verdict == "pass" for r in reports)


def test_run_checks_requires_corpus_for_sweeps():
    with pytest.raises(ValueError, match="need a corpus"):
        verify.run_checks(["main"], None)


def test_reports_are_deterministic(corpus6):
    a = verify.check_three_fold_excluded_minor(corpus6).to_json_dict()
    b = verify.check_three_fold_excluded_minor(corpus6).to_json_dict()
    a.pop("wall_time")
    b.pop("wall_time")
    assert a == b


def test_report_invariants():
    with pytest.raises(ValueError):
        VerificationReport("x", "u", 1,
                           (make_failure("m", {}, "a", "b"),),
                           0.0, "pass")
    with pytest.raises(ValueError):
        VerificationReport("x", "u", 1, (), 0.0, "fail")


def test_compact_round_trip(corpus6):
    for m in corpus6.members[:40]:
        token = verify.compact(m)
        back = verify.from_compact(token)
        assert back.same_matrix(m)


def test_rerun_reproduces_synthetic_failure():
    host = f_plus_loop()
    failure = make_failure(verify.compact(host), {"k": 1},
                           expected="absent", got="witness Y={l}")
    assert verify.rerun_case("gf-empty-k1", failure)
    wrong = make_failure(verify.compact(host), {"k": 1},
                         expected="absent", got="witness Y={left1}")
    assert not verify.rerun_case("gf-empty-k1", wrong)


def test_rerun_known_instance_cases():
    for case, got in (
        ("known-instance-rows", "111000/110101/100011"),
        ("known-instance-iso", "3-fold of G_4 isomorphic to K4"),
        ("known-instance-gammoid", "3-fold of G_4 is not a gammoid"),
    ):
        failure = make_failure("catalog:G_4", {"case": case},
                               expected="whatever", got=got)
        assert verify.rerun_case("main", failure)


def test_evaluate_case_covers_every_check(corpus6):
    m = corpus6.members[0]
    token = verify.compact(m)
    assert verify.evaluate_case("gf-minors", token, {"k": "3"})
    assert verify.evaluate_case("esplit-identities", token, {"T": m.labels[0]})
    with pytest.raises(ValueError, match="no single-case evaluator"):
        verify.evaluate_case("mystery", token, {})


def test_parallel_jobs_give_identical_reports(corpus6):
    serial = verify.check_split_minor_characterization(corpus6, 3)
    parallel = verify.check_split_minor_characterization(corpus6, 3, jobs=2)
    a, b = serial.to_json_dict(), parallel.to_json_dict()
    a.pop("wall_time")
    b.pop("wall_time")
    assert a == b
