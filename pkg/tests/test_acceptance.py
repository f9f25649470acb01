"""Acceptance suite.

One test per acceptance criterion, each run at its stated mode window and
degree bound.  Every check is an exact rational identity; there are no
tolerances anywhere.  Each test prints one pass/fail line (run pytest with
-s to see them inline).

Two sub-criteria are implemented as stated and marked strict-xfail because
they are mathematically unattainable; the ground truth is pinned by the
accompanying green tests and the independent residue oracle:

 * the mixed tabulated closed form for t^k d(t^l u) holds only for k = 0,
   k + l = 0 or k + l <= -2 (criterion 2's full-agreement claim fails on 83
   of the 507 pairs, each by exactly the signed-Catalan correction);
 * consequently the w1 central terms of the relation table deviate from
   the computed Kassel bracket on the same domain (criterion 3's full
   table-agreement claim fails on 59 pairs in each of the six mixed
   families).

Everything downstream of the realization is insensitive to the defect
(the realization sends w1 to 0), and the headline criterion 7 passes
exactly: zero failures over both normal orderings, three central values,
all 36 generator pairs and the full state basis.
"""

import time

import pytest

from threepoint.rational import Rational
from threepoint.verify import VerifyConfig, report_to_json, run

from oracles import predicted_literal_failures


def _families(report, prefix):
    for rec in report["records"]:
        if rec["check"].startswith(prefix) and "failures" in rec:
            yield rec


def _announce(num, ok, text):
    print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {num}: {text}")


def test_criterion_1_ring_isomorphisms():
    t0 = time.time()
    report = run(VerifyConfig(suites=("ring",)))
    n = report["summary"]["passed"]
    ok = report["summary"]["failed"] == 0
    _announce(1, ok, f"ring isomorphism roundtrip and multiplicativity "
                     f"({n} checks, {time.time() - t0:.2f}s)")
    assert ok


def test_criterion_2_kahler_reduction():
    t0 = time.time()
    report = run(VerifyConfig(suites=("kahler",)))
    per = report["summary"]["per_suite"]["kahler"]
    by_check = {rec["check"]: rec for rec in report["records"]
                if "failures" in rec}
    exact_ok = by_check["reduce(d(g)) == 0"]["failures"] == 0
    tt_ok = by_check["pairing == closed_form[tt]"]["failures"] == 0
    uu_ok = by_check["pairing == closed_form[uu]"]["failures"] == 0
    skew_ok = by_check["pairing(f,g) == -pairing(g,f)"]["failures"] == 0
    tu = by_check["pairing == closed_form[tu]"]
    # the mixed closed form disagrees on exactly the predicted 83 pairs
    predicted = {(k, l) for k in range(-6, 7) for l in range(-6, 7)
                 if k != 0 and (k + l == -1 or k + l >= 1)}
    observed = {(rec["detail"]["k"], rec["detail"]["l"])
                for rec in report["records"]
                if rec["check"] == "pairing == closed_form[tu]"
                and rec["status"] == "fail" and "detail" in rec}
    ok = (exact_ok and tt_ok and uu_ok and skew_ok
          and tu["failures"] == 83 and observed == predicted)
    _announce(2, ok, "one-form reduction: exactness and closed forms "
              f"({per['passed']} pass; mixed closed form holds on "
              f"{tu['count'] - tu['failures']}/169 pairs, the other 83 "
              f"differ by the documented signed-Catalan correction, "
              f"{time.time() - t0:.2f}s)")
    assert ok


@pytest.mark.xfail(strict=True, reason="the tabulated mixed closed form is "
                   "wrong off k = 0, k+l = 0, k+l <= -2; see the ledger and "
                   "test_kahler for the exact correction")
def test_criterion_2_as_stated_all_507_agree():
    report = run(VerifyConfig(suites=("kahler",)))
    for rec in _families(report, "pairing == closed_form"):
        assert rec["failures"] == 0


def test_criterion_3_relation_table():
    t0 = time.time()
    report = run(VerifyConfig(suites=("current",)))
    mixed = {"bracket == table [h,h1]", "bracket == table [h1,h]",
             "bracket == table [e,f1]", "bracket == table [f1,e]",
             "bracket == table [e1,f]", "bracket == table [f,e1]"}
    clean_ok = True
    mixed_ok = True
    for rec in _families(report, "bracket == table"):
        if rec["check"] in mixed:
            mixed_ok &= rec["failures"] == 59
        else:
            clean_ok &= rec["failures"] == 0
    other_ok = all(rec["failures"] == 0 for rec in report["records"]
                   if "failures" in rec
                   and not rec["check"].startswith("bracket == table"))
    jac = next(rec for rec in report["records"]
               if rec["check"].startswith("jacobi"))
    ok = clean_ok and mixed_ok and other_ok and jac["failures"] == 0
    _announce(3, ok, "bracket vs relation table: 30/36 families exact "
              "everywhere, 6 mixed families exact away from the documented "
              "59-pair w1 domain; Jacobi "
              f"({jac['count']} triples), antisymmetry, centrality and "
              f"quasi-grading all exact ({time.time() - t0:.1f}s)")
    assert ok


@pytest.mark.xfail(strict=True, reason="the tabulated w1 central terms are "
                   "wrong off the delta support (and the table itself "
                   "violates Jacobi there); see the ledger and test_current")
def test_criterion_3_as_stated_all_4356_agree():
    report = run(VerifyConfig(suites=("current",)))
    for rec in _families(report, "bracket == table"):
        assert rec["failures"] == 0


def test_criterion_4_oscillator_relations():
    t0 = time.time()
    report = run(VerifyConfig(suites=("oscillator",)))
    per = report["summary"]["per_suite"]["oscillator"]
    ok = per["failed"] == 0
    _announce(4, ok, f"oscillator commutator table, both orderings "
              f"({per['passed']} checks, {time.time() - t0:.1f}s)")
    assert ok


def test_criterion_5_heisenberg_relations():
    t0 = time.time()
    derived = run(VerifyConfig(suites=("heisenberg",),
                               kappa0=Rational(7, 3), chi1=Rational(5, 2)))
    ok = derived["summary"]["failed"] == 0
    literal = run(VerifyConfig(suites=("heisenberg",), heis_variant="paper",
                               kappa0=Rational(7, 3), chi1=Rational(5, 2)))
    assert literal["summary"]["asserted_failed"] == 0  # report-only
    observed = set()
    for rec in literal["records"]:
        if rec["status"] == "fail" and "detail" in rec:
            assert rec["check"] == "[b1_m, b1_n] residual"
            observed.add((rec["detail"]["m"], rec["detail"]["n"]))
    predicted = predicted_literal_failures((-4, 4))
    ok = ok and observed == predicted
    _announce(5, ok, "Heisenberg relations: derived operator family exact "
              f"({derived['summary']['passed']} checks at generic rational "
              "parameters); literal family recorded report-only, residuals "
              f"at exactly the {len(predicted)} predicted mode pairs "
              f"({time.time() - t0:.1f}s)")
    assert ok


def test_criterion_6_pair_commutators():
    t0 = time.time()
    report = run(VerifyConfig(suites=("pairs",)))
    per = report["summary"]["per_suite"]["pairs"]
    ok = per["failed"] == 0
    _announce(6, ok, f"composite-field mode commutators, items (1)-(3), "
              f"both orderings ({per['passed']} checks, "
              f"{time.time() - t0:.1f}s)")
    assert ok


def test_criterion_7_realization_main():
    t0 = time.time()
    report = run(VerifyConfig(suites=("realization",)))
    per = report["summary"]["per_suite"]["realization"]
    ok = per["failed"] == 0
    _announce(7, ok, "free-field realization: commutators of all realized "
              "current modes match the abstract bracket on the full state "
              "basis, r in {0,1}, three central values "
              f"({per['passed']} checks, {time.time() - t0:.0f}s)")
    if not ok:
        offenders = [rec["detail"] for rec in report["records"]
                     if rec["status"] == "fail" and "detail" in rec][:20]
        print("offending checks:", offenders)
    assert ok


def test_criterion_8_determinism():
    t0 = time.time()
    cfg = VerifyConfig(window=(-1, 1), degree_max=1,
                       realization_r=(0, 1),
                       realization_kappa0=(Rational(0), Rational(1)))
    blob1 = report_to_json(run(cfg))
    blob2 = report_to_json(run(cfg))
    ok = blob1 == blob2
    cfg5 = VerifyConfig(suites=("heisenberg",), heis_variant="paper",
                        kappa0=Rational(7, 3))
    ok = ok and report_to_json(run(cfg5)) == report_to_json(run(cfg5))
    _announce(8, ok, "byte-identical reports for identical configurations "
              f"({time.time() - t0:.1f}s)")
    assert ok
