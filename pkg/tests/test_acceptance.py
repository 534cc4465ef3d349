"""Acceptance criteria, one test each, with a PASS/FAIL line printed per criterion."""

import time

import pytest

from ocgroups import analysis as an
from ocgroups import constructions as cons
from ocgroups import lemma24, suite
from ocgroups.cli import main
from ocgroups.subgroups import enumerate_subgroups

PUBLISHED_PRIMES = {2, 3, 5, 7, 11, 13, 17, 19, 29, 31, 41, 71, 127}


@pytest.fixture
def verdict(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n[acceptance {n}] {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail
    return emit


@pytest.fixture(scope="module")
def catalog():
    start = time.perf_counter()
    cat = suite.default_catalog(6)
    return cat, time.perf_counter() - start


def test_criterion_1_lemma_2_4(verdict, capsys):
    start = time.perf_counter()
    code = main(["verify", "lemma-2-4"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    ok_table, table = lemma24.verify()
    pairs = lemma24.admissible_pairs()
    ok = (code == 0 and ok_table and set(table) == PUBLISHED_PRIMES
          and table[2] == (2, 3, 4, 6) and table[3] == (2, 4)
          and all(table[q] == (2,) for q in PUBLISHED_PRIMES - {2, 3})
          and len(pairs) == 17 and "17 admissible" in out and elapsed < 1.0)
    verdict(1, ok, f"{len(pairs)} pairs over {len(table)} primes, exit {code}, {elapsed:.2f}s")


def test_criterion_2_theorem_b_targets(verdict):
    start = time.perf_counter()
    rep = suite.run_theorem_b_targets()
    elapsed = time.perf_counter() - start
    targets = [v for v in rep.verdicts if not v.label.startswith("control")]
    controls = [v for v in rep.verdicts if v.label.startswith("control")]
    ok = (rep.passed and len(targets) == 4 and all(v.passed for v in targets)
          and len(controls) == 3 and all(v.passed for v in controls) and elapsed < 60)
    verdict(2, ok, f"targets {[v.label for v in targets if v.passed]}, controls "
                   f"{[(v.label, v.note) for v in controls]}, {elapsed:.1f}s")


def test_criterion_3_construction_orders(verdict):
    expected = {"W": (cons.frobenius_W, 72), "PSL(3,4)": (cons.psl_3_4, 20160),
                "L3(4).beta": (cons.l3_4_beta, 40320), "GL(2,3)": (cons.gl23, 48),
                "SL(2,5)": (cons.sl25, 120)}
    got = {}
    for name, (fn, order) in expected.items():
        G = fn()
        got[name] = (G.order(), len(G.elements()))
    ok = all(got[n] == (o, o) for n, (_, o) in expected.items())
    verdict(3, ok, ", ".join(f"{n}: bsgs {b} / enumerated {e}" for n, (b, e) in got.items()))


def test_criterion_4_paper_fact_suite(verdict):
    rep = suite.paper_fact_suite(6)
    failed = [f"{k} [{rep.details[k]}]" for k, ok in rep.checks.items() if not ok]
    ok = len(rep.checks) == 9 and not failed and rep.elapsed_ms < 120_000
    verdict(4, ok, f"{sum(rep.checks.values())}/9 checks hold in {rep.elapsed_ms / 1000:.1f}s"
                   + (f"; failing: {failed}" if failed else ""))


def test_criterion_5_theorem_a_and_syskin_scan(verdict, catalog):
    cat, build = catalog
    a = suite.run_theorem_a(cat)
    s = suite.run_syskin(cat)
    elapsed = build + (a.elapsed_ms + s.elapsed_ms) / 1000
    scanned = sum(1 for e in cat.entries if e.scan_class is not None)
    ok = a.passed and s.passed and scanned == 1455 and elapsed < 600
    verdict(5, ok, f"{len(a.verdicts)} groups ({scanned} subgroups of S6), "
                   f"{len(a.counterexamples) + len(s.counterexamples)} counterexamples, "
                   f"{elapsed:.1f}s")


def test_criterion_6_lemma_2_5_scan(verdict, catalog):
    cat, _ = catalog
    rep = suite.run_lemma_2_5(cat)
    verdict(6, rep.passed and len(rep.verdicts) == len(cat),
            f"{len(rep.verdicts)} groups, {len(rep.counterexamples)} counterexamples")


def test_criterion_7_character_oracle(verdict, catalog):
    cat, _ = catalog
    rep = suite.run_character_oracle(cat, max_order=500)
    expected = sum(1 for _ in cat.select(max_order=500))
    ok = rep.passed and len(rep.verdicts) == expected and rep.elapsed_ms < 300_000
    verdict(7, ok, f"{len(rep.verdicts)} groups of order <= 500, "
                   f"{len(rep.counterexamples)} disagreements, {rep.elapsed_ms / 1000:.1f}s")


def test_criterion_8_property_suites(verdict, catalog):
    cat, _ = catalog
    classes = suite.run_class_equation(cat)
    closure = suite.run_quotient_closure([("S5", cons.symmetric(5)), ("W", cons.frobenius_W())])
    s3 = len(enumerate_subgroups(cons.symmetric(3)))
    s4 = len(enumerate_subgroups(cons.symmetric(4)))
    ok = classes.passed and closure.passed and (s3, s4) == (6, 30)
    verdict(8, ok, f"class equation on {len(classes.verdicts)} groups, quotient closure over "
                   f"{len(closure.verdicts)} quotients, subgroups S3 {s3} / S4 {s4}")
