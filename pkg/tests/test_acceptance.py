"""Acceptance criteria 1-10.

Each test records its verdict in RESULTS; conftest prints one PASS/FAIL line
per criterion in the terminal summary.
"""

from __future__ import annotations

import itertools
import time

import pytest

from conftest import (ABELIAN, CORPUS, DIHEDRAL, EXTENSIONS, METACYCLIC, PERMS, PRODUCTS, QUATERNION, SYMALT,
                      abelian_invariant_lists, group, report)
from cutgroups import chartable, cli, engine, surveys
from cutgroups.classify import classify
from cutgroups.errors import NotApplicable
from cutgroups.report import analyze, dumps

RESULTS: dict[int, bool] = {}
TITLES = {
    1: "alternating cut and USR lists",
    2: "metacyclic SR-not-cut table",
    3: "metacyclic QR iff USR",
    4: "G1/G2 field counts",
    5: "three cut tests, real counts, orthogonality",
    6: "inclusion chain and witnesses",
    7: "abelian law",
    8: "direct products",
    9: "spectra, GK-graphs, Tent bound",
    10: "determinism",
}


def record(n, ok):
    RESULTS[n] = RESULTS.get(n, True) and bool(ok)
    return ok


@pytest.fixture(scope="module")
def metacyclic_survey():
    t0 = time.perf_counter()
    result = surveys.metacyclic_sr_survey()
    return result, time.perf_counter() - t0


# --- 1 ---------------------------------------------------------------------------

def test_c01_alternating_lists():
    t0 = time.perf_counter()
    rows = surveys.alternating_survey(22)
    elapsed = time.perf_counter() - t0
    cut = [r.n for r in rows if r.cut]
    usr = [r.n for r in rows if r.usr]
    ok = (cut == [1, 2, 3, 4, 7, 8, 9, 12]
          and usr == [n for n in range(1, 23) if n not in (16, 21)]
          and elapsed < 60)
    assert record(1, ok), (cut, usr, elapsed)


def test_c01_cli_expect_reference(capsys):
    code = cli.main(["survey", "alternating", "--max", "22", "--expect", "paper"])
    assert record(1, code == cli.EXIT_OK)


# --- 2 ---------------------------------------------------------------------------

def test_c02_metacyclic_rows_and_m(metacyclic_survey):
    result, elapsed = metacyclic_survey
    gold = surveys.golden()["metacyclic_sr"]
    uniform = [j for j, e in enumerate(gold) if e["m"] is not None]
    empty = [j for j, e in enumerate(gold) if e["m"] is None]
    matched = {j: result.rows[i] for i, j in result.matches.items()}
    ok = (len(result.rows) == 18 and result.ok and elapsed < 300
          and len(uniform) == 16 and all(result.m_checks[j] for j in uniform)
          and len(empty) == 2 and all(not matched[j].usr_m_set for j in empty))
    assert record(2, ok), (len(result.rows), result.unmatched_rows, result.m_checks, elapsed)


@pytest.mark.xfail(strict=True, reason="empty usr set forces QR false (criterion 3), so QSR cannot hold")
def test_c02_empty_rows_qsr(metacyclic_survey):
    result, _ = metacyclic_survey
    gold = surveys.golden()["metacyclic_sr"]
    matched = {j: result.rows[i] for i, j in result.matches.items()}
    qsr = [matched[j].verdicts["qsr"] for j, e in enumerate(gold) if e["m"] is None]
    assert record(2, qsr == [True, True]), qsr


# --- 3 ---------------------------------------------------------------------------

def test_c03_qr_iff_usr(metacyclic_survey):
    result, _ = metacyclic_survey
    bad = [p for p, rep in result.reports.items() if rep.quadratic_rational != bool(rep.usr_m_set)]
    ok = not bad and len(result.reports) > 100
    assert record(3, ok), bad


# --- 4 ---------------------------------------------------------------------------

@pytest.mark.parametrize("spec,expected", [("G1", (10, 8, 6, 0)), ("G2", (6, 8, 2, 8))])
def test_c04_counts(spec, expected):
    c = analyze(spec)["counts"]
    got = (c["rational_chars"], c["rational_classes"], c["quadratic_classes"], c["quadratic_chars"])
    assert record(4, got == expected), got


# --- 5 ---------------------------------------------------------------------------

def test_c05_corpus_shape(corpus_reports):
    orders = [rep.order for rep in corpus_reports.values()]
    families = [ABELIAN, DIHEDRAL, QUATERNION, METACYCLIC, EXTENSIONS, PRODUCTS, SYMALT, PERMS]
    ok = (len(CORPUS) >= 60 and max(orders) <= 2000 and all(families)
          and {"G1", "G2"} <= set(EXTENSIONS))
    assert record(5, ok)


@pytest.mark.parametrize("text", CORPUS)
def test_c05_oracle_agreement(text):
    rep = report(text)
    ct = rep.character_table
    c = rep.counts
    ok = (rep.cut == rep.cut_by_characters == (rep.rho == 0)
          and c.real_chars == c.real_classes
          and chartable.check_orthogonality(ct, rep.order))
    assert record(5, ok), (rep.cut, rep.cut_by_characters, rep.rho, c)


# --- 6 ---------------------------------------------------------------------------

@pytest.mark.parametrize("text", CORPUS)
def test_c06_chain(text):
    r = report(text)
    chain = [r.rational, r.cut, r.usr, r.qsr]
    ok = all(not a or b for a, b in zip(chain, chain[1:])) and (not r.qsr or (r.semirational and r.quadratic_rational))
    assert record(6, ok), chain


def test_c06_witnesses():
    c4, d10, a5, g1, g2 = (report(s) for s in ("C4", "D10", "alt(5)", "G1", "G2"))
    ok = (c4.cut and not c4.rational
          and d10.usr and not d10.cut
          and a5.qsr
          and g1.semirational and not g1.quadratic_rational
          and g2.quadratic_rational and not g2.semirational)
    assert record(6, ok)


# --- 7 ---------------------------------------------------------------------------

def test_c07_abelian_law():
    bad = []
    lists = abelian_invariant_lists(200)
    for inv in lists:
        r = classify(engine.realize(engine.Abelian(inv)))
        flags = {r.cut, r.usr, r.qsr, r.semirational, r.quadratic_rational}
        if r.cut != (r.exponent in (1, 2, 3, 4, 6)) or len(flags) != 1:
            bad.append(inv)
    ok = not bad and len(lists) == 389
    assert record(7, ok), bad


# --- 8 ---------------------------------------------------------------------------

def _product_pairs():
    small = [s for s in CORPUS if 1 < report(s).order <= 48 and s not in PRODUCTS]
    pairs = [(a, b) for a, b in itertools.combinations_with_replacement(small, 2)
             if report(a).order * report(b).order <= 240]
    pairs = [p for p in pairs if any(_applicable(*p, x) for x in surveys.CLASSES)]
    step = max(1, len(pairs) // 60)
    chosen = pairs[::step]
    for must in (("C3", "C4"), ("C3", "C6")):
        if must not in chosen:
            chosen.append(must)
    return chosen


def _applicable(a, b, x):
    try:
        surveys.predict_product(report(a), report(b), x)
        return True
    except NotApplicable:
        return False


PAIRS = _product_pairs()


def test_c08_enough_pairs():
    assert record(8, len(PAIRS) >= 50), len(PAIRS)


@pytest.mark.parametrize("a,b", PAIRS)
def test_c08_predict_equals_verify(a, b):
    checked = 0
    for x in surveys.CLASSES:
        try:
            pred = surveys.predict_product(report(a), report(b), x)
        except NotApplicable:
            continue
        actual = surveys.verify_product(group(a).spec, group(b).spec, x)
        checked += 1
        assert record(8, pred == actual), (x, pred, actual)
    assert checked


def test_c08_named_examples():
    ok = (surveys.predict_product(report("C3"), report("C4"), "cut") is False
          and surveys.verify_product(group("C3").spec, group("C4").spec, "cut") is False
          and surveys.predict_product(report("C3"), report("C6"), "cut") is True
          and surveys.verify_product(group("C3").spec, group("C6").spec, "cut") is True)
    assert record(8, ok)


# --- 9 ---------------------------------------------------------------------------

REGULAR_LABELS = set("abcdefghijklmnopqr")


@pytest.mark.parametrize("text", CORPUS)
def test_c09_spectra_graphs_tent(text):
    r = report(text)
    ok = surveys.spectrum_validate(r) == []
    if r.cut and r.solvable and r.order > 1:
        # the trivial group has an empty prime graph, which the catalog does not list
        ok = ok and surveys.figure1_lookup(r.gk_graph) in REGULAR_LABELS
    if r.semirational or r.quadratic_rational:
        ok = ok and r.group_field_degree <= 2 ** (len(r.primes) + 1)
    assert record(9, ok), (surveys.spectrum_validate(r), r.gk_graph, r.group_field_degree)


# --- 10 --------------------------------------------------------------------------

def test_c10_determinism():
    first = [dumps(analyze(s)) for s in CORPUS]
    second = [dumps(analyze(s)) for s in CORPUS]
    overridden = []
    for s, doc in zip(CORPUS, first):
        rep = report(s)
        if rep.order > 100:
            continue
        default = chartable.dixon_prime(rep.order, rep.exponent)
        other = chartable.next_dixon_prime(rep.order, rep.exponent, default)
        assert other != default
        overridden.append(dumps(analyze(s, dixon_prime=other)) == doc)
    ok = first == second and len(overridden) >= 30 and all(overridden)
    assert record(10, ok), (first == second, len(overridden), overridden.count(False))
