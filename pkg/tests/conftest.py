from __future__ import annotations

import functools
import itertools
import math

import numpy as np
import pytest

from cutgroups import engine
from cutgroups.classify import classify
from cutgroups.dsl import parse_spec

# Corpus used by the oracle-agreement, inclusion-chain and product checks.
ABELIAN = ["C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C12", "C24",
           "abelian(2,2)", "abelian(2,4)", "abelian(2,2,2)", "abelian(3,3)", "abelian(2,6)",
           "abelian(4,4)", "abelian(3,6)"]
DIHEDRAL = ["D6", "D8", "D10", "D12", "D14", "D16", "D18", "D20", "D24"]
QUATERNION = ["Q8", "Q12", "Q16", "Q24", "Q32"]
METACYCLIC = ["metacyclic(7,3,7,2)", "metacyclic(5,4,5,2)", "metacyclic(8,2,8,3)",
              "metacyclic(8,2,8,5)", "metacyclic(9,3,9,4)", "metacyclic(13,6,13,4)",
              "metacyclic(21,6,21,5)", "metacyclic(8,4,4,3)", "metacyclic(12,4,6,11)",
              "metacyclic(28,6,14,3)", "metacyclic(5,2,5,4)", "metacyclic(42,6,42,5)"]
EXTENSIONS = ["G1", "G2", "abc(5; [[2]]; 4)", "abc(3,3; [[2,0],[0,2]]; 2)"]
PRODUCTS = ["product(C3, C4)", "product(C3, C6)", "product(sym(3), C2)", "product(sym(3), sym(3))",
            "product(Q8, C3)", "product(D10, C2)", "product(alt(4), C2)", "product(Q8, C2)",
            "product(sym(6), C2)", "product(alt(5), alt(4))", "product(metacyclic(7,3,7,2), C3)"]
SYMALT = ["sym(2)", "sym(3)", "sym(4)", "sym(5)", "sym(6)", "alt(3)", "alt(4)", "alt(5)", "alt(6)"]
PERMS = ["perm(5; (1 2 3 4 5), (2 5)(3 4))", "perm(7; (1 2 3 4 5 6 7), (2 3 5)(4 7 6))",
         "perm(4; (1 2)(3 4), (1 3)(2 4))"]

CORPUS = ABELIAN + DIHEDRAL + QUATERNION + METACYCLIC + EXTENSIONS + PRODUCTS + SYMALT + PERMS


@functools.lru_cache(maxsize=None)
def group(text):
    return engine.realize(parse_spec(text))


@functools.lru_cache(maxsize=None)
def report(text):
    return classify(group(text), spec_text=text)


@pytest.fixture(scope="session")
def corpus_reports():
    return {s: report(s) for s in CORPUS}


# --- brute-force oracles ------------------------------------------------------------

def naive_classes(g):
    """Conjugacy classes by conjugating every element by every element."""
    seen = set()
    out = []
    for x in range(g.order):
        if x in seen:
            continue
        cls = {g.mul(g.mul(g.inv(y), x), y) for y in range(g.order)}
        seen |= cls
        out.append(frozenset(cls))
    return out


def naive_order(g, x):
    k, y = 1, x
    while y != g.identity:
        y = g.mul(y, x)
        k += 1
    return k


def naive_cut(g):
    """x^j conjugate to x or x^-1 for all x and all j coprime to |x|."""
    cls = naive_classes(g)
    where = {x: i for i, c in enumerate(cls) for x in c}
    for x in range(g.order):
        o = naive_order(g, x)
        ok = {where[x], where[g.inv(x)]}
        if any(where[g.power(x, j)] not in ok for j in range(1, o) if math.gcd(j, o) == 1):
            return False
    return True


def abelian_invariant_lists(max_order):
    """All invariant-factor lists d1 | d2 | ... with product <= max_order (d1 > 1)."""
    out = [(1,)]

    def extend(prefix, prod):
        last = prefix[-1] if prefix else 1
        for d in range(2 if not prefix else last, max_order // prod + 1):
            if prefix and d % last:
                continue
            new = prefix + (d,)
            out.append(new)
            extend(new, prod * d)

    extend((), 1)
    return out


def brute_perm_classes(n, even_only):
    """Classes of Sym(n)/Alt(n) by brute force: list of (size, order, frozenset)."""
    perms = list(itertools.permutations(range(n)))
    if even_only:
        perms = [p for p in perms if _parity(p) == 0]
    pset = set(perms)
    seen = set()
    out = []
    for x in perms:
        if x in seen:
            continue
        cls = set()
        for y in perms:
            yinv = [0] * n
            for i, v in enumerate(y):
                yinv[v] = i
            cls.add(tuple(y[x[yinv[i]]] for i in range(n)))
        assert cls <= pset
        seen |= cls
        out.append(frozenset(cls))
    return out


def _parity(p):
    n = len(p)
    seen = [False] * n
    par = 0
    for i in range(n):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            par ^= (length - 1) & 1
    return par


def compose_power(p, j):
    n = len(p)
    out = tuple(range(n))
    for _ in range(j):
        out = tuple(p[out[i]] for i in range(n))
    return out


def rng():
    return np.random.default_rng(7)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in mod.TITLES.items():
        verdict = {True: "PASS", False: "FAIL", None: "NOT RUN"}[mod.RESULTS.get(n)]
        terminalreporter.write_line(f"criterion {n:2d}: {verdict}  {title}")
