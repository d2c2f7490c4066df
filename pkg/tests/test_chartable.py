from __future__ import annotations

import cmath
import math

import pytest

from conftest import group
from cutgroups import chartable
from cutgroups.chartable import dixon_prime, dixon_table, next_dixon_prime
from cutgroups.errors import NoSuitablePrime

SMALL = ["C1", "C6", "D8", "D10", "Q8", "sym(3)", "sym(4)", "alt(4)", "alt(5)", "G1", "G2",
         "metacyclic(7,3,7,2)", "metacyclic(8,4,4,3)", "product(Q8, C3)", "abc(5; [[2]]; 4)"]


def _complex(value):
    z = cmath.exp(2j * cmath.pi / value.e)
    return sum(c * z ** i for i, c in enumerate(value.coeffs))


@pytest.mark.parametrize("text,degrees", [
    ("sym(3)", [1, 1, 2]),
    ("sym(4)", [1, 1, 2, 3, 3]),
    ("alt(5)", [1, 3, 3, 4, 5]),
    ("Q8", [1, 1, 1, 1, 2]),
    ("D10", [1, 1, 2, 2]),
    ("sym(5)", [1, 1, 4, 4, 5, 5, 6]),
])
def test_degrees(text, degrees):
    assert list(dixon_table(group(text)).degrees) == degrees


@pytest.mark.parametrize("text", SMALL)
def test_orthogonality_exact(text):
    g = group(text)
    assert chartable.check_orthogonality(dixon_table(g), g.order)


@pytest.mark.parametrize("text", ["C5", "C12", "abelian(2,6)", "C8"])
def test_abelian_characters_against_direct_formula(text):
    g = group(text)
    ct = dixon_table(g)
    t = g.classes
    inv = g.spec.invariants
    e = ct.exponent
    # chi_a(x) = prod zeta_{d_i}^{a_i x_i}, written as exponents of zeta_e
    got = {tuple(v.coeffs for v in row) for row in ct.values}
    expected = set()
    from cutgroups.cyclotomic import Cyclotomic
    for a in g.elements.tolist():
        row = []
        for k in range(t.num_classes):
            x = g.elements[t.reps[k]].tolist()
            s = sum(e // d * ai * xi for d, ai, xi in zip(inv, a, x)) % e
            row.append(Cyclotomic.root_of_unity(e, s).coeffs)
        expected.add(tuple(row))
    assert got == expected


def _brute_class_constants(g):
    t = g.classes
    members = [set(t.members(k).tolist()) for k in range(t.num_classes)]
    c = t.num_classes
    a = [[[0] * c for _ in range(c)] for _ in range(c)]
    for i in range(c):
        for j in range(c):
            for k in range(c):
                z = t.reps[k]
                a[i][j][k] = sum(1 for x in members[i] if g.mul(g.inv(x), z) in members[j])
    return a


@pytest.mark.parametrize("text", ["sym(4)", "D10", "G2", "metacyclic(7,3,7,2)"])
def test_central_characters_satisfy_brute_class_algebra(text):
    g = group(text)
    t = g.classes
    ct = dixon_table(g)
    a = _brute_class_constants(g)
    c = t.num_classes
    for chi in range(ct.num_characters):
        vals = [_complex(v) for v in ct.values[chi]]
        d = ct.degrees[chi]
        w = [t.sizes[k] * vals[k] / d for k in range(c)]
        for i in range(c):
            for j in range(c):
                rhs = sum(a[i][j][k] * w[k] for k in range(c))
                assert abs(w[i] * w[j] - rhs) < 1e-6


@pytest.mark.parametrize("text", ["sym(4)", "G1", "D10", "alt(5)", "metacyclic(13,6,13,4)"])
def test_prime_independence(text):
    g = group(text)
    a = dixon_table(g)
    other = next_dixon_prime(g.order, g.classes.exponent, a.prime)
    b = dixon_table(g, prime=other)
    assert a.prime != b.prime
    assert a.degrees == b.degrees and a.values == b.values


def test_dixon_prime_rules():
    p = dixon_prime(60, 30)
    assert p % 30 == 1 and p > 2 * math.isqrt(60) and chartable.is_prime(p)
    with pytest.raises(NoSuitablePrime):
        dixon_prime(2000, 30, override=31)    # below 2*sqrt(2000)
    with pytest.raises(NoSuitablePrime):
        dixon_prime(60, 30, override=91)      # not prime


def test_g1_g2_field_counts():
    c1 = chartable.field_counts(dixon_table(group("G1")))
    c2 = chartable.field_counts(dixon_table(group("G2")))
    assert (c1.rational_chars, c1.rational_classes, c1.quadratic_classes, c1.quadratic_chars) == (10, 8, 6, 0)
    assert (c2.rational_chars, c2.rational_classes, c2.quadratic_classes, c2.quadratic_chars) == (6, 8, 2, 8)


def test_group_field_c12():
    h, degree = chartable.group_field(dixon_table(group("C12")))
    assert degree == 4 and h.residues == (1,)


def test_dixon_prime_override_exponent_one():
    assert chartable.dixon_prime(1, 1, override=7) == 7
