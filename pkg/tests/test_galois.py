from __future__ import annotations

import cmath
import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutgroups import galois
from cutgroups.cyclotomic import Cyclotomic, cyclotomic_polynomial, power_table
from cutgroups.errors import NoQuadraticFound
from cutgroups.galois import Quadratic, Rationals, UnitSubgroup, units


def _legendre(a, p):
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 19, 23])
def test_kronecker_matches_euler_criterion(p):
    for a in range(-30, 31):
        assert galois.kronecker_symbol(a, p) == _legendre(a, p)


def test_kronecker_at_two():
    # (a|2) depends on a mod 8
    assert [galois.kronecker_symbol(a, 2) for a in (1, 3, 5, 7, 2)] == [1, -1, -1, 1, 0]
    assert galois.kronecker_symbol(-3, 2) == -1


@settings(max_examples=300, deadline=None)
@given(st.integers(-200, 200), st.integers(1, 300), st.integers(1, 300))
def test_kronecker_multiplicative_in_n(a, m, n):
    assert galois.kronecker_symbol(a, m * n) == galois.kronecker_symbol(a, m) * galois.kronecker_symbol(a, n)


def _subgroups_of_index(m, k):
    """All subgroups of (Z/m)^x of index k, by closing generator pairs."""
    us = units(m)
    phi = len(us)
    found = set()
    for a, b in itertools.combinations_with_replacement(us, 2):
        h = {1 % m}
        frontier = [1 % m]
        while frontier:
            x = frontier.pop()
            for g in (a, b):
                y = x * g % m
                if y not in h:
                    h.add(y)
                    frontier.append(y)
        if phi // len(h) == k:
            found.add(tuple(sorted(h)))
    return [UnitSubgroup(m, h) for h in sorted(found)]


def _squarefree_part(n):
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    f = 2
    while f * f <= n:
        while n % (f * f) == 0:
            n //= f * f
        if n % f == 0:
            out *= f
            n //= f
        f += 1
    return sign * out * n


def _trace_oracle_d(h):
    """d with Q(sqrt d) fixed by h, from a generic trace and its conjugate."""
    m = h.modulus
    z = cmath.exp(2j * cmath.pi / m)
    other = next(u for u in units(m) if u not in h)
    rng = np.random.default_rng(m)
    for _ in range(20):
        # a random element of Z[zeta]; its relative trace generates the fixed field
        coeffs = rng.integers(-3, 4, size=m)
        alpha = lambda j: sum(int(c) * z ** (k * j) for k, c in enumerate(coeffs))  # noqa: E731
        theta = sum(alpha(j) for j in h.residues)
        theta2 = sum(alpha(j * other) for j in h.residues)
        disc = (theta - theta2) ** 2
        assert abs(disc.imag) < 1e-6
        value = round(disc.real)
        if value:
            break
    assert value != 0
    return _squarefree_part(value)


@pytest.mark.parametrize("m", [3, 4, 5, 7, 8, 12, 24, 15, 20, 21])
def test_fixed_field_matches_trace_oracle(m):
    subs = _subgroups_of_index(m, 2)
    assert subs
    for h in subs:
        assert galois.fixed_field_id(h) == Quadratic(_trace_oracle_d(h))


def test_fixed_field_examples():
    assert galois.fixed_field_id(UnitSubgroup(5, (1, 4))) == Quadratic(5)
    assert galois.fixed_field_id(UnitSubgroup(7, (1, 2, 4))) == Quadratic(-7)
    assert galois.fixed_field_id(UnitSubgroup(8, (1, 7))) == Quadratic(2)
    assert galois.fixed_field_id(UnitSubgroup(8, (1, 3))) == Quadratic(-2)
    assert galois.fixed_field_id(UnitSubgroup(4, (1,))) == Quadratic(-1)
    assert galois.fixed_field_id(UnitSubgroup(3, (1,))) == Quadratic(-3)
    assert galois.fixed_field_id(UnitSubgroup(1, (0,))) == Rationals()
    assert galois.fixed_field_id(UnitSubgroup(12, (1,))).degree == 4


def test_not_a_quadratic_subgroup_raises():
    # not a subgroup, so no quadratic character matches it
    with pytest.raises(NoQuadraticFound):
        galois.fixed_field_id(UnitSubgroup(8, (3, 5)))


def test_unit_subgroup_helpers():
    h = UnitSubgroup(10, (1, 9))
    assert h.index == 2 and h.is_closed() and 9 in h and -1 in h
    assert UnitSubgroup(7, (1, 2, 4)).with_minus_one().residues == (1, 2, 3, 4, 5, 6)
    assert galois.euler_phi(1) == 1 and galois.euler_phi(12) == 4


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 40))
def test_cyclotomic_polynomial_degree_and_roots(e):
    poly = cyclotomic_polynomial(e)
    assert len(poly) - 1 == galois.euler_phi(e)
    z = cmath.exp(2j * cmath.pi / e)
    assert abs(sum(c * z ** i for i, c in enumerate(poly))) < 1e-6


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 30), st.lists(st.integers(-5, 5), min_size=30, max_size=30),
       st.lists(st.integers(-5, 5), min_size=30, max_size=30))
def test_cyclotomic_ring_agrees_with_complex(e, u, v):
    a = Cyclotomic.from_group_ring(e, u[:e])
    b = Cyclotomic.from_group_ring(e, v[:e])
    z = cmath.exp(2j * cmath.pi / e)
    ev = lambda c: sum(x * z ** i for i, x in enumerate(c.coeffs))  # noqa: E731
    assert abs(ev(a * b) - ev(a) * ev(b)) < 1e-6
    assert abs(ev(a + b) - ev(a) - ev(b)) < 1e-6
    assert abs(ev(a.conjugate()) - ev(a).conjugate()) < 1e-6
    for j in units(e):
        assert a.galois(j) * b.galois(j) == (a * b).galois(j)


def test_power_table_row_zero():
    t = power_table(12)
    assert t.shape == (12, 4)
    assert list(t[0]) == [1, 0, 0, 0]
    assert Cyclotomic.root_of_unity(4, 2) == -1
