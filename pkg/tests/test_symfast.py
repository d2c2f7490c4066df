from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_perm_classes, compose_power, group
from cutgroups import symfast
from cutgroups.errors import JNotCoprime, NOutOfRange
from cutgroups.symfast import MINUS, PLUS, AltClassLabel


def _rep(label, n):
    img = list(range(n))
    for cyc in symfast.canonical_cycles(label.parts):
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
    if label.tag == MINUS:
        # conjugate by the transposition (0 1)
        sw = lambda i: {0: 1, 1: 0}.get(i, i)  # noqa: E731
        img = [sw(img[sw(i)]) for i in range(n)]
    return tuple(img)


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("alternating", [True, False])
def test_virtual_table_matches_brute_force(n, alternating):
    vt = symfast.VirtualClassTable(n, alternating)
    brute = brute_perm_classes(n, alternating)
    where = {x: i for i, c in enumerate(brute) for x in c}
    assert vt.num_classes == len(brute)
    assert sorted(vt.sizes) == sorted(len(c) for c in brute)
    seen = set()
    for k, label in enumerate(vt.labels):
        x = _rep(label, n)
        cls = where[x]
        seen.add(cls)
        assert len(brute[cls]) == vt.sizes[k]
        o = vt.orders[k]
        assert compose_power(x, o) == tuple(range(n))
        for j in range(o):
            expect = where[compose_power(x, j)]
            assert where[_rep(vt.labels[vt.power_class(k, j)], n)] == expect
    assert len(seen) == len(brute)


@pytest.mark.parametrize("n", [7, 8])
def test_virtual_alt_matches_enumerated(n):
    g = group(f"alt({n})")
    t = g.classes
    vt = symfast.alt_class_table(n)
    assert sorted(vt.sizes) == sorted(t.sizes)
    rows = {tuple(r): i for i, r in enumerate(g.elements.tolist())}
    for k, label in enumerate(vt.labels):
        x = _rep(label, n)
        cls = int(t.class_of[rows[x]])
        assert t.sizes[cls] == vt.sizes[k]
        for j in range(vt.orders[k]):
            target = _rep(vt.labels[vt.power_class(k, j)], n)
            assert t.power_class(cls, j) == int(t.class_of[rows[target]])


def test_split_rule():
    assert symfast.an_class_splits((5, 3, 1))
    assert not symfast.an_class_splits((3, 3))
    assert not symfast.an_class_splits((2, 2))
    assert not symfast.an_class_splits((1,))
    assert symfast.an_class_splits((3,))


def test_seven_cycle_in_alt7_is_inverse_semirational():
    vt = symfast.alt_class_table(7)
    k = vt.index(AltClassLabel((7,), PLUS))
    fixed = [j for j in range(1, 7) if vt.power_class(k, j) == k]
    assert fixed == [1, 2, 4]
    assert vt.inverse_class(k) != k


def test_non_coprime_power_rejected():
    with pytest.raises(JNotCoprime):
        symfast.alt_power_class(AltClassLabel((5,), PLUS), 5)


def test_range():
    with pytest.raises(NOutOfRange):
        symfast.alt_class_table(23)
    with pytest.raises(NOutOfRange):
        symfast.sym_class_table(0)


def test_class_sizes_sum_to_order():
    for n in range(1, symfast.MAX_N + 1):
        for alt in (True, False):
            vt = symfast.VirtualClassTable(n, alt)
            assert sum(vt.sizes) == vt.group_order


def test_partition_counts():
    # p(n) for n = 1..10
    assert [sum(1 for _ in symfast.partitions(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([3, 5, 7, 9, 11, 13, 15, 21]), st.integers(1, 200))
def test_conjugator_parity_is_jacobi_symbol(length, j):
    # multiplication by j on Z/L has sign (j|L) for odd L
    if math.gcd(j, length) != 1:
        return
    odd = symfast.conjugator_is_odd((length,), j % length)
    assert odd == (symfast.jacobi(j, length) == -1)
