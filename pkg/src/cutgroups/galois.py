"""Galois action on conjugacy classes and identification of fixed fields.

A class table here is anything exposing ``num_classes``, ``orders`` and
``power_class(k, j)``; both enumerated and virtual tables qualify.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import NoQuadraticFound


def units(m):
    return tuple(j for j in range(m) if math.gcd(j, m) == 1) if m > 1 else (0,)


def euler_phi(m):
    return len(units(m)) if m > 1 else 1


@dataclass(frozen=True)
class UnitSubgroup:
    """A subgroup of (Z/mZ)^x, stored as its sorted residues."""
    modulus: int
    residues: tuple

    def __post_init__(self):
        if self.modulus == 1:
            object.__setattr__(self, "residues", (0,))

    def __contains__(self, j):
        return (j % self.modulus) in self._set

    @property
    def _set(self):
        return frozenset(self.residues)

    def __len__(self):
        return len(self.residues)

    @property
    def index(self):
        return euler_phi(self.modulus) // len(self.residues)

    def with_minus_one(self):
        m = self.modulus
        res = set(self.residues) | {(-r) % m for r in self.residues}
        return UnitSubgroup(m, tuple(sorted(res)))

    def is_closed(self):
        m = self.modulus
        s = self._set
        return all((a * b) % m in s for a in s for b in s)

    def __str__(self):
        return "{" + ",".join(map(str, self.residues)) + "} mod " + str(self.modulus)


def full_units(m):
    return UnitSubgroup(m, units(m))


def intersect(a, b):
    assert a.modulus == b.modulus
    return UnitSubgroup(a.modulus, tuple(sorted(set(a.residues) & set(b.residues))))


# --- fields -----------------------------------------------------------------

@dataclass(frozen=True)
class Rationals:
    degree = 1

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class Quadratic:
    d: int
    degree = 2

    def __str__(self):
        return f"Q(sqrt({self.d}))"


@dataclass(frozen=True)
class HigherDegree:
    n: int

    @property
    def degree(self):
        return self.n

    def __str__(self):
        return f"degree {self.n}"


FieldId = Rationals | Quadratic | HigherDegree


def kronecker_symbol(d, n):
    """Kronecker symbol (d|n), extending the Jacobi symbol to all integers n."""
    if n == 0:
        return 1 if abs(d) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if d < 0:
            result = -result
    # factor out powers of two from n
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if d % 2 == 0:
            return 0
        if v % 2 and d % 8 in (3, 5):
            result = -result
    # now n is odd and positive: Jacobi symbol
    a = d % n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_squarefree(d):
    d = abs(d)
    f = 2
    while f * f <= d:
        if d % (f * f) == 0:
            return False
        f += 1
    return True


def discriminant(d):
    return d if d % 4 == 1 else 4 * d


@lru_cache(maxsize=None)
def quadratic_candidates(m):
    """Squarefree d != 0, 1 whose field discriminant divides m, i.e. Q(sqrt d) in Q(zeta_m)."""
    out = []
    for a in range(1, m + 1):
        for d in (a, -a):
            if d == 1 or not is_squarefree(d):
                continue
            if m % abs(discriminant(d)) == 0:
                out.append(d)
    return tuple(out)


def fixed_field_id(h):
    """Fixed field of h inside Q(zeta_m)."""
    idx = h.index
    if idx == 1:
        return Rationals()
    if idx > 2:
        return HigherDegree(idx)
    m = h.modulus
    hits = [d for d in quadratic_candidates(m)
            if all(kronecker_symbol(discriminant(d), j) == 1 for j in h.residues)]
    if len(hits) != 1:
        raise NoQuadraticFound(f"index-2 subgroup {h} matched {hits}")
    return Quadratic(hits[0])


# --- class partitions -------------------------------------------------------

def stabilizer_units(t, k):
    o = t.orders[k]
    return UnitSubgroup(o, tuple(j for j in units(o) if t.power_class(k, j) == k))


def element_field(t, k):
    return fixed_field_id(stabilizer_units(t, k))


def _blocks(n, merge_pairs):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in merge_pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(b) for b in sorted(groups.values()))


def q_class_partition(t, use_group_order=False):
    """Q-classes: merge each class with its coprime powers.

    By default j runs over units mod |rep_k|.  With ``use_group_order`` it runs
    over j coprime to |G|, taken mod the exponent (which has the same prime
    divisors as |G|); the two give the same partition.
    """
    pairs = []
    if use_group_order:
        js = units(t.exponent)
        for k in range(t.num_classes):
            pairs += [(k, t.power_class(k, j)) for j in js]
    else:
        for k in range(t.num_classes):
            pairs += [(k, t.power_class(k, j)) for j in units(t.orders[k])]
    return _blocks(t.num_classes, pairs)


def r_class_partition(t):
    return _blocks(t.num_classes, [(k, t.inverse_class(k)) for k in range(t.num_classes)])
