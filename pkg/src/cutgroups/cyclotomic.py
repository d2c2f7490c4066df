"""Exact arithmetic in cyclotomic fields Q(zeta_e) over the power basis."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np


def _poly_divmod_exact(num, den):
    """Quotient of integer polynomials (lowest degree first), den monic, exact."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(den) - 1]
        out[i] = q
        if q:
            for j, c in enumerate(den):
                num[i + j] -= q * c
    assert not any(num[: len(den) - 1]), "division was not exact"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e):
    """Coefficients of Phi_e, lowest degree first."""
    poly = [-1] + [0] * (e - 1) + [1]  # x^e - 1
    for d in range(1, e):
        if e % d == 0:
            poly = _poly_divmod_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def power_table(e):
    """Row k holds the power-basis coordinates of zeta_e^k, k = 0..e-1."""
    phi = cyclotomic_polynomial(e)
    deg = len(phi) - 1
    rows = np.zeros((e, deg), dtype=object)
    cur = [0] * deg
    cur[0] = 1
    for k in range(e):
        rows[k] = cur
        # multiply by x and reduce with x^deg = -sum phi_i x^i
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * p for c, p in zip(cur, phi[:deg])]
    table = np.array(rows.tolist(), dtype=np.int64)
    table.flags.writeable = False
    return table


class Cyclotomic:
    """An element of Q(zeta_e), stored as power-basis coordinates."""

    __slots__ = ("e", "coeffs")

    def __init__(self, e, coeffs):
        self.e = e
        self.coeffs = tuple(coeffs)

    @classmethod
    def rational(cls, e, q):
        deg = len(cyclotomic_polynomial(e)) - 1
        return cls(e, (q,) + (0,) * (deg - 1))

    @classmethod
    def from_group_ring(cls, e, vec):
        """sum_k vec[k] zeta_e^k for an integer vector of length e."""
        vec = np.asarray(vec, dtype=np.int64)
        return cls(e, (vec @ power_table(e)).tolist())

    @classmethod
    def root_of_unity(cls, e, k):
        return cls(e, power_table(e)[k % e].tolist())

    @property
    def degree_bound(self):
        return len(self.coeffs)

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.e, other)
        if other.e != self.e:
            raise ValueError("conductors differ")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Cyclotomic(self.e, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.e, (-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        table = power_table(self.e)
        n = len(self.coeffs)
        prod = [0] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        out = list(prod[:n])
        for k in range(n, len(prod)):
            if prod[k]:
                row = table[k % self.e]
                for i in range(n):
                    if row[i]:
                        out[i] += prod[k] * int(row[i])
        return Cyclotomic(self.e, out)

    __rmul__ = __mul__

    def galois(self, j):
        """Image under zeta -> zeta^j (j coprime to e)."""
        table = power_table(self.e)
        out = [0] * len(self.coeffs)
        for i, a in enumerate(self.coeffs):
            if a:
                row = table[(i * j) % self.e]
                for t in range(len(out)):
                    if row[t]:
                        out[t] += a * int(row[t])
        return Cyclotomic(self.e, out)

    def conjugate(self):
        return self.galois(-1)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return isinstance(other, Cyclotomic) and self.e == other.e and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.e, self.coeffs))

    def __repr__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = [f"{c}*z^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return f"({' + '.join(terms)})_{self.e}"
