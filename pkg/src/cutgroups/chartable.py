"""Exact character tables by the Dixon-Schneider method.

Eigenvectors of the class matrices are computed over GF(p) for a prime
p = 1 mod e (the exponent), then every value is lifted to Q(zeta_e) through
the eigenvalue multiplicities of the representing matrix on <x>.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
import numpy as np

from . import kernels
from .cyclotomic import Cyclotomic, power_table
from .errors import NoSuitablePrime, OrderCapExceeded, SplitFailure
from .galois import UnitSubgroup, fixed_field_id, intersect, units, element_field

PRIME_SEARCH_LIMIT = 1 << 20
_SEED = 20240917


# --- modular helpers ----------------------------------------------------------

def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def dixon_prime(order, exponent, override=None):
    """Least p = 1 mod exponent with p > 2*ceil(sqrt(order)), or a checked override."""
    bound = 2 * math.isqrt(order - 1) + 2 if order > 1 else 2
    if override is not None:
        if not is_prime(override) or override % exponent != 1 % exponent or override <= bound:
            raise NoSuitablePrime(f"{override} is not a prime = 1 mod {exponent} above {bound}")
        return override
    p = (bound // exponent + 1) * exponent + 1
    while p <= PRIME_SEARCH_LIMIT:
        if is_prime(p):
            return p
        p += exponent
    raise NoSuitablePrime(f"no prime = 1 mod {exponent} below {PRIME_SEARCH_LIMIT}")


def next_dixon_prime(order, exponent, after):
    p = after + exponent
    while p <= PRIME_SEARCH_LIMIT:
        if is_prime(p):
            return p
        p += exponent
    raise NoSuitablePrime("search bound exceeded")


def primitive_root(p):
    factors = [q for q in range(2, p) if (p - 1) % q == 0 and is_prime(q)]
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    return 1


def _nullspace_rows(a, p):
    """Basis (as rows) of {y : y a = 0} over GF(p)."""
    m, piv = kernels.rref_mod_p(np.ascontiguousarray(a.T), p)
    n = a.shape[0]
    free = [c for c in range(n) if c not in piv]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for r, f in enumerate(free):
        basis[r, f] = 1
        for i, c in enumerate(piv):
            basis[r, c] = (-m[i, f]) % p
    return basis


def _exact_matmul(a, b, bound):
    """Integer a @ b; float64 (BLAS) when every partial sum stays below 2^53 in size."""
    if bound < 1 << 53:
        return np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
    return a @ b


def _rref_rows(b, p):
    m, piv = kernels.rref_mod_p(b, p)
    return np.ascontiguousarray(m[: len(piv)]), list(piv)


# --- class matrices -----------------------------------------------------------

class ClassConstants:
    """Lazily computed class multiplication coefficients a[i][j][k]."""

    def __init__(self, g, t):
        self.g = g
        self.t = t
        self._cache = {}
        self._members = None

    def members(self, i):
        if self._members is None:
            self._members = self.t.class_members()
        return self._members[i]

    def matrix(self, i):
        """M with M[j, k] = #{(u, v) in C_i x C_j : u v = rep_k}."""
        if i not in self._cache:
            g, t = self.g, self.t
            reps = np.asarray(t.reps, dtype=np.int64)
            mem = self.members(i)
            table = g.table
            if table is not None:
                m = kernels.class_counts(table, np.asarray(g.inverse), t.class_of, mem, reps, t.num_classes)
            else:
                m = np.zeros((t.num_classes, len(reps)), dtype=np.int64)
                inv_mem = g.inverse[mem]
                for k, z in enumerate(reps):
                    prod = g.mul_idx(inv_mem, z)
                    m[:, k] = np.bincount(t.class_of[prod], minlength=t.num_classes)
            self._cache[i] = m
        return self._cache[i]

    def tensor(self):
        return np.stack([self.matrix(i) for i in range(self.t.num_classes)])


def class_constants(g, t):
    return ClassConstants(g, t).tensor()


# --- eigenspace splitting -----------------------------------------------------

def _krylov(r, p, rng):
    """Minimal polynomial of a random vector under y -> y r, with its Krylov rows."""
    d = r.shape[0]
    v = rng.integers(1, p, size=d, dtype=np.int64)
    krylov = [v]
    for _ in range(d):
        krylov.append((krylov[-1] @ r) % p)
    k = np.stack(krylov)
    m, piv = kernels.rref_mod_p(np.ascontiguousarray(k.T), p)
    deg = next(c for c in range(d + 1) if c not in piv)
    coef = [(-int(m[i, deg])) % p for i in range(deg)] + [1]  # monic, lowest first
    xs = np.arange(p, dtype=np.int64)
    val = np.zeros(p, dtype=np.int64)
    for c in reversed(coef):
        val = (val * xs + c) % p
    return coef, k[:deg], [int(x) for x in np.nonzero(val == 0)[0]]


def _cyclic_eigenvectors(coef, krylov, roots, p):
    """Rows v q_lam(r) for q_lam = f / (x - lam); one eigenvector per root."""
    d = len(coef) - 1
    lam = np.array(roots, dtype=np.int64)
    q = np.zeros((len(roots), d), dtype=np.int64)
    q[:, d - 1] = 1
    for i in range(d - 1, 0, -1):
        q[:, i - 1] = (coef[i] + lam * q[:, i]) % p
    return (q @ krylov) % p


def _split(basis, a, p, rng, attempts=24, probes=4):
    """Split the row space ``basis`` (RREF) into eigenspaces of y -> y a.

    Each Krylov vector only sees the eigenvalues its own minimal polynomial
    carries, so roots are pooled across vectors.  When the pooled roots
    number d the eigenspaces are lines and the Krylov eigenvectors are the
    answer; otherwise eigenspaces come from nullspaces.  With p barely above
    the exponent a single vector misses an eigenvalue quite often.
    """
    rows, piv = basis
    restricted = ((rows @ a) % p)[:, piv]
    d = rows.shape[0]
    lines = {}
    stale = 0
    while stale < probes:
        coef, krylov, roots = _krylov(restricted, p, rng)
        fresh = [lam for lam in roots if lam not in lines]
        if not fresh:
            stale += 1
            continue
        for lam, y in zip(roots, _cyclic_eigenvectors(coef, krylov, roots, p)):
            lines.setdefault(lam, y)
        if len(lines) == d:
            return [_rref_rows((lines[lam][None, :] @ rows) % p, p) for lam in sorted(lines)]
    pieces = {}
    total = 0
    for _ in range(attempts):
        for lam in sorted(lines):
            if lam in pieces:
                continue
            shifted = (restricted - lam * np.eye(d, dtype=np.int64)) % p
            y = _nullspace_rows(shifted, p)
            if len(y):
                pieces[lam] = _rref_rows((y @ rows) % p, p)
                total += len(y)
        if total == d:
            return [pieces[lam] for lam in sorted(pieces)]
        lines.update((lam, None) for lam in _krylov(restricted, p, rng)[2])
    raise SplitFailure(f"eigenspaces of dimension {d} did not decompose")


# --- the table ----------------------------------------------------------------

@dataclass
class CharacterTable:
    classes: object
    exponent: int
    prime: int
    degrees: tuple
    multiplicities: tuple          # [chi][k] -> tuple of m_l, l mod |rep_k|
    values: tuple                  # [chi][k] -> Cyclotomic over Q(zeta_e)

    @property
    def num_characters(self):
        return len(self.degrees)

    def value_key(self, chi, k):
        return self.values[chi][k].coeffs

    def as_group_ring(self, chi, k):
        """chi(rep_k) as an integer vector in Z[Z/e]."""
        e = self.exponent
        ms = self.multiplicities[chi][k]
        step = e // len(ms)
        vec = np.zeros(e, dtype=np.int64)
        for l, m in enumerate(ms):
            vec[(l * step) % e] += m
        return vec


def _lift(chi_mod_p, degrees, t, p, e, zeta_e):
    """Multiplicities m_l with chi(x) = sum m_l zeta_o^l, for all characters at once.

    ``chi_mod_p`` is (characters x classes); returns one (characters x o)
    array per class.
    """
    deg = np.asarray(degrees, dtype=np.int64)
    dfts = {}
    out = []
    for k in range(t.num_classes):
        o = t.orders[k]
        if o not in dfts:
            zo = pow(zeta_e, e // o, p)
            zinv = np.array([pow(zo, (o - i) % o, p) for i in range(o)], dtype=np.int64)
            idx = np.arange(o)
            dfts[o] = (zinv[np.outer(idx, idx) % o].T, pow(o, p - 2, p))
        dft_t, inv_o = dfts[o]
        x = chi_mod_p[:, [t.power_class(k, s) for s in range(o)]]      # chi(x^s)
        # entries are below p, so each dot product stays below o * p^2
        m = _exact_matmul(x, dft_t, o * p * p) % p * inv_o % p
        if (m > deg[:, None]).any() or not np.array_equal(m.sum(axis=1), deg):
            raise SplitFailure(f"eigenvalue multiplicities inconsistent at class {k}")
        out.append(m)
    return out


def dixon_table(g, t=None, prime=None):
    """Character table of ``g`` with exact values in Q(zeta_exponent)."""
    if t is None:
        t = g.classes
    order = g.order
    if order > g.cap:
        raise OrderCapExceeded(order, g.cap, what="character table")
    e = t.exponent
    p = dixon_prime(order, e, prime)
    c = t.num_classes
    constants = ClassConstants(g, t)
    rng = np.random.default_rng(_SEED)

    spaces = [(np.eye(c, dtype=np.int64), list(range(c)))]
    # high-order elements separate the most characters per matrix
    for i in sorted(range(c), key=lambda k: (t.sizes[k], -t.orders[k], k)):
        if all(s[0].shape[0] == 1 for s in spaces):
            break
        if t.sizes[i] == 1 and i == 0:
            continue
        a = np.ascontiguousarray(constants.matrix(i).T % p)
        nxt = []
        for s in spaces:
            nxt.extend([s] if s[0].shape[0] == 1 else _split(s, a, p, rng))
        spaces = nxt
    if any(s[0].shape[0] != 1 for s in spaces):
        raise SplitFailure("class matrices did not separate all characters")

    sizes = np.array(t.sizes, dtype=np.int64)
    inv_sizes = np.array([pow(int(s), p - 2, p) for s in sizes], dtype=np.int64)
    inv_cls = np.array([t.inverse_class(k) for k in range(c)], dtype=np.int64)
    zeta_e = pow(primitive_root(p), (p - 1) // e, p)
    sq_bound = math.isqrt(order)

    degrees = []
    chi_rows = []
    for rows_b, _ in spaces:
        v = rows_b[0] % p
        v = v * pow(int(v[0]), p - 2, p) % p    # omega(identity) = 1
        s = int((v * v[inv_cls] % p * inv_sizes % p).sum() % p)
        target = order % p * pow(s, p - 2, p) % p
        d = next((x for x in range(1, sq_bound + 1) if x * x % p == target), None)
        if d is None:
            raise SplitFailure("no admissible degree for an eigenvector")
        degrees.append(d)
        chi_rows.append(v * d % p * inv_sizes % p)
    per_class = _lift(np.array(chi_rows, dtype=np.int64), degrees, t, p, e, zeta_e)

    table = power_table(e)
    n = len(degrees)
    mults = [[None] * c for _ in range(n)]
    vals = [[None] * c for _ in range(n)]
    for k, m in enumerate(per_class):
        o = m.shape[1]
        vec = np.zeros((n, e), dtype=np.int64)
        vec[:, np.arange(o) * (e // o)] = m
        bound = o * int(m.max(initial=0)) * int(np.abs(table).max(initial=0))
        coords = _exact_matmul(vec, table, bound).tolist()
        ms = m.tolist()
        for chi in range(n):
            mults[chi][k] = tuple(ms[chi])
            vals[chi][k] = Cyclotomic(e, coords[chi])
    entries = [(degrees[chi], tuple(v.coeffs for v in vals[chi]), tuple(mults[chi]), tuple(vals[chi]))
               for chi in range(n)]
    entries.sort(key=lambda x: (x[0], x[1]))
    return CharacterTable(
        classes=t,
        exponent=e,
        prime=p,
        degrees=tuple(x[0] for x in entries),
        multiplicities=tuple(x[2] for x in entries),
        values=tuple(x[3] for x in entries),
    )


# --- fields and counts ----------------------------------------------------------

def char_stabilizer(ct, chi):
    t = ct.classes
    e = ct.exponent
    keys = [ct.value_key(chi, k) for k in range(t.num_classes)]
    good = []
    for j in units(e):
        if all(keys[t.power_class(k, j)] == keys[k] for k in range(t.num_classes)):
            good.append(j)
    return UnitSubgroup(e, tuple(good))


def char_field(ct, chi):
    return fixed_field_id(char_stabilizer(ct, chi))


def group_field(ct):
    e = ct.exponent
    h = UnitSubgroup(e, units(e))
    for chi in range(ct.num_characters):
        h = intersect(h, char_stabilizer(ct, chi))
    return h, h.index


@dataclass(frozen=True)
class FieldCounts:
    real_chars: int
    rational_chars: int
    quadratic_chars: int
    real_classes: int
    rational_classes: int
    quadratic_classes: int


def field_counts(ct, t=None):
    t = t or ct.classes
    stabs = [char_stabilizer(ct, chi) for chi in range(ct.num_characters)]
    char_deg = [s.index for s in stabs]
    cls_deg = [element_field(t, k).degree for k in range(t.num_classes)]
    return FieldCounts(
        real_chars=sum(1 for s in stabs if -1 in s),
        rational_chars=char_deg.count(1),
        quadratic_chars=char_deg.count(2),
        real_classes=sum(1 for k in range(t.num_classes) if t.inverse_class(k) == k),
        rational_classes=cls_deg.count(1),
        quadratic_classes=cls_deg.count(2),
    )


# --- exact verification -----------------------------------------------------------

def _multiplicity_arrays(ct):
    """Per class k an integer array (chars x |rep_k|) of multiplicities."""
    t = ct.classes
    return [np.array([ct.multiplicities[chi][k] for chi in range(ct.num_characters)], dtype=np.int64)
            for k in range(t.num_classes)]


def row_orthogonality_matrix(ct):
    """Gram matrix sum_k |C_k| chi(k) conj(psi(k)) reduced exactly to the power basis.

    Computed in Z[Z/e]: for each class the product chi(x) conj(psi(x)) is a
    cyclic correlation of the two multiplicity vectors.
    """
    t = ct.classes
    e = ct.exponent
    n = ct.num_characters
    acc = np.zeros((n, n, e), dtype=np.int64)
    for k, arr in enumerate(_multiplicity_arrays(ct)):
        o = arr.shape[1]
        step = e // o
        w = t.sizes[k]
        for s in range(o):
            # chi_l * psi_{l-s}: product lands on zeta_o^{s}
            prod = arr @ np.roll(arr, s, axis=1).T
            acc[:, :, (s * step) % e] += w * prod
    return np.einsum("abk,kc->abc", acc, power_table(e))


def check_orthogonality(ct, order):
    """Row orthogonality and sum of squared degrees, both exact."""
    n = ct.num_characters
    gram = row_orthogonality_matrix(ct)
    expected = np.zeros_like(gram)
    expected[np.arange(n), np.arange(n), 0] = order
    rows_ok = np.array_equal(gram, expected)
    degrees_ok = sum(d * d for d in ct.degrees) == order
    return rows_ok and degrees_ok and n == ct.classes.num_classes
