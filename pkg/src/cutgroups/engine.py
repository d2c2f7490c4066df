"""Finite groups realized as indexed element universes.

Every group is enumerated eagerly: its elements are integer rows (a backend's
normal form) sorted lexicographically, and element ``i`` is the i-th row.  The
identity is always index 0 because every backend's identity row is the
lexicographically smallest normal form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Sequence

import numpy as np

from . import kernels
from .errors import InvalidSpec, OrderCapExceeded, PNotDividing

DEFAULT_CAP = 1_000_000
TABLE_CAP = 2600          # largest order for which a full Cayley table is stored
_KEY_LIMIT = 1 << 62


# ---------------------------------------------------------------------------
# specifications
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """Permutation group on points 0..degree-1; generators are image tuples."""
    degree: int
    generators: tuple


@dataclass(frozen=True)
class Metacyclic:
    """<a, b | a^n = 1, b^t = a^l, b a b^-1 = a^r>."""
    n: int
    t: int
    l: int
    r: int


@dataclass(frozen=True)
class AbelianByCyclic:
    """A x| <c>: A has the given invariant factors, c acts by ``action``.

    ``action[i][j]`` is the coefficient of coordinate j in the image of
    coordinate i, taken mod invariants[i]; c has order t.
    """
    invariants: tuple
    action: tuple
    t: int


@dataclass(frozen=True)
class Abelian:
    invariants: tuple


@dataclass(frozen=True)
class DirectProduct:
    factors: tuple


@dataclass(frozen=True)
class Named:
    identifier: str


GroupSpec = Permutation | Metacyclic | AbelianByCyclic | Abelian | DirectProduct | Named


# ---------------------------------------------------------------------------
# backends: vectorized arithmetic on normal-form rows
# ---------------------------------------------------------------------------

def _mixed_radix_weights(radices):
    weights = []
    acc = 1
    for r in reversed(radices):
        weights.append(acc)
        acc *= r
    if acc >= _KEY_LIMIT:
        raise InvalidSpec("normal forms too wide to index")
    return np.array(weights[::-1], dtype=np.int64), acc


class Backend:
    width: int
    key_space: int
    tag: str

    def identity(self) -> np.ndarray:
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def encode(self, rows):
        raise NotImplementedError


class _RadixBackend(Backend):
    def _init_radix(self, radices):
        self.radices = tuple(int(r) for r in radices)
        self._weights, self.key_space = _mixed_radix_weights(self.radices)

    def encode(self, rows):
        return np.asarray(rows, dtype=np.int64) @ self._weights


class PermBackend(Backend):
    """Rows are image tuples; (x*y)(i) = y(x(i)), i.e. x acts first."""

    tag = "permutation"

    def __init__(self, degree):
        self.degree = self.width = int(degree)
        self.key_space = math.factorial(self.degree)
        if self.key_space >= _KEY_LIMIT:
            raise InvalidSpec("permutation degree too large to index")
        self._fact = np.array(
            [math.factorial(self.degree - 1 - i) for i in range(self.degree)], dtype=np.int64
        )

    def identity(self):
        return np.arange(self.degree, dtype=np.int64)

    def mul(self, x, y):
        x, y = np.broadcast_arrays(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))
        return np.take_along_axis(y, x, axis=-1)

    def inv(self, x):
        x = np.asarray(x, dtype=np.int64)
        out = np.empty_like(x)
        np.put_along_axis(out, x, np.broadcast_to(np.arange(x.shape[-1]), x.shape), axis=-1)
        return out

    def encode(self, rows):
        # Lehmer rank: monotone in lexicographic order
        rows = np.asarray(rows, dtype=np.int64)
        keys = np.zeros(rows.shape[0], dtype=np.int64)
        for i in range(self.degree - 1):
            smaller = (rows[:, i + 1:] < rows[:, i:i + 1]).sum(axis=1)
            keys += smaller * self._fact[i]
        return keys


class MetacyclicBackend(_RadixBackend):
    tag = "metacyclic"

    def __init__(self, n, t, l, r):
        self.n, self.t, self.l, self.r = n, t, l, r
        self.width = 2
        self._init_radix((n, t))
        self._rpow = np.array([pow(r, j, n) for j in range(t)], dtype=np.int64)

    def identity(self):
        return np.zeros(2, dtype=np.int64)

    def mul(self, x, y):
        x, y = np.broadcast_arrays(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))
        i1, j1 = x[..., 0], x[..., 1]
        i2, j2 = y[..., 0], y[..., 1]
        i = i1 + i2 * self._rpow[j1]
        j = j1 + j2
        wrap = j >= self.t
        i = (i + np.where(wrap, self.l, 0)) % self.n
        j = np.where(wrap, j - self.t, j)
        return np.stack([i, j], axis=-1)

    def inv(self, x):
        x = np.asarray(x, dtype=np.int64)
        i, j = x[..., 0], x[..., 1]
        # b^-j = a^-l b^(t-j) for j > 0
        bi = np.stack([np.where(j > 0, (-self.l) % self.n, 0), np.where(j > 0, self.t - j, 0)], axis=-1)
        ai = np.stack([(-i) % self.n, np.zeros_like(i)], axis=-1)
        return self.mul(bi, ai)


class AbelianByCyclicBackend(_RadixBackend):
    """Rows (v, s) stand for v c^s with c^s v = phi^s(v) c^s."""

    tag = "abelian-by-cyclic"

    def __init__(self, invariants, action, t):
        self.inv_factors = np.array(invariants, dtype=np.int64)
        self.a = len(invariants)
        self.t = t
        self.width = self.a + 1
        self._init_radix(tuple(invariants) + (t,))
        m = np.array(action, dtype=np.int64).reshape(self.a, self.a)
        pows = [np.eye(self.a, dtype=np.int64)]
        for _ in range(1, t):
            pows.append((m @ pows[-1]) % self.inv_factors[:, None])
        self._phi = np.stack(pows)

    def identity(self):
        return np.zeros(self.width, dtype=np.int64)

    def _apply(self, s, v):
        return np.einsum("...ij,...j->...i", self._phi[s], v) % self.inv_factors

    def mul(self, x, y):
        x, y = np.broadcast_arrays(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))
        v1, s1 = x[..., :-1], x[..., -1]
        v2, s2 = y[..., :-1], y[..., -1]
        v = (v1 + self._apply(s1, v2)) % self.inv_factors
        s = (s1 + s2) % self.t
        return np.concatenate([v, s[..., None]], axis=-1)

    def inv(self, x):
        x = np.asarray(x, dtype=np.int64)
        v, s = x[..., :-1], x[..., -1]
        back = (-s) % self.t
        w = (-self._apply(back, v)) % self.inv_factors
        return np.concatenate([w, back[..., None]], axis=-1)


class AbelianBackend(_RadixBackend):
    tag = "abelian"

    def __init__(self, invariants):
        self.inv_factors = np.array(invariants, dtype=np.int64)
        self.width = len(invariants)
        self._init_radix(invariants)

    def identity(self):
        return np.zeros(self.width, dtype=np.int64)

    def mul(self, x, y):
        return (np.asarray(x, dtype=np.int64) + np.asarray(y, dtype=np.int64)) % self.inv_factors

    def inv(self, x):
        return (-np.asarray(x, dtype=np.int64)) % self.inv_factors


class ProductBackend(Backend):
    tag = "direct-product"

    def __init__(self, parts):
        self.parts = list(parts)
        self.slices = []
        start = 0
        for b in self.parts:
            self.slices.append(slice(start, start + b.width))
            start += b.width
        self.width = start
        self.key_space = reduce(lambda a, b: a * b.key_space, self.parts, 1)
        if self.key_space >= _KEY_LIMIT:
            raise InvalidSpec("direct product too large to index")

    def identity(self):
        return np.concatenate([b.identity() for b in self.parts])

    def _split(self, fn, *arrs):
        arrs = np.broadcast_arrays(*[np.asarray(a, dtype=np.int64) for a in arrs])
        return np.concatenate([fn(b, *[a[..., s] for a in arrs]) for b, s in zip(self.parts, self.slices)], axis=-1)

    def mul(self, x, y):
        return self._split(lambda b, u, v: b.mul(u, v), x, y)

    def inv(self, x):
        return self._split(lambda b, u: b.inv(u), x)

    def encode(self, rows):
        rows = np.asarray(rows, dtype=np.int64)
        key = np.zeros(rows.shape[0], dtype=np.int64)
        for b, s in zip(self.parts, self.slices):
            key = key * b.key_space + b.encode(rows[:, s])
        return key


class QuotientBackend(Backend):
    """Cosets of a normal subgroup, labelled 0..k-1 by smallest member."""

    tag = "quotient"

    def __init__(self, parent, coset_of, coset_reps):
        self.parent = parent
        self.coset_of = coset_of
        self.coset_reps = np.asarray(coset_reps, dtype=np.int64)
        self.width = 1
        self.key_space = len(coset_reps)

    def identity(self):
        return np.zeros(1, dtype=np.int64)

    def mul(self, x, y):
        x, y = np.broadcast_arrays(np.asarray(x, dtype=np.int64), np.asarray(y, dtype=np.int64))
        prod = self.parent.mul_idx(self.coset_reps[x[..., 0]], self.coset_reps[y[..., 0]])
        return self.coset_of[prod][..., None]

    def inv(self, x):
        x = np.asarray(x, dtype=np.int64)
        return self.coset_of[self.parent.inverse[self.coset_reps[x[..., 0]]]][..., None]

    def encode(self, rows):
        return np.asarray(rows, dtype=np.int64)[:, 0].copy()


# ---------------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------------

def _enumerate(backend, gen_rows, cap):
    """Breadth-first closure of the generators under right multiplication."""
    ident = backend.identity()[None, :]
    rows = [ident]
    keys = backend.encode(ident)
    frontier = ident
    gens = np.asarray(gen_rows, dtype=np.int64).reshape(-1, backend.width)
    total = 1
    while len(frontier) and len(gens):
        cand = backend.mul(frontier[:, None, :], gens[None, :, :]).reshape(-1, backend.width)
        ck = backend.encode(cand)
        ck, first = np.unique(ck, return_index=True)
        fresh = ~np.isin(ck, keys, assume_unique=True)
        frontier = cand[first[fresh]]
        if not len(frontier):
            break
        total += len(frontier)
        if total > cap:
            raise OrderCapExceeded(f">{cap}", cap)
        rows.append(frontier)
        keys = np.union1d(keys, ck[fresh])
    return np.concatenate(rows)


class FiniteGroup:
    """An enumerated finite group; elements are indices 0..order-1."""

    def __init__(self, backend, rows, generators, *, label="", spec=None, cap=DEFAULT_CAP):
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, backend.width)
        if len(rows) > cap:
            raise OrderCapExceeded(len(rows), cap)
        keys = backend.encode(rows)
        order = np.argsort(keys, kind="stable")
        self.backend = backend
        self.elements = rows[order]
        self.elements.flags.writeable = False
        self.keys = keys[order]
        self.order = len(rows)
        self.label = label
        self.spec = spec
        self.cap = cap
        self.identity = int(self.index_of(backend.identity()[None, :])[0])
        gens = self.index_of(np.asarray(generators, dtype=np.int64).reshape(-1, backend.width)) if len(generators) else []
        self.generators = tuple(sorted({int(x) for x in gens} - {self.identity}))

    @classmethod
    def generated(cls, backend, gen_rows, *, label="", spec=None, cap=DEFAULT_CAP):
        rows = _enumerate(backend, gen_rows, cap)
        return cls(backend, rows, gen_rows, label=label, spec=spec, cap=cap)

    def __repr__(self):
        return f"<FiniteGroup {self.label or self.backend.tag} order={self.order}>"

    @property
    def backend_tag(self):
        return self.backend.tag

    def __len__(self):
        return self.order

    # -- lookup and arithmetic ---------------------------------------------

    def index_of(self, rows):
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, self.backend.width)
        k = self.backend.encode(rows)
        idx = np.searchsorted(self.keys, k)
        idx = np.minimum(idx, self.order - 1)
        if not np.array_equal(self.keys[idx], k):
            raise ValueError("row is not an element of this group")
        return idx

    @cached_property
    def table(self):
        """Full Cayley table (int32), or None above TABLE_CAP."""
        if self.order > TABLE_CAP:
            return None
        n = self.order
        gens = list(self.generators)
        if not gens:
            return np.zeros((1, 1), dtype=np.int32)
        rmul = np.stack([self._rmul_rows(s) for s in gens]).astype(np.int32)
        parent = np.full(n, -2, dtype=np.int64)
        via = np.zeros(n, dtype=np.int64)
        parent[self.identity] = -1
        order = [self.identity]
        head = 0
        while head < len(order):
            j = order[head]
            head += 1
            for s in range(len(gens)):
                nb = int(rmul[s, j])
                if parent[nb] == -2:
                    parent[nb] = j
                    via[nb] = s
                    order.append(nb)
        t = kernels.cayley_table(rmul, parent, via, np.array(order, dtype=np.int64))
        t.flags.writeable = False
        return t

    def _rmul_rows(self, s):
        return self.index_of(self.backend.mul(self.elements, self.elements[s][None, :]))

    def mul_idx(self, a, b):
        """Elementwise product of index arrays (broadcasting)."""
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        t = self.table
        if t is not None:
            return t[a, b].astype(np.int64)
        shape = a.shape
        rows = self.backend.mul(self.elements[a.ravel()], self.elements[b.ravel()])
        return self.index_of(rows).reshape(shape)

    def mul(self, a, b):
        return int(self.mul_idx(np.array([a]), np.array([b]))[0])

    @cached_property
    def inverse(self):
        inv = self.index_of(self.backend.inv(self.elements))
        inv.flags.writeable = False
        return inv

    def inv(self, a):
        return int(self.inverse[a])

    def power(self, a, k):
        if k < 0:
            a, k = self.inv(a), -k
        result, base = self.identity, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def commutator(self, a, b):
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    def conj_perm(self, g):
        """Array c with c[i] = index of g^-1 e_i g."""
        everything = np.arange(self.order)
        return self.mul_idx(self.mul_idx(self.inverse[g], everything), g)

    # -- derived data --------------------------------------------------------

    @cached_property
    def classes(self):
        return conjugacy_classes(self)

    @cached_property
    def element_orders(self):
        t = self.classes
        out = np.asarray(t.orders, dtype=np.int64)[t.class_of]
        out.flags.writeable = False
        return out

    @cached_property
    def exponent(self):
        return int(reduce(math.lcm, self.classes.orders, 1))

    @cached_property
    def is_abelian(self):
        g = self.generators
        return all(self.mul(a, b) == self.mul(b, a) for i, a in enumerate(g) for b in g[i + 1:])

    @cached_property
    def center(self):
        mask = np.ones(self.order, dtype=bool)
        everything = np.arange(self.order)
        for s in self.generators:
            mask &= self.mul_idx(everything, s) == self.mul_idx(s, everything)
        return make_subgroup(self, np.nonzero(mask)[0])

    @cached_property
    def primes(self):
        return prime_factors(self.order)


# ---------------------------------------------------------------------------
# subgroups
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Subgroup:
    group: FiniteGroup
    elements: np.ndarray     # sorted indices into group
    generators: tuple = ()

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        i = np.searchsorted(self.elements, x)
        return bool(i < len(self.elements) and self.elements[i] == x)

    def mask(self):
        m = np.zeros(self.group.order, dtype=bool)
        m[self.elements] = True
        return m

    def same_as(self, other):
        return np.array_equal(self.elements, other.elements)

    def is_abelian(self):
        g = self.group
        gens = self.generators
        return all(g.mul(a, b) == g.mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])

    def is_normal(self):
        g = self.group
        m = self.mask()
        return all(m[g.conj_perm(s)[list(self.generators)]].all() for s in g.generators) if self.generators else True


def _close(g, gens, start=None):
    """Indices of <start, gens> as a sorted array."""
    members = np.array([g.identity] if start is None else start, dtype=np.int64)
    gens = np.asarray(sorted(set(int(x) for x in gens)), dtype=np.int64)
    if not len(gens):
        return np.unique(members)
    mask = np.zeros(g.order, dtype=bool)
    mask[members] = True
    frontier = np.nonzero(mask)[0]
    while len(frontier):
        cand = np.unique(g.mul_idx(frontier[:, None], gens[None, :]).ravel())
        frontier = cand[~mask[cand]]
        mask[frontier] = True
    return np.nonzero(mask)[0]


def _reduce_generators(g, gens):
    kept = []
    members = np.array([g.identity], dtype=np.int64)
    for x in gens:
        x = int(x)
        i = np.searchsorted(members, x)
        if i < len(members) and members[i] == x:
            continue
        kept.append(x)
        members = _close(g, kept)
    return tuple(kept), members


def subgroup_closure(g, gens):
    """Smallest subgroup of ``g`` containing ``gens``."""
    kept, members = _reduce_generators(g, gens)
    return Subgroup(g, members, kept)


def make_subgroup(g, elements):
    """Wrap a known subgroup given as an index set; generators are recomputed."""
    elements = np.unique(np.asarray(elements, dtype=np.int64))
    kept, members = _reduce_generators(g, elements)
    if len(members) != len(elements):
        raise ValueError("index set is not a subgroup")
    return Subgroup(g, members, kept)


def whole_group(g):
    return Subgroup(g, np.arange(g.order, dtype=np.int64), g.generators)


def trivial_subgroup(g):
    return Subgroup(g, np.array([g.identity], dtype=np.int64), ())


def normal_closure(g, seeds, conjugators):
    """Normal closure of ``seeds`` under conjugation by ``conjugators``."""
    h = subgroup_closure(g, seeds)
    while True:
        mask = h.mask()
        extra = []
        for y in conjugators:
            images = g.conj_perm(y)[list(h.generators)] if h.generators else []
            extra.extend(int(c) for c in images if not mask[c])
        if not extra:
            return h
        h = subgroup_closure(g, list(h.generators) + extra)


def centralizer(g, x):
    everything = np.arange(g.order)
    mask = g.mul_idx(everything, x) == g.mul_idx(x, everything)
    return make_subgroup(g, np.nonzero(mask)[0])


def cyclic_subgroup(g, x):
    return subgroup_closure(g, [x])


def cyclic_normalizer(g, x):
    cyc = cyclic_subgroup(g, x).mask()
    # y normalizes <x> iff y^-1 x y lies in <x>
    mask = cyc[g.mul_idx(g.mul_idx(g.inverse, x), np.arange(g.order))]
    return make_subgroup(g, np.nonzero(mask)[0])


def normalizer(g, h):
    mask = np.ones(g.order, dtype=bool)
    hm = h.mask()
    everything = np.arange(g.order)
    for y in h.generators:
        mask &= hm[g.mul_idx(g.mul_idx(g.inverse, y), everything)]
    return make_subgroup(g, np.nonzero(mask)[0])


def commutator_subgroup(g):
    gens = g.generators
    seeds = [g.commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
    return normal_closure(g, seeds, gens)


def derived_series(g):
    series = [whole_group(g)]
    while True:
        h = series[-1]
        gens = h.generators
        seeds = [g.commutator(a, b) for i, a in enumerate(gens) for b in gens[i + 1:]]
        nxt = normal_closure(g, seeds, gens)
        if nxt.same_as(h):
            return series
        series.append(nxt)


def lower_central_series(g):
    series = [whole_group(g)]
    while True:
        h = series[-1]
        seeds = [g.commutator(a, s) for a in h.generators for s in g.generators]
        nxt = normal_closure(g, seeds, g.generators)
        if nxt.same_as(h):
            return series
        series.append(nxt)


def solvability_flags(g):
    """(is_abelian, is_nilpotent, is_solvable)."""
    solvable = derived_series(g)[-1].order == 1
    nilpotent = solvable and lower_central_series(g)[-1].order == 1
    return g.is_abelian, nilpotent, solvable


# ---------------------------------------------------------------------------
# conjugacy classes
# ---------------------------------------------------------------------------

class ClassTable:
    """Conjugacy classes with power maps.

    Classes are ordered by their representative, the minimal element index,
    so the identity class is always class 0.
    """

    def __init__(self, group, reps, class_of, powers):
        self.group = group
        self.reps = tuple(int(r) for r in reps)
        self.class_of = class_of
        self.class_of.flags.writeable = False
        self.sizes = tuple(int(s) for s in np.bincount(class_of, minlength=len(reps)))
        self._powers = powers                 # element index of rep^s, s < order
        self._power_classes = [class_of[p] for p in powers]
        self.orders = tuple(len(p) for p in powers)

    @property
    def num_classes(self):
        return len(self.reps)

    @property
    def group_order(self):
        return self.group.order

    @cached_property
    def exponent(self):
        return int(reduce(math.lcm, self.orders, 1))

    def power_class(self, k, j):
        pc = self._power_classes[k]
        return int(pc[j % len(pc)])

    def power_element(self, k, j):
        p = self._powers[k]
        return int(p[j % len(p)])

    def inverse_class(self, k):
        return self.power_class(k, -1)

    def members(self, k):
        return np.nonzero(self.class_of == k)[0]

    def class_members(self):
        order = np.argsort(self.class_of, kind="stable")
        bounds = np.cumsum((0,) + self.sizes)
        return [order[bounds[k]:bounds[k + 1]] for k in range(self.num_classes)]


def conjugacy_classes(g):
    perms = np.stack([g.conj_perm(s) for s in g.generators]) if g.generators else np.zeros((0, g.order), dtype=np.int64)
    labels = kernels.orbit_labels(perms)
    reps = np.unique(labels)
    class_of = np.searchsorted(reps, labels).astype(np.int64)
    return ClassTable(g, reps, class_of, _rep_powers(g, reps))


def _rep_powers(g, reps):
    reps = np.asarray(reps, dtype=np.int64)
    c = len(reps)
    cols = []
    cur = np.full(c, g.identity, dtype=np.int64)
    orders = np.zeros(c, dtype=np.int64)
    s = 0
    while True:
        cols.append(cur)
        s += 1
        cur = g.mul_idx(cur, reps)
        done = (cur == g.identity) & (orders == 0)
        orders[done] = s
        if (orders > 0).all():
            break
        if s > g.order:
            raise RuntimeError("power sweep did not terminate")
    mat = np.stack(cols, axis=1)
    return [mat[k, :orders[k]].copy() for k in range(c)]


# ---------------------------------------------------------------------------
# sylow subgroups, index-two subgroups, products, quotients
# ---------------------------------------------------------------------------

def prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n, p):
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def sylow_p_subgroup(g, p):
    """Sylow p-subgroup as a Subgroup of ``g``."""
    if g.order % p:
        raise PNotDividing(f"{p} does not divide {g.order}")
    target = p_part(g.order, p)
    orders = g.element_orders
    is_p_elt = np.array([o > 1 and p_part(int(o), p) == o for o in orders])
    pg = trivial_subgroup(g)
    while pg.order < target:
        nm = normalizer(g, pg).mask()
        cand = np.nonzero(nm & is_p_elt & ~pg.mask())[0]
        if not len(cand):
            raise RuntimeError("no p-element in the normalizer; group data inconsistent")
        pg = subgroup_closure(g, list(pg.generators) + [int(cand[0])])
    return pg


def subgroup_as_group(sub, label=""):
    g = sub.group
    rows = g.elements[sub.elements]
    gens = g.elements[list(sub.generators)] if sub.generators else np.zeros((0, g.backend.width))
    return FiniteGroup(g.backend, rows, gens, label=label, cap=g.cap)


def sylow_subgroup(g, p):
    return subgroup_as_group(sylow_p_subgroup(g, p), label=f"Sylow{p}({g.label})")


def index_two_subgroups(g):
    """All subgroups of index 2, via the elementary abelian quotient G/G^2."""
    if g.order % 2:
        return []
    everything = np.arange(g.order)
    squares = np.unique(g.mul_idx(everything, everything))
    k = normal_closure(g, squares.tolist(), g.generators)
    if k.order == g.order:
        return []
    # G/K is elementary abelian; give each coset coordinates over GF(2)
    q = quotient(g, k)
    coset = q.backend.coset_of
    coords = {0: 0}
    rank = 0
    for c in range(q.order):
        if c in coords:
            continue
        bit = 1 << rank
        rank += 1
        for x, v in list(coords.items()):
            coords[q.mul(x, c)] = v | bit
    vec_of = np.array([coords[c] for c in range(q.order)], dtype=np.int64)
    out = []
    for f in range(1, 1 << rank):
        parity = np.array([bin(int(v) & f).count("1") % 2 for v in vec_of])
        out.append(make_subgroup(g, np.nonzero(parity[coset] == 0)[0]))
    out.sort(key=lambda h: tuple(h.elements.tolist()))
    return out


def _coset_rep(coset, label):
    return int(np.nonzero(coset == label)[0][0])


def _coset_labels(g, k):
    """Label left cosets xK by order of first appearance (identity coset = 0)."""
    label = np.full(g.order, -1, dtype=np.int64)
    nxt = 0
    for x in range(g.order):
        if label[x] >= 0:
            continue
        label[g.mul_idx(x, k.elements)] = nxt
        nxt += 1
    return label


def index_two_abelian_subgroups(g):
    return [h for h in index_two_subgroups(g) if h.is_abelian()]


def quotient(g, n):
    """G/N for a normal subgroup N, realized on coset labels."""
    coset = _coset_labels(g, n)
    reps = np.array([_coset_rep(coset, c) for c in range(int(coset.max()) + 1)])
    backend = QuotientBackend(g, coset, reps)
    rows = np.arange(len(reps))[:, None]
    gens = coset[list(g.generators)][:, None] if g.generators else np.zeros((0, 1))
    return FiniteGroup(backend, rows, gens, label=f"{g.label}/N", cap=g.cap)


def direct_product(a, b, cap=DEFAULT_CAP):
    if a.order * b.order > cap:
        raise OrderCapExceeded(a.order * b.order, cap)
    backend = ProductBackend([a.backend, b.backend])
    ia, ib = np.meshgrid(np.arange(a.order), np.arange(b.order), indexing="ij")
    rows = np.concatenate([a.elements[ia.ravel()], b.elements[ib.ravel()]], axis=1)
    ida = a.elements[a.identity]
    idb = b.elements[b.identity]
    gens = [np.concatenate([a.elements[s], idb]) for s in a.generators]
    gens += [np.concatenate([ida, b.elements[s]]) for s in b.generators]
    gens = np.array(gens, dtype=np.int64).reshape(-1, backend.width)
    return FiniteGroup(backend, rows, gens, label=f"{a.label} x {b.label}", cap=cap)


# ---------------------------------------------------------------------------
# realization
# ---------------------------------------------------------------------------

def validate_metacyclic(n, t, l, r):
    if min(n, t, l, r) < 1:
        raise InvalidSpec("metacyclic parameters must be positive")
    if n % l:
        raise InvalidSpec(f"l={l} does not divide n={n}")
    if pow(r, t, n) != 1 % n:
        raise InvalidSpec(f"r^t = {r}^{t} is not 1 mod {n}")
    if (l * (r - 1)) % n:
        raise InvalidSpec(f"l(r-1) = {l * (r - 1)} is not 0 mod {n}")


def _audit_metacyclic(g, n, t, l, r):
    b_ = g.backend
    a = np.array([1 % n, 0]) if t > 1 or n > 1 else np.zeros(2, dtype=np.int64)
    b = np.array([0, 1]) if t > 1 else np.array([l % n, 0])
    lhs = b_.mul(b_.mul(b, a), b_.inv(b))
    rhs = np.array([r % n, 0])
    ok = np.array_equal(lhs % [n, t], rhs) if n > 1 else True
    bt = b_.identity()
    for _ in range(t):
        bt = b_.mul(bt, b)
    ok = ok and np.array_equal(bt, np.array([l % n, 0]))
    if not ok or g.order != n * t:
        raise InvalidSpec("metacyclic relation audit failed")


def _check_abc(invariants, action, t):
    a = len(invariants)
    if a == 0 or min(invariants) < 1 or t < 1:
        raise InvalidSpec("abelian-by-cyclic needs positive invariants and t")
    if len(action) != a or any(len(row) != a for row in action):
        raise InvalidSpec("action matrix must be square of size len(invariants)")
    for i in range(a):
        for j in range(a):
            if (action[i][j] * invariants[j]) % invariants[i]:
                raise InvalidSpec(f"action entry ({i},{j}) is not well defined mod {invariants[i]}")
    size = math.prod(invariants)
    grid = np.stack(np.meshgrid(*[np.arange(d) for d in invariants], indexing="ij"), axis=-1).reshape(-1, a)
    m = np.array(action, dtype=np.int64)
    d = np.array(invariants, dtype=np.int64)
    image = (grid @ m.T) % d
    w, _ = _mixed_radix_weights(invariants)
    if len(np.unique(image @ w)) != size:
        raise InvalidSpec("action is not an automorphism")
    cur = grid.copy()
    for _ in range(t):
        cur = (cur @ m.T) % d
    if not np.array_equal(cur, grid):
        raise InvalidSpec(f"action does not have order dividing t={t}")


def _product_grid(invariants):
    if not invariants:
        return np.zeros((1, 0), dtype=np.int64)
    return np.stack(np.meshgrid(*[np.arange(d) for d in invariants], indexing="ij"), axis=-1).reshape(-1, len(invariants))


def realize(spec, cap=DEFAULT_CAP):
    """Build the FiniteGroup described by ``spec``."""
    from . import named

    if isinstance(spec, Named):
        return realize(named.expand(spec.identifier, cap=cap), cap=cap)._relabel(spec)
    if isinstance(spec, Metacyclic):
        n, t, l, r = spec.n, spec.t, spec.l, spec.r
        validate_metacyclic(n, t, l, r)
        if n * t > cap:
            raise OrderCapExceeded(n * t, cap)
        backend = MetacyclicBackend(n, t, l, r)
        rows = _product_grid((n, t))
        gens = [[1 % n, 0], [0, 1 % t] if t > 1 else [l % n, 0]]
        g = FiniteGroup(backend, rows, gens, label=f"metacyclic({n},{t},{l},{r})", spec=spec, cap=cap)
        _audit_metacyclic(g, n, t, l, r)
        return g
    if isinstance(spec, AbelianByCyclic):
        inv, act, t = tuple(spec.invariants), tuple(tuple(r) for r in spec.action), spec.t
        _check_abc(inv, act, t)
        size = math.prod(inv) * t
        if size > cap:
            raise OrderCapExceeded(size, cap)
        backend = AbelianByCyclicBackend(inv, act, t)
        rows = _product_grid(inv + (t,))
        gens = np.eye(len(inv) + 1, dtype=np.int64)
        return FiniteGroup(backend, rows, gens, label="abc", spec=spec, cap=cap)
    if isinstance(spec, Abelian):
        inv = tuple(spec.invariants)
        if not inv or min(inv) < 1:
            raise InvalidSpec("abelian invariants must be positive")
        size = math.prod(inv)
        if size > cap:
            raise OrderCapExceeded(size, cap)
        backend = AbelianBackend(inv)
        gens = np.eye(len(inv), dtype=np.int64) % np.array(inv)
        return FiniteGroup(backend, _product_grid(inv), gens, label="abelian" + str(list(inv)), spec=spec, cap=cap)
    if isinstance(spec, DirectProduct):
        if not spec.factors:
            raise InvalidSpec("empty direct product")
        parts = [realize(f, cap=cap) for f in spec.factors]
        g = parts[0]
        for h in parts[1:]:
            g = direct_product(g, h, cap=cap)
        g.spec = spec
        return g
    if isinstance(spec, Permutation):
        n = spec.degree
        if n < 1:
            raise InvalidSpec("degree must be positive")
        for p in spec.generators:
            if sorted(p) != list(range(n)):
                raise InvalidSpec(f"{p} is not a permutation of degree {n}")
        backend = PermBackend(n)
        gens = np.array(spec.generators, dtype=np.int64).reshape(-1, n)
        return FiniteGroup.generated(backend, gens, label=f"perm({n})", spec=spec, cap=cap)
    raise InvalidSpec(f"unknown spec {spec!r}")


def _relabel(self, spec):
    self.spec = spec
    self.label = spec.identifier
    return self


FiniteGroup._relabel = _relabel


def check_group_laws(g, samples=200, seed=0):
    """Sampled associativity plus identity/inverse laws on every element."""
    rng = np.random.default_rng(seed)
    n = g.order
    a, b, c = rng.integers(0, n, size=(3, samples))
    assoc = np.array_equal(g.mul_idx(g.mul_idx(a, b), c), g.mul_idx(a, g.mul_idx(b, c)))
    everything = np.arange(n)
    ident = np.array_equal(g.mul_idx(everything, g.identity), everything) and np.array_equal(
        g.mul_idx(g.identity, everything), everything)
    inverse = bool((g.mul_idx(everything, g.inverse) == g.identity).all())
    return assoc and ident and inverse
