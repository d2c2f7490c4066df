"""Rationality verdicts: rational, cut, USR, SR, QR, QSR, plus rho and central height."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from . import engine, galois
from .errors import NotApplicable, OrderCapExceeded
from .galois import Quadratic, Rationals, UnitSubgroup, units


@dataclass(frozen=True)
class ElementRationality:
    class_index: int
    order: int
    stabilizer: UnitSubgroup
    field: object
    rational: bool
    inverse_semirational: bool
    semirational: bool
    partners: tuple


def element_rationality(t, k):
    o = t.orders[k]
    stab = galois.stabilizer_units(t, k)
    full = len(units(o)) if o > 1 else 1
    gens = {t.power_class(k, j) for j in units(o)}
    partners = tuple(m for m in range(o) if gens <= {k, t.power_class(k, m)})
    return ElementRationality(
        class_index=k,
        order=o,
        stabilizer=stab,
        field=galois.fixed_field_id(stab),
        rational=len(stab) == full,
        inverse_semirational=len(stab.with_minus_one()) == full,
        semirational=stab.index <= 2,
        partners=partners,
    )


class ResidueSet:
    """A set of residues mod ``modulus`` that is periodic with period ``base``.

    Stored as the sorted residues mod ``base``; membership and counting never
    expand the full set, which for Alt(22) would have hundreds of millions of
    elements.
    """

    def __init__(self, modulus, base, residues):
        self.modulus = int(modulus)
        self.base = int(base)
        self.residues = np.asarray(residues, dtype=np.int64)

    def __contains__(self, m):
        r = m % self.base
        i = np.searchsorted(self.residues, r)
        return bool(i < len(self.residues) and self.residues[i] == r)

    def __len__(self):
        return len(self.residues) * (self.modulus // self.base)

    def __bool__(self):
        return len(self.residues) > 0

    def __iter__(self):
        for block in range(0, self.modulus, self.base):
            for r in self.residues:
                yield block + int(r)

    def as_list(self, limit=None):
        if limit is not None and len(self) > limit:
            return None
        return list(self)

    def __eq__(self, other):
        if not isinstance(other, ResidueSet):
            return NotImplemented
        return self.modulus == other.modulus and list(self) == list(other)

    def __repr__(self):
        shown = self.as_list(limit=16)
        body = shown if shown is not None else f"{len(self)} residues"
        return f"ResidueSet(mod {self.modulus}: {body})"


def usr_values(t, infos=None):
    """All m mod e such that every <x> has its generators in C_x u C_{x^m}."""
    e = t.exponent
    if infos is None:
        infos = [element_rationality(t, k) for k in range(t.num_classes)]
    by_order = {}
    for info in infos:
        if info.rational:
            continue
        allowed = set(info.partners)
        by_order[info.order] = by_order.get(info.order, allowed) & allowed
    base = reduce(math.lcm, by_order, 1)
    m = np.arange(base, dtype=np.int64)
    mask = np.ones(base, dtype=bool)
    for o, allowed in sorted(by_order.items()):
        lookup = np.zeros(o, dtype=bool)
        lookup[list(allowed)] = True
        mask &= lookup[m % o]
        if not mask.any():
            break
    return ResidueSet(e, base, np.nonzero(mask)[0])


def usr_values_scan(t):
    """Literal scan of 0..e-1; the oracle for :func:`usr_values` on small e."""
    e = t.exponent
    good = []
    for m in range(e):
        if all({t.power_class(k, j) for j in units(t.orders[k])} <= {k, t.power_class(k, m)}
               for k in range(t.num_classes)):
            good.append(m)
    return good


def rank_rho(t):
    return len(galois.r_class_partition(t)) - len(galois.q_class_partition(t))


@dataclass(frozen=True)
class FastCutResult:
    criterion: str
    verdict: bool


def fast_cut_checks(t):
    """Specialized cut criteria for odd-order groups, 2-groups and 3-groups.

    Accepts a FiniteGroup or a class table.
    """
    if isinstance(t, engine.FiniteGroup):
        t = t.classes
    n = t.group_order
    primes = engine.prime_factors(n)
    out = []
    inv = [t.inverse_class(k) for k in range(t.num_classes)]
    if n % 2:
        ok = all((o == 7 or _is_power_of(o, 3)) and t.power_class(k, 5) == inv[k]
                 for k, o in enumerate(t.orders))
        out.append(FastCutResult("odd-order", ok))
    if primes == [2] or n == 1:
        out.append(FastCutResult("2-group", all(t.power_class(k, 3) in (k, inv[k]) for k in range(t.num_classes))))
    if primes == [3] or n == 1:
        out.append(FastCutResult("3-group", all(t.power_class(k, 2) == inv[k] for k in range(t.num_classes))))
    if not out:
        raise NotApplicable("group is neither of odd order nor a 2- or 3-group")
    return out


def _is_power_of(o, p):
    while o % p == 0:
        o //= p
    return o == 1


# --- Q*-groups and central height ---------------------------------------------

def q_star_detect(g):
    """True iff g = <H, a> with H abelian of index 2 (not elementary abelian 2),
    a of order 4 inverting H, and a^2 = b^2 for some b in H."""
    if g.order % 2 or g.order < 4:
        return False
    orders = g.element_orders
    for h in engine.index_two_abelian_subgroups(g):
        if orders[h.elements].max() <= 2:
            continue
        mask = h.mask()
        cand = np.nonzero((orders == 4) & ~mask)[0]
        if not len(cand):
            continue
        ok = np.ones(len(cand), dtype=bool)
        for y in h.generators:
            conj = g.mul_idx(g.mul_idx(g.inverse[cand], y), cand)
            ok &= conj == g.inverse[y]
        if not ok.any():
            continue
        squares_h = set(g.mul_idx(h.elements, h.elements).tolist())
        a = cand[ok]
        if any(int(s) in squares_h for s in g.mul_idx(a, a)):
            return True
    return False


def center_order(t):
    return sum(1 for s in t.sizes if s == 1)


def central_height(q_star, cut, center_size):
    if q_star:
        return 2
    if cut and center_size == 1:
        return 0
    return 1


# --- full report ------------------------------------------------------------------

@dataclass
class GroupReport:
    spec: str
    order: int
    exponent: int
    primes: tuple
    rational: bool
    cut: bool
    semirational: bool
    usr: bool
    quadratic_rational: object          # bool, or None when not computed
    qsr: object
    usr_m_set: ResidueSet
    rho: int
    central_height: int
    q_star: bool
    group_field_degree: object = None
    group_field_d: object = None
    counts: object = None
    gk_graph: object = None
    validators: list = field(default_factory=list)
    cut_by_characters: object = None
    solvable: object = None
    nilpotent: object = None
    abelian: object = None
    notes: list = field(default_factory=list)
    character_table: object = field(default=None, repr=False, compare=False)
    class_info: tuple = field(default=(), repr=False, compare=False)

    @property
    def usr_set_nonempty(self):
        return bool(self.usr_m_set)


def _virtual_structure(t):
    n = t.n
    if t.alternating:
        return n <= 3, n <= 3, n <= 4
    return n <= 2, n <= 2, n <= 4


def classify(obj, *, char_cap=None, dixon_prime=None, spec_text=None, with_characters=True):
    """Classify a FiniteGroup or a virtual Sym/Alt class table."""
    from . import chartable, surveys, symfast

    virtual = isinstance(obj, symfast.VirtualClassTable)
    if virtual:
        t = obj
        g = None
        label = obj.label
        abelian, nilpotent, solvable = _virtual_structure(t)
    else:
        g = obj
        t = g.classes
        label = g.label
        abelian, nilpotent, solvable = engine.solvability_flags(g)

    infos = tuple(element_rationality(t, k) for k in range(t.num_classes))
    rational = all(i.rational for i in infos)
    cut = all(i.inverse_semirational for i in infos)
    semirational = all(i.semirational for i in infos)
    usr_set = usr_values(t, infos)
    rho = rank_rho(t)

    ct = None
    notes = []
    if with_characters:
        target = g
        if virtual and t.n <= 9:
            from .named import expand
            target = engine.realize(expand(t.label))
        cap = char_cap if char_cap is not None else (target.cap if target is not None else 0)
        if target is not None and target.order <= cap:
            try:
                ct = chartable.dixon_table(target, prime=dixon_prime)
            except OrderCapExceeded:
                ct = None
        elif target is None or target.order > cap:
            notes.append("character table not computed")

    qr = qsr = gdeg = gd = counts = cut_chars = None
    if ct is not None:
        stabs = [chartable.char_stabilizer(ct, chi) for chi in range(ct.num_characters)]
        fields = [galois.fixed_field_id(s) for s in stabs]
        qr = all(f.degree <= 2 for f in fields)
        qsr = qr and semirational
        cut_chars = all(isinstance(f, Rationals) or (isinstance(f, Quadratic) and f.d < 0) for f in fields)
        h = UnitSubgroup(ct.exponent, units(ct.exponent))
        for s in stabs:
            h = galois.intersect(h, s)
        gdeg = h.index
        if gdeg == 2:
            gd = galois.fixed_field_id(h).d
        counts = chartable.field_counts(ct, ct.classes)
        if usr_set and not qr:
            raise AssertionError(f"{label}: uniformly semi-rational but not quadratic rational")

    q_star = q_star_detect(g) if g is not None else False
    height = central_height(q_star, cut, center_order(t))
    report = GroupReport(
        spec=spec_text or label,
        order=t.group_order,
        exponent=t.exponent,
        primes=tuple(engine.prime_factors(t.group_order)),
        rational=rational,
        cut=cut,
        semirational=semirational,
        usr=bool(usr_set),
        quadratic_rational=qr,
        qsr=qsr,
        usr_m_set=usr_set,
        rho=rho,
        central_height=height,
        q_star=q_star,
        group_field_degree=gdeg,
        group_field_d=gd,
        counts=counts,
        cut_by_characters=cut_chars,
        solvable=solvable,
        nilpotent=nilpotent,
        abelian=abelian,
        notes=notes,
        character_table=ct,
        class_info=infos,
    )
    if cut and (t.exponent - 1) not in usr_set:
        raise AssertionError(f"{label}: cut but e-1 is not a uniform partner")
    report.gk_graph = surveys.gk_graph_from_orders(report.primes, t.orders)
    report.validators = surveys.spectrum_validate(report)
    return report
