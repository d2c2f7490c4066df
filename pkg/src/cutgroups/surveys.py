"""Survey-level computations: prime graphs, spectrum validators, direct-product
predictions, and the metacyclic and alternating classification tables."""

from __future__ import annotations

import json
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources

from . import engine, symfast
from .errors import NOutOfRange, NotApplicable

log = logging.getLogger(__name__)

# --- Gruenberg-Kegel graphs ---------------------------------------------------------


@dataclass(frozen=True)
class GKGraph:
    vertices: tuple
    edges: tuple      # sorted pairs (p, q) with p < q

    def as_dict(self):
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}


def gk_graph_from_orders(primes, element_orders):
    primes = tuple(sorted(primes))
    edges = set()
    for i, p in enumerate(primes):
        for q in primes[i + 1:]:
            if any(o % (p * q) == 0 for o in element_orders):
                edges.add((p, q))
    return GKGraph(primes, tuple(sorted(edges)))


def gk_graph(g):
    """Prime graph of a FiniteGroup or a virtual class table."""
    if isinstance(g, engine.FiniteGroup):
        return gk_graph_from_orders(g.primes, g.classes.orders)
    return gk_graph_from_orders(engine.prime_factors(g.group_order), g.orders)


def _edges(*pairs):
    return tuple(sorted(tuple(sorted(p)) for p in pairs))


# Graphs of solvable cut groups, labelled as in the published catalog.  Graph (f)
# is drawn with a dangling node name in its source; it is read as the edge 2-5.
FIGURE1 = {
    "a": ((2,), ()),
    "b": ((3,), ()),
    "c": ((2, 3), ()),
    "d": ((2, 3), _edges((2, 3))),
    "e": ((2, 5), ()),
    "f": ((2, 5), _edges((2, 5))),
    "g": ((3, 7), ()),
    "h": ((2, 3, 5), _edges((2, 3))),
    "i": ((2, 3, 5), _edges((2, 3), (2, 5))),
    "j": ((2, 3, 5), _edges((2, 3), (3, 5))),
    "k": ((2, 3, 5), _edges((2, 3), (2, 5), (3, 5))),
    "l": ((2, 3, 7), _edges((2, 3))),
    "m": ((2, 3, 7), _edges((2, 3), (2, 7))),
    "n": ((2, 3, 7), _edges((2, 3), (3, 7))),
    "o": ((2, 3, 7), _edges((2, 3), (2, 7), (3, 7))),
    "p": ((2, 3, 5, 7), _edges((2, 3), (2, 7), (3, 5), (5, 7))),
    "q": ((2, 3, 5, 7), _edges((2, 3), (2, 5), (2, 7), (3, 5), (5, 7))),
    "r": ((2, 3, 5, 7), _edges((2, 3), (2, 5), (2, 7), (3, 5), (3, 7), (5, 7))),
    "s": ((2, 3, 5, 7), _edges((2, 3), (2, 7), (3, 5), (3, 7))),
    "t": ((2, 3, 5, 7), _edges((2, 3), (2, 5), (2, 7), (3, 5))),
    "u": ((2, 3, 5, 7), _edges((2, 3), (2, 7), (3, 5), (3, 7), (5, 7))),
    "v": ((2, 3, 5, 7), _edges((2, 3), (2, 5), (2, 7), (3, 5), (3, 7))),
}
REALIZABILITY_OPEN = frozenset("stuv")


def figure1_lookup(graph):
    for label, (verts, edges) in FIGURE1.items():
        if tuple(graph.vertices) == verts and tuple(graph.edges) == edges:
            return label
    return None


# --- prime spectrum validators ---------------------------------------------------------

def spectrum_validate(report, solvable=None, nilpotent=None):
    """Constraint violations of the prime-spectrum theorems for this report."""
    solvable = report.solvable if solvable is None else solvable
    nilpotent = report.nilpotent if nilpotent is None else nilpotent
    pi = set(report.primes)
    qr = report.quadratic_rational is True
    usr = report.usr
    qsr = report.qsr is True
    in_any = report.cut or report.semirational or qr or usr
    out = []
    if report.order == 1 or not in_any:
        return out

    def need(cond, text):
        if not cond:
            out.append(text)

    if report.cut or report.semirational or qr:
        need(2 in pi or 3 in pi, "cut/SR/QR group must have 2 or 3 in its spectrum")
    if nilpotent:
        need(pi <= {2, 3}, "nilpotent group in a rationality class must be a {2,3}-group")
    if report.order % 2:
        need(pi <= {3, 7}, "odd-order group in a rationality class must have spectrum in {3,7}")
    if solvable:
        if report.cut:
            need(pi <= {2, 3, 5, 7}, "solvable cut group has spectrum outside {2,3,5,7}")
        if usr or qr or qsr:
            need(pi <= {2, 3, 5, 7, 13}, "solvable USR/QR/QSR group has spectrum outside {2,3,5,7,13}")
        if report.semirational:
            need(pi <= {2, 3, 5, 7, 13, 17}, "solvable SR group has spectrum outside {2,3,5,7,13,17}")
    return out


# --- direct products ------------------------------------------------------------------

CLASSES = ("cut", "usr", "qsr", "sr", "qr")


def in_class(report, x):
    value = {
        "cut": report.cut,
        "usr": report.usr,
        "qsr": report.qsr,
        "sr": report.semirational,
        "qr": report.quadratic_rational,
        "rational": report.rational,
    }[x]
    if value is None:
        raise NotApplicable(f"class {x} not decided for {report.spec}")
    return value


def gcd_cut_criterion(rep1, rep2):
    """Element-order test for cut products: every gcd of non-rational element orders in {3,4,6}.

    Only a cross-check.  It is wrong in both directions on small groups:
    C4 x SD16 passes but is not cut, SD16 x SD16 fails but is cut.
    """
    o1 = {i.order for i in rep1.class_info if not i.rational}
    o2 = {i.order for i in rep2.class_info if not i.rational}
    return all(math.gcd(a, b) in (3, 4, 6) for a in o1 for b in o2)


def predict_product(rep1, rep2, x):
    """Membership of G1 x G2 in class x predicted from the factors' group fields."""
    if not (in_class(rep1, x) and in_class(rep2, x)):
        raise NotApplicable(f"both factors must lie in class {x}")
    if rep1.rational or rep2.rational:
        verdict = True
    else:
        d1, d2 = rep1.group_field_d, rep2.group_field_d
        verdict = d1 is not None and d1 == d2 and (x != "cut" or d1 < 0)
    if x == "cut" and verdict != gcd_cut_criterion(rep1, rep2):
        log.warning("element-order criterion disagrees for %s x %s; using the field verdict",
                    rep1.spec, rep2.spec)
    return verdict


def verify_product(spec1, spec2, x, cap=engine.DEFAULT_CAP, dixon_prime=None):
    from .classify import classify

    g = engine.realize(engine.DirectProduct((spec1, spec2)), cap=cap)
    return in_class(classify(g, dixon_prime=dixon_prime), x)


# --- fingerprints and survey rows --------------------------------------------------------

@dataclass(frozen=True)
class Fingerprint:
    order: int
    exponent: int
    class_sizes: tuple
    order_histogram: tuple
    flags: tuple


def fingerprint(report, table):
    hist = Counter()
    for o, s in zip(table.orders, table.sizes):
        hist[o] += s
    return Fingerprint(
        order=report.order,
        exponent=report.exponent,
        class_sizes=tuple(sorted(table.sizes)),
        order_histogram=tuple(sorted(hist.items())),
        flags=(report.rational, report.cut, report.semirational, report.usr, report.quadratic_rational),
    )


@dataclass
class SurveyRow:
    spec: object
    fingerprint: Fingerprint
    verdicts: dict
    usr_m_set: object
    notes: list = field(default_factory=list)


# --- golden data ------------------------------------------------------------------------

def golden():
    with resources.files("cutgroups").joinpath("data/golden.json").open() as fh:
        return json.load(fh)


# --- metacyclic survey -----------------------------------------------------------------

METACYCLIC_N = tuple(n for n in range(1, 43) if len([j for j in range(1, n + 1) if math.gcd(j, n) == 1])
                     in (1, 2, 4, 6, 8, 12))
METACYCLIC_T = (2, 3, 4, 6)


def metacyclic_parameters():
    """All valid non-abelian (n, t, l, r) in the bounded search space."""
    for n in METACYCLIC_N:
        for t in METACYCLIC_T:
            for r in range(2, n):
                if pow(r, t, n) != 1:
                    continue
                for l in range(1, n + 1):
                    if n % l == 0 and (l * (r - 1)) % n == 0:
                        yield (n, t, l, r)


def _m_in_set(m, n, usr_set):
    if m % usr_set.modulus in usr_set:
        return True
    return any((x - m) % n == 0 for x in usr_set)


@dataclass
class MetacyclicSurvey:
    rows: list                  # deduplicated SR-not-cut rows
    reports: dict               # (n,t,l,r) -> GroupReport for the whole space
    matches: dict               # row index -> reference entry index
    unmatched_rows: list
    unmatched_reference: list
    m_checks: dict              # reference entry index -> bool (m in usr set, or empty as expected)
    collisions: list

    @property
    def ok(self):
        return (len(self.rows) == 18 and not self.unmatched_rows and not self.unmatched_reference
                and all(self.m_checks.values()) and not self.collisions)


def metacyclic_sr_survey(progress=None, dixon_prime=None):
    from .classify import classify

    reports = {}
    fps = {}
    rows = []
    seen = {}
    collisions = []
    for params in metacyclic_parameters():
        g = engine.realize(engine.Metacyclic(*params))
        rep = classify(g, spec_text="metacyclic({},{},{},{})".format(*params), dixon_prime=dixon_prime)
        rep.character_table = None
        reports[params] = rep
        if progress:
            progress(params, rep)
        if not rep.semirational or rep.cut:
            continue
        fp = fingerprint(rep, g.classes)
        fps[params] = fp
        if fp in seen:
            continue
        seen[fp] = len(rows)
        rows.append(SurveyRow(
            spec=engine.Metacyclic(*params),
            fingerprint=fp,
            verdicts={"semirational": True, "cut": False, "usr": rep.usr,
                      "quadratic_rational": rep.quadratic_rational, "qsr": rep.qsr},
            usr_m_set=rep.usr_m_set,
        ))

    reference = golden()["metacyclic_sr"]
    ref_fps = []
    ref_reports = []
    for entry in reference:
        params = (entry["n"], entry["t"], entry["l"], entry["r"])
        rep = reports.get(params)
        g = engine.realize(engine.Metacyclic(*params))
        if rep is None:
            rep = classify(g)
        ref_reports.append(rep)
        ref_fps.append(fingerprint(rep, g.classes))
    if len(set(ref_fps)) != len(ref_fps):
        collisions.append("reference presentations share a fingerprint")

    matches = {}
    unmatched_rows = []
    for i, row in enumerate(rows):
        hits = [j for j, fp in enumerate(ref_fps) if fp == row.fingerprint]
        if len(hits) == 1:
            matches[i] = hits[0]
        else:
            unmatched_rows.append(i)
    unmatched_reference = [j for j in range(len(reference)) if j not in matches.values()]

    m_checks = {}
    for j, entry in enumerate(reference):
        rep = ref_reports[j]
        if entry["m"] is None:
            m_checks[j] = not rep.usr
        else:
            m_checks[j] = _m_in_set(entry["m"], entry["n"], rep.usr_m_set)
    for row_idx, j in matches.items():
        rows[row_idx].notes.append(f"matches reference entry {j + 1}")
    return MetacyclicSurvey(rows, reports, matches, unmatched_rows, unmatched_reference, m_checks, collisions)


# --- alternating survey ------------------------------------------------------------------

@dataclass(frozen=True)
class AlternatingRow:
    n: int
    cut: bool
    usr: bool


def alternating_survey(max_n=symfast.MAX_N):
    from .classify import classify

    if not 1 <= max_n <= symfast.MAX_N:
        raise NOutOfRange(f"max_n={max_n} outside 1..{symfast.MAX_N}")
    rows = []
    for n in range(1, max_n + 1):
        rep = classify(symfast.alt_class_table(n), with_characters=False)
        rows.append(AlternatingRow(n, rep.cut, rep.usr))
    return rows


# --- Sylow heritage ----------------------------------------------------------------------

@dataclass(frozen=True)
class SylowRecord:
    p: int
    order: int
    cut: bool
    abelian: bool
    normal: bool
    odd_order: bool
    symmetric: bool

    @property
    def hypotheses(self):
        names = [("abelian Sylow", self.abelian), ("normal Sylow", self.normal),
                 ("odd order", self.odd_order), ("symmetric group", self.symmetric)]
        return [name for name, held in names if held]


def sylow_heritage(g, report):
    from .classify import classify

    if not report.cut:
        raise NotApplicable("Sylow heritage is stated for cut groups only")
    out = []
    spec = g.spec
    symmetric = isinstance(spec, engine.Named) and spec.identifier.startswith("Sym(")
    for p in (2, 3):
        if g.order % p:
            continue
        sub = engine.sylow_p_subgroup(g, p)
        pg = engine.subgroup_as_group(sub, label=f"Sylow{p}")
        rep = classify(pg, with_characters=False)
        out.append(SylowRecord(
            p=p,
            order=pg.order,
            cut=rep.cut,
            abelian=pg.is_abelian,
            normal=sub.is_normal(),
            odd_order=g.order % 2 == 1,
            symmetric=symmetric,
        ))
    return out
