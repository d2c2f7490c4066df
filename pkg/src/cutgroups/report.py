"""JSON report documents with a fixed key order."""

from __future__ import annotations

import json
from importlib import resources

from . import surveys
from .classify import GroupReport

# Residue lists longer than this serialize as null; the count is always given.
RESIDUE_LIMIT = 4096


def _validators(rep: GroupReport):
    out = [{"check": "spectrum", "ok": not rep.validators, "detail": "; ".join(rep.validators) or None}]
    if rep.cut_by_characters is not None:
        agree = rep.cut == rep.cut_by_characters == (rep.rho == 0)
        out.append({"check": "cut_criteria_agree", "ok": agree, "detail": None})
    c = rep.counts
    if c is not None:
        out.append({"check": "real_counts_equal", "ok": c.real_chars == c.real_classes, "detail": None})
        # equalities are only claimed for cut and QSR groups; abelian groups get them by duality
        if rep.cut or rep.qsr or rep.abelian:
            quadratic_eq = c.quadratic_chars == c.quadratic_classes
            detail = None
            if rep.abelian and rep.exponent % 24 == 0 and quadratic_eq:
                # a published remark says these differ for C24; duality says otherwise
                detail = f"quadratic counts equal ({c.quadratic_chars} = {c.quadratic_classes}) contrary to published remark"
            out.append({"check": "rational_counts_equal",
                        "ok": c.rational_chars == c.rational_classes, "detail": None})
            out.append({"check": "quadratic_counts_equal", "ok": quadratic_eq, "detail": detail})
    if rep.group_field_degree is not None and (rep.semirational or rep.quadratic_rational):
        bound = 2 ** (len(rep.primes) + 1)
        out.append({"check": "tent_bound", "ok": rep.group_field_degree <= bound,
                    "detail": f"degree {rep.group_field_degree} <= {bound}"})
    return out


def report_document(rep: GroupReport, *, spec_text=None, timings=None):
    """Build the JSON-ready dict for a report; key order is part of the format."""
    usr = rep.usr_m_set
    gk = rep.gk_graph
    counts = None
    if rep.counts is not None:
        c = rep.counts
        counts = {
            "real_chars": c.real_chars,
            "real_classes": c.real_classes,
            "rational_chars": c.rational_chars,
            "rational_classes": c.rational_classes,
            "quadratic_chars": c.quadratic_chars,
            "quadratic_classes": c.quadratic_classes,
        }
    return {
        "spec": spec_text if spec_text is not None else rep.spec,
        "order": int(rep.order),
        "exponent": int(rep.exponent),
        "primes": [int(p) for p in rep.primes],
        "flags": {
            "rational": rep.rational,
            "cut": rep.cut,
            "semirational": rep.semirational,
            "usr": rep.usr,
            "quadratic_rational": rep.quadratic_rational,
            "qsr": rep.qsr,
        },
        "usr_m_set": {
            "modulus": usr.modulus,
            "count": len(usr),
            "residues": usr.as_list(limit=RESIDUE_LIMIT),
        },
        "rho": int(rep.rho),
        "central_height": int(rep.central_height),
        "q_star": rep.q_star,
        "group_field": {
            "degree": rep.group_field_degree,
            "quadratic_d": rep.group_field_d,
        },
        "counts": counts,
        "gk_graph": {
            "vertices": list(gk.vertices),
            "edges": [list(e) for e in gk.edges],
            "figure1_label": surveys.figure1_lookup(gk) if rep.cut and rep.solvable else None,
        },
        "validators": _validators(rep),
        "timings": timings,
    }


def dumps(doc):
    return json.dumps(doc, ensure_ascii=False, separators=(",", ":"))


def load_schema():
    text = resources.files("cutgroups").joinpath("data/report.schema.json").read_text()
    return json.loads(text)


def _virtual_target(spec):
    """Sym(n)/Alt(n) beyond realized degrees map to a class-level table."""
    from . import named, symfast
    from .engine import Named

    if not isinstance(spec, Named):
        return None
    kind, n = named.parse_identifier(spec.identifier)
    if kind not in ("Sym", "Alt") or n <= named.MAX_REALIZED_DEGREE:
        return None
    return symfast.VirtualClassTable(n, alternating=kind == "Alt")


def analyze(spec, *, cap=None, dixon_prime=None, timings=False):
    """Parse (if needed), realize and classify; returns a ReportDocument dict."""
    import time

    from . import dsl, engine
    from .classify import classify

    t0 = time.perf_counter_ns()
    if isinstance(spec, str):
        spec = dsl.parse_spec(spec)
    text = dsl.render(spec)
    cap = engine.DEFAULT_CAP if cap is None else cap
    virtual = _virtual_target(spec)
    t1 = time.perf_counter_ns()
    if virtual is not None:
        rep = classify(virtual, spec_text=text, dixon_prime=dixon_prime)
    else:
        g = engine.realize(spec, cap=cap)
        rep = classify(g, spec_text=text, dixon_prime=dixon_prime)
    t2 = time.perf_counter_ns()
    stamp = None
    if timings:
        stamp = {"parse_us": (t1 - t0) // 1000, "analyze_us": (t2 - t1) // 1000}
    return report_document(rep, spec_text=text, timings=stamp)
