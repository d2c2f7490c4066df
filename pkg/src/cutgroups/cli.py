"""Command-line interface: ``cutgroups analyze|survey|batch``."""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from . import engine, report, surveys, symfast
from .errors import CutGroupsError, InvalidSpec, NOutOfRange, OrderCapExceeded, ParseError

EXIT_OK = 0
EXIT_SPEC = 2
EXIT_CAP = 3
EXIT_GOLDEN = 4
EXIT_IO = 5


def _exit_code(exc):
    if isinstance(exc, OrderCapExceeded):
        return EXIT_CAP
    if isinstance(exc, (ParseError, InvalidSpec, NOutOfRange)):
        return EXIT_SPEC
    return 1


def _error_object(exc):
    err = {"kind": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError):
        err["position"] = exc.position
        err["expected"] = exc.expected
    return {"error": err}


def _flag(v):
    return "n/a" if v is None else ("yes" if v else "no")


def format_table(doc):
    f = doc["flags"]
    usr = doc["usr_m_set"]
    residues = usr["residues"]
    if residues is None:
        shown = f"{usr['count']} residues"
    elif len(residues) > 12:
        shown = ", ".join(map(str, residues[:12])) + f", ... ({usr['count']} total)"
    else:
        shown = ", ".join(map(str, residues)) or "empty"
    gf = doc["group_field"]
    field = "not computed" if gf["degree"] is None else f"degree {gf['degree']}"
    if gf["quadratic_d"] is not None:
        field += f", Q(sqrt({gf['quadratic_d']}))"
    gk = doc["gk_graph"]
    lines = [
        ("spec", doc["spec"]),
        ("order", doc["order"]),
        ("exponent", doc["exponent"]),
        ("primes", " ".join(map(str, doc["primes"])) or "-"),
        ("rational", _flag(f["rational"])),
        ("cut", _flag(f["cut"])),
        ("semi-rational", _flag(f["semirational"])),
        ("uniformly SR", _flag(f["usr"])),
        ("quadratic rational", _flag(f["quadratic_rational"])),
        ("quadratic SR", _flag(f["qsr"])),
        (f"usr m (mod {usr['modulus']})", shown),
        ("rho", doc["rho"]),
        ("central height", doc["central_height"]),
        ("Q*-group", _flag(doc["q_star"])),
        ("group field", field),
        ("GK edges", " ".join(f"{p}-{q}" for p, q in gk["edges"]) or "-"),
        ("figure 1 label", gk["figure1_label"] or "-"),
    ]
    if doc["counts"]:
        c = doc["counts"]
        lines.append(("real chars/classes", f"{c['real_chars']}/{c['real_classes']}"))
        lines.append(("rational chars/classes", f"{c['rational_chars']}/{c['rational_classes']}"))
        lines.append(("quadratic chars/classes", f"{c['quadratic_chars']}/{c['quadratic_classes']}"))
    for v in doc["validators"]:
        if not v["ok"] or v["detail"]:
            lines.append((f"check {v['check']}", ("ok" if v["ok"] else "FAILED") + (f": {v['detail']}" if v["detail"] else "")))
    width = max(len(k) for k, _ in lines)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in lines)


# --- commands -------------------------------------------------------------------

def cmd_analyze(args, out, err):
    try:
        doc = report.analyze(args.spec, cap=args.cap, dixon_prime=args.dixon_prime, timings=args.timings)
    except CutGroupsError as exc:
        print(f"error: {exc}", file=err)
        return _exit_code(exc)
    print(report.dumps(doc) if args.json else format_table(doc), file=out)
    return EXIT_OK


def _survey_metacyclic(args, out, err):
    s = surveys.metacyclic_sr_survey(dixon_prime=args.dixon_prime)
    rows = []
    for i, row in enumerate(s.rows):
        sp = row.spec
        usr = row.usr_m_set
        rows.append({
            "n": sp.n, "t": sp.t, "l": sp.l, "r": sp.r,
            "order": sp.n * sp.t,
            "usr": row.verdicts["usr"],
            "quadratic_rational": row.verdicts["quadratic_rational"],
            "qsr": row.verdicts["qsr"],
            "usr_m_set": {"modulus": usr.modulus, "residues": usr.as_list(limit=report.RESIDUE_LIMIT)},
            "reference_entry": s.matches[i] + 1 if i in s.matches else None,
        })
    mismatch = []
    if args.expect == "paper":
        if len(s.rows) != 18:
            mismatch.append(f"expected 18 rows, found {len(s.rows)}")
        for i in s.unmatched_rows:
            mismatch.append(f"row {i + 1} ({surveys_spec(s.rows[i].spec)}) matches no reference entry")
        for j in s.unmatched_reference:
            mismatch.append(f"reference entry {j + 1} not found")
        for j, ok in sorted(s.m_checks.items()):
            if not ok:
                mismatch.append(f"reference entry {j + 1}: stated m not in the computed set")
        mismatch += s.collisions
    return {"survey": "metacyclic-sr", "rows": rows}, mismatch, _metacyclic_table(rows)


def surveys_spec(sp):
    return f"metacyclic({sp.n},{sp.t},{sp.l},{sp.r})"


def _metacyclic_table(rows):
    out = [f"{'#':>3} {'n':>3} {'t':>2} {'l':>3} {'r':>3} {'|G|':>4}  usr  QR     ref  m (mod n)"]
    for i, r in enumerate(rows, 1):
        res = r["usr_m_set"]["residues"]
        n = r["n"]
        ms = sorted({m % n for m in res}) if res else []
        out.append(f"{i:>3} {r['n']:>3} {r['t']:>2} {r['l']:>3} {r['r']:>3} {r['order']:>4}  "
                   f"{_flag(r['usr']):<4} {_flag(r['quadratic_rational']):<4} "
                   f"{r['reference_entry'] or '-':>5}  {', '.join(map(str, ms)) or '-'}")
    return "\n".join(out)


def _survey_alternating(args, out, err):
    max_n = symfast.MAX_N if args.max is None else args.max
    rows = surveys.alternating_survey(max_n)
    gold = surveys.golden()["alternating"]
    mismatch = []
    if args.expect == "paper":
        want_cut = {n for n in gold["cut"] if n <= max_n}
        want_usr = {n for n in range(1, max_n + 1) if n not in gold["usr_excluded"]}
        got_cut = {r.n for r in rows if r.cut}
        got_usr = {r.n for r in rows if r.usr}
        if got_cut != want_cut:
            mismatch.append(f"cut set {sorted(got_cut)} != {sorted(want_cut)}")
        if got_usr != want_usr:
            mismatch.append(f"USR set differs on {sorted(got_usr ^ want_usr)}")
    data = {"survey": "alternating", "max_n": max_n,
            "rows": [{"n": r.n, "cut": r.cut, "usr": r.usr} for r in rows]}
    table = "\n".join(["  n  cut  usr"] + [f"{r.n:>3}  {_flag(r.cut):<4} {_flag(r.usr)}" for r in rows])
    return data, mismatch, table


def _survey_gk(args, out, err):
    gold = surveys.golden()
    rows = []
    for label, (verts, edges) in surveys.FIGURE1.items():
        rows.append({"label": label, "vertices": list(verts), "edges": [list(e) for e in edges],
                     "realizability_open": label in surveys.REALIZABILITY_OPEN})
    mismatch = []
    if args.expect == "paper":
        if [r["label"] for r in rows] != gold["figure1_labels"]:
            mismatch.append("catalog labels differ from the embedded list")
        if sorted(surveys.REALIZABILITY_OPEN) != gold["figure1_open"]:
            mismatch.append("open-realizability labels differ from the embedded list")
    table = "\n".join(
        f"({r['label']}) {' '.join(map(str, r['vertices'])):<8} "
        f"{' '.join(f'{p}-{q}' for p, q in r['edges']) or '-'}{'  [open]' if r['realizability_open'] else ''}"
        for r in rows)
    return {"survey": "gk-catalog", "rows": rows}, mismatch, table


_SURVEYS = {
    "metacyclic-sr": _survey_metacyclic,
    "alternating": _survey_alternating,
    "gk-catalog": _survey_gk,
}


def cmd_survey(args, out, err):
    try:
        data, mismatch, table = _SURVEYS[args.name](args, out, err)
    except CutGroupsError as exc:
        print(f"error: {exc}", file=err)
        return _exit_code(exc)
    data["matches_reference"] = None if args.expect is None else not mismatch
    print(report.dumps(data) if args.json else table, file=out)
    for line in mismatch:
        print(f"mismatch: {line}", file=err)
    return EXIT_GOLDEN if mismatch else EXIT_OK


def _batch_one(job):
    line, cap, dixon_prime = job
    try:
        return report.dumps(report.analyze(line, cap=cap, dixon_prime=dixon_prime))
    except CutGroupsError as exc:
        return report.dumps(_error_object(exc))


def read_batch_lines(path):
    with open(path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh]
    return [ln for ln in lines if ln and not ln.startswith("#")]


def cmd_batch(args, out, err):
    try:
        lines = read_batch_lines(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_IO
    jobs = [(ln, args.cap, args.dixon_prime) for ln in lines]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_batch_one, jobs))   # map preserves input order
    else:
        results = [_batch_one(j) for j in jobs]
    for r in results:
        print(r, file=out)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="cutgroups", description="Rationality classes of finite groups.")
    p.add_argument("--cap", type=int, default=engine.DEFAULT_CAP, help="largest group order to enumerate")
    p.add_argument("--dixon-prime", type=int, default=None, help="override the character-table prime")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings in JSON reports")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="classify one group")
    a.add_argument("spec")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("survey", help="reproduce a classification table")
    s.add_argument("name", choices=sorted(_SURVEYS))
    s.add_argument("--max", type=int, default=None, help="largest n for the alternating survey")
    s.add_argument("--expect", choices=["paper"], default=None, help="compare against embedded tables")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_survey)

    b = sub.add_parser("batch", help="analyze one spec per line, emit JSON lines")
    b.add_argument("file")
    b.add_argument("--jobs", type=int, default=1)
    b.set_defaults(func=cmd_batch)
    return p


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap < 1:
        print("error: --cap must be positive", file=err)
        return EXIT_SPEC
    return args.func(args, out, err)


if __name__ == "__main__":
    sys.exit(main())
