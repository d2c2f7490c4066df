"""Time the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, time
import numpy as np
from cutgroups import kernels, engine, chartable
from cutgroups.named import expand

def best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)

repeat = {repeat}
out = {{"backend": kernels.BACKEND}}
specs = {{"Sym(6)": expand("Sym(6)"), "G1xD10": engine.DirectProduct((engine.Named("G1"), engine.Named("D10")))}}
for name, spec in specs.items():
    def full():
        g = engine.realize(spec)
        g.classes
        return g
    out[name + ":classes"] = best(full, repeat)
g = engine.realize(expand("Alt(7)"))
g.classes
out["Alt(7):dixon"] = best(lambda: chartable.dixon_table(g), repeat)
rng = np.random.default_rng(1)
a = rng.integers(0, 10007, size=(120, 160)).astype(np.int64)
out["rref 120x160"] = best(lambda: kernels.rref_mod_p(a.copy(), 10007), repeat)
print(json.dumps(out))
"""


def run(pure, repeat):
    env = dict(os.environ)
    if pure:
        env["CUTGROUPS_PURE"] = "1"
    else:
        env.pop("CUTGROUPS_PURE", None)
    res = subprocess.run([sys.executable, "-c", WORKLOAD.format(repeat=repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast = run(False, args.repeat)
    slow = run(True, args.repeat)
    print(f"compiled backend: {fast.pop('backend')}, fallback: {slow.pop('backend')}")
    print(f"{'workload':<20} {'compiled s':>11} {'python s':>10} {'speedup':>8}")
    for key in fast:
        print(f"{key:<20} {fast[key]:>11.4f} {slow[key]:>10.4f} {slow[key] / fast[key]:>7.1f}x")


if __name__ == "__main__":
    main()
