"""Compare the compiled and pure-Python Z[t] kernels.

Each implementation runs in its own interpreter (the kernel is chosen at
import time), completing strong bases and saturations for a fixed set of
random diagrams.

    python3 benchmarks/bench_kernel.py [--diagrams 40] [--crossings 12] [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, random, sys, time
from perimod import alexmod, groebner, kernel
from perimod.diagram import random_diagram

n, maxc, repeat, seed = map(int, sys.argv[1:5])
rng = random.Random(seed)
systems = []
for _ in range(n):
    d = random_diagram(rng, maxc, 3, min_crossings=maxc // 2)
    rb = alexmod.presentation(d)
    systems.append((rb.dense_rows(), rb.ngens))
best = None
for _ in range(repeat):
    t0 = time.perf_counter()
    for rows, ngens in systems:
        groebner.strong_basis(rows, ngens, cofactors=True)
        groebner.saturate(rows, ngens)
    dt = time.perf_counter() - t0
    best = dt if best is None else min(best, dt)
print(json.dumps({"implementation": kernel.IMPLEMENTATION, "seconds": best}))
"""


def run(pure: bool, args) -> dict:
    env = dict(os.environ)
    env.pop("PERIMOD_PURE_PYTHON", None)
    if pure:
        env["PERIMOD_PURE_PYTHON"] = "1"
    out = subprocess.run(
        [sys.executable, "-c", WORKER, str(args.diagrams), str(args.crossings), str(args.repeat), str(args.seed)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(out.stdout)


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--diagrams", type=int, default=40)
    p.add_argument("--crossings", type=int, default=12)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=2024)
    args = p.parse_args()
    compiled = run(False, args)
    pure = run(True, args)
    print(f"{pure['implementation']:>8}: {pure['seconds']:.3f} s")
    print(f"{compiled['implementation']:>8}: {compiled['seconds']:.3f} s")
    if compiled["implementation"] == "python":
        print("compiled kernel not built; both runs used the fallback")
    else:
        print(f" speedup: {pure['seconds'] / compiled['seconds']:.2f}x")


if __name__ == "__main__":
    main()
