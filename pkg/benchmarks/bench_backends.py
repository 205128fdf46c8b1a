"""Benchmark the numba kernels against the scipy fallback.

Each workload runs in a fresh subprocess so the backend is fixed at import
time by ADIABATIC_LAB_NO_NUMBA; the numba timing excludes JIT warmup (one
throwaway call before the clock starts).

Usage: python benchmarks/bench_backends.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "ground_pair sweep (n=2000, 60 points)": """
from adiabatic_lab.model import ModelParams, build_hs
from adiabatic_lab.eigensolver import ground_pair
import numpy as np
def run():
    for s in np.linspace(0.25, 0.40, 60):
        ground_pair(build_hs(ModelParams(2000, 5.0, float(s))))
""",
    "min_gap (n=1000, alpha=alpha_c)": """
from adiabatic_lab.spectral import min_gap
import math
def run():
    min_gap(1000, 3.0 * math.sqrt(3.0) / 2.0)
""",
    "eigen_all (n=1500)": """
from adiabatic_lab.model import ModelParams, build_hs
from adiabatic_lab.eigensolver import eigen_all
def run():
    eigen_all(build_hs(ModelParams(1500, 2.0, 0.4)))
""",
    "evolve (n=64, T=50, 20k steps)": """
from adiabatic_lab.dynamics import evolve
def run():
    evolve(64, 2.0, 50.0, steps=20000)
""",
}

DRIVER = """
import json, time, sys
{setup}
run()  # warmup (JIT compile on the numba path)
times = []
for _ in range({repeat}):
    t0 = time.perf_counter()
    run()
    times.append(time.perf_counter() - t0)
print(json.dumps(min(times)))
"""


def time_workload(setup: str, repeat: int, no_numba: bool) -> float:
    env = dict(os.environ)
    env["ADIABATIC_LAB_NO_NUMBA"] = "1" if no_numba else "0"
    code = DRIVER.format(setup=setup, repeat=repeat)
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    if out.returncode != 0:
        raise RuntimeError(out.stderr)
    return float(json.loads(out.stdout.strip().splitlines()[-1]))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    name_w = max(len(k) for k in WORKLOADS)
    print(f"{'workload':<{name_w}}  {'numba':>9}  {'fallback':>9}  ratio")
    for name, setup in WORKLOADS.items():
        t_numba = time_workload(setup, args.repeat, no_numba=False)
        t_fallback = time_workload(setup, args.repeat, no_numba=True)
        ratio = t_fallback / t_numba
        print(f"{name:<{name_w}}  {t_numba:>8.3f}s  {t_fallback:>8.3f}s  {ratio:5.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
