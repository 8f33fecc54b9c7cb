"""Compare the compiled search kernels with the pure-Python fallback.

Each backend runs in its own interpreter because the choice is made at
import time. Usage: ``python3 benchmarks/bench_kernels.py [--repeat N]``.
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "colourings icosahedron": "sum(1 for _ in enumerate_factorisations(load('icosahedron').graph).raw())",
    "colourings dodecahedron": "sum(1 for _ in enumerate_factorisations(load('dodecahedron').graph).raw())",
    "hamiltonian cycles icosahedron": "count_hamiltonian_cycles(load('icosahedron').graph)",
    "hamiltonian cycles 20-vertex quintic": "count_hamiltonian_cycles(load('kotzig20_k10').graph)",
    "hamiltonian cycles grinberg44": "count_hamiltonian_cycles(load('grinberg44').graph)",
    "2-factors icosahedron": "sum(1 for _ in two_factors(load('icosahedron').graph, None))",
}

CHILD = """
import json, sys, time
from perfham import BACKEND, count_hamiltonian_cycles, enumerate_factorisations, two_factors
from perfham.corpus import load
expr, repeat = sys.argv[1], int(sys.argv[2])
best = float("inf")
for _ in range(repeat):
    t = time.perf_counter()
    result = eval(expr)
    best = min(best, time.perf_counter() - t)
print(json.dumps({"backend": BACKEND, "seconds": best, "result": result}))
"""


def run(expr: str, pure: bool, repeat: int) -> dict:
    env = dict(os.environ, PERFHAM_PURE="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", CHILD, expr, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'workload':38} {'compiled':>10} {'python':>10} {'speedup':>8}")
    for name, expr in WORKLOADS.items():
        fast = run(expr, False, args.repeat)
        slow = run(expr, True, args.repeat)
        if fast["result"] != slow["result"]:
            sys.exit(f"{name}: backends disagree ({fast['result']} vs {slow['result']})")
        if fast["backend"] != "compiled":
            print("compiled kernels unavailable; both columns use the Python backend")
        ratio = slow["seconds"] / fast["seconds"] if fast["seconds"] else float("nan")
        print(f"{name:38} {fast['seconds']:10.4f} {slow['seconds']:10.4f} {ratio:7.1f}x")


if __name__ == "__main__":
    main()
