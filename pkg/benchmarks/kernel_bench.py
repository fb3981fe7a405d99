"""Timing comparison of the compiled and pure-numpy kernel backends.

Runs the same seeded workloads through both backends, checks the outputs
are bit-identical, and prints a per-kernel timing table. A full optimization
run is then timed per backend in a subprocess (the backend choice is an
import-time switch), and the exported fronts are compared byte-for-byte.
Usage:

    python3 benchmarks/kernel_bench.py [--pop 200] [--gens 100] [--repeat 5]

The compiled backend pays its JIT cost on first call; warm-up passes run
before timing so the table reflects steady-state throughput.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import subprocess
import sys
import time

import numpy as np

from emoadvisor.benchmark import build_params, build_schema
from emoadvisor.kernels import load_backend

_RUN_SNIPPET = """
import hashlib, json, sys, time
from emoadvisor.benchmark import make_benchmark_instance
from emoadvisor.kernels import ACTIVE_BACKEND
from emoadvisor.nsga2 import NsgaParams, front_csv_text, run_nsga2

pop, gens = int(sys.argv[1]), int(sys.argv[2])
instance = make_benchmark_instance(seed=0)
run_nsga2(instance, NsgaParams(population_size=pop, generations=2, seed=0))  # warm-up
started = time.perf_counter()
result = run_nsga2(instance, NsgaParams(population_size=pop, generations=gens, seed=0))
elapsed = time.perf_counter() - started
digest = hashlib.sha256(front_csv_text(result).encode()).hexdigest()
print(json.dumps({"backend": ACTIVE_BACKEND, "seconds": elapsed, "sha256": digest}))
"""


def _workloads(rng: np.random.Generator, pop: int):
    par = build_params()
    schema = build_schema()
    lo, hi = schema.lower, schema.upper
    X = lo + rng.random((pop, 50)) * (hi - lo)
    eval_args = (
        X,
        par.role,
        par.t_at_upper,
        par.lo,
        par.hi,
        par.cost_lin,
        par.cost_quad,
        par.beta,
        par.eps,
        par.hinge_c,
        par.imp_w,
        par.comp_id,
        par.comp_base,
        par.impact_base,
    )
    F = rng.random((pop, 2)) * [40.0, 0.9] + [200.0, 0.115]
    half = pop // 2
    pair_coin = rng.random(half)
    var_coin = rng.random((half, 50))
    u_cx = rng.random((half, 50))
    swap_coin = rng.random((half, 50))
    m_coin = rng.random((pop, 50))
    u_mut = rng.random((pop, 50))
    staircase = F[np.argsort(F[:, 0])].copy()
    staircase[:, 1] = np.sort(staircase[:, 1])[::-1]
    return {
        "eval_population": lambda k: k.eval_population(*eval_args),
        "nondominated_ranks": lambda k: k.nondominated_ranks(F),
        "crowding_front": lambda k: k.crowding_front(staircase),
        "sbx_pairs": lambda k: k.sbx_pairs(
            X[0::2], X[1::2], pair_coin, var_coin, u_cx, swap_coin, lo, hi, 0.9, 15.0
        ),
        "polynomial_mutation": lambda k: k.polynomial_mutation(
            X, m_coin, u_mut, lo, hi, 0.02, 20.0
        ),
        "hypervolume_2d": lambda k: k.hypervolume_2d(
            staircase, np.array([260.0, 1.2])
        ),
    }


def _time(fn, backend, repeat: int) -> float:
    fn(backend)  # warm-up (JIT compile / cache fill)
    best = float("inf")
    for _ in range(repeat):
        started = time.perf_counter()
        fn(backend)
        best = min(best, time.perf_counter() - started)
    return best


def _as_tuple(value):
    return value if isinstance(value, tuple) else (value,)


def _timed_run(backend: str, pop: int, gens: int) -> dict:
    proc = subprocess.run(
        [sys.executable, "-c", _RUN_SNIPPET, str(pop), str(gens)],
        env={"EMOADVISOR_KERNELS": backend, "PATH": "/usr/bin:/bin"},
        capture_output=True,
        text=True,
        check=True,
    )
    report = json.loads(proc.stdout)
    if report["backend"] != backend:
        raise SystemExit(f"subprocess loaded {report['backend']}, wanted {backend}")
    return report


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--pop", type=int, default=200, help="kernel workload rows")
    parser.add_argument("--gens", type=int, default=100, help="full-run generations")
    parser.add_argument("--repeat", type=int, default=5, help="timing repetitions")
    args = parser.parse_args()

    numpy_backend = load_backend("numpy")
    try:
        numba_backend = load_backend("numba")
    except (ImportError, ValueError) as exc:
        raise SystemExit(f"compiled backend unavailable: {exc}")

    workloads = _workloads(np.random.default_rng(0), args.pop)

    print(f"kernel timings, best of {args.repeat} (rows={args.pop})")
    print(f"{'kernel':<22} {'numba':>10} {'numpy':>10} {'speedup':>8}  identical")
    for name, fn in workloads.items():
        fast = _time(fn, numba_backend, args.repeat)
        slow = _time(fn, numpy_backend, args.repeat)
        same = all(
            np.array_equal(a, b)
            for a, b in zip(_as_tuple(fn(numba_backend)), _as_tuple(fn(numpy_backend)))
        )
        print(
            f"{name:<22} {fast * 1e3:>8.2f}ms {slow * 1e3:>8.2f}ms "
            f"{slow / fast:>7.1f}x  {same}"
        )

    fast_run = _timed_run("numba", args.pop, args.gens)
    slow_run = _timed_run("numpy", args.pop, args.gens)
    print(
        f"\nfull run (pop={args.pop}, gens={args.gens}): "
        f"numba {fast_run['seconds']:.2f}s, numpy {slow_run['seconds']:.2f}s "
        f"({slow_run['seconds'] / fast_run['seconds']:.1f}x); "
        f"front exports identical: {fast_run['sha256'] == slow_run['sha256']}"
    )


if __name__ == "__main__":
    main()
