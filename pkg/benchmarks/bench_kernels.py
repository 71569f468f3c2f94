#!/usr/bin/env python3
"""Benchmark the table-scan kernels: pure Python versus the compiled twin.

Workloads are the hot paths from real corpus traffic: the full axiom gate
and unit/radical scans on the order-81 matrix ring, and the decomposition
search over every element of the order-16 and order-81 matrix rings.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import sys
import time
from array import array
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import ringlab as rl
from ringlab.kernels import backends


def best_of(repeat, fn, *args):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def decomposition_sweep(impl, s):
    ring = s.ring
    nil = rl.nilpotents(ring)
    projs = array("i", rl.projections(s))
    unit_list = array("i", sorted(rl.units(ring)))
    hits = 0
    for a in ring.elements():
        commuting = array("i", (b for b in nil if ring.mul(a, b) == ring.mul(b, a)))
        if impl.decomposition_witness(
            ring.order, ring.add_flat, ring.mul_flat, ring.neg_flat,
            a, commuting, projs, unit_list,
        ):
            hits += 1
    return hits


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    impls = backends()
    if "compiled" not in impls:
        print("note: compiled kernels are not built; timing the pure backend only.")
        print("      build them with `python setup.py build_ext --inplace`.")

    m81 = rl.matrix_ring(rl.zn(3), 2)
    s81 = rl.star_ring(m81, "transpose")
    s16 = rl.star_ring(rl.matrix_ring(rl.zn(2), 2), "transpose")
    mask81 = bytearray(m81.order)
    for a in rl.units(m81):
        mask81[a] = 1

    workloads = [
        (
            "axiom gate, order 81",
            lambda impl: impl.ring_axiom_witness(
                m81.order, m81.add_flat, m81.mul_flat, m81.zero, m81.one
            ),
        ),
        (
            "inverse scan, order 81",
            lambda impl: impl.inverse_table(m81.order, m81.mul_flat, m81.one),
        ),
        (
            "radical scan, order 81",
            lambda impl: impl.radical_members(
                m81.order, m81.add_flat, m81.mul_flat, m81.neg_flat, m81.one, mask81
            ),
        ),
        (
            "decomposition sweep, order 16",
            lambda impl: decomposition_sweep(impl, s16),
        ),
        (
            "decomposition sweep, order 81",
            lambda impl: decomposition_sweep(impl, s81),
        ),
    ]

    header = f"{'workload':<32}{'pure [ms]':>12}"
    if "compiled" in impls:
        header += f"{'compiled [ms]':>16}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, runner in workloads:
        pure_t, pure_result = best_of(args.repeat, runner, impls["pure"])
        line = f"{name:<32}{pure_t * 1e3:>12.2f}"
        if "compiled" in impls:
            fast_t, fast_result = best_of(args.repeat, runner, impls["compiled"])
            if pure_result != fast_result:
                print(f"backend disagreement on {name}!", file=sys.stderr)
                return 1
            line += f"{fast_t * 1e3:>16.2f}{pure_t / fast_t:>9.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
