#!/usr/bin/env python3
"""Walk-on-spheres convergence against the exact harmonic measure.

Runs one fixed query at increasing walk counts and reports the error in
standard-error units; the column should hover around O(1) at every N.

Usage:
    python scripts/wos_convergence.py [--p P] [--seed S]
"""

import argparse

from polebounds import hm_omega1, wos_harmonic_measure


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=float, default=0.5)
    ap.add_argument("--seed", type=int, default=1729)
    args = ap.parse_args()

    z, a, b = 2j, 1.0, 4.0
    exact = hm_omega1(z, a, b, args.p)
    print(f"exact = {exact:.8f}   (z = {z}, segment [{a}, {b}], p = {args.p})")
    print(f"{'N':>9} {'estimate':>12} {'stderr':>10} {'sigmas':>8} {'capped':>7}")
    for n in (1_000, 10_000, 100_000, 1_000_000):
        est = wos_harmonic_measure(z, a, b, args.p, n_walks=n, seed=args.seed)
        sig = abs(est.mean - exact) / est.stderr if est.stderr else float("inf")
        print(f"{n:>9} {est.mean:>12.6f} {est.stderr:>10.2e} {sig:>8.2f} {est.n_capped:>7}")


if __name__ == "__main__":
    main()
