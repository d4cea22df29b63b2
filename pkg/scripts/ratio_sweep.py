#!/usr/bin/env python3
"""Sweep the measured length ratio against the minimized bound for both families.

The Joukowski-type family attains the lower bound exactly, so its margin column
doubles as a sanity check of the quadrature.

Usage:
    python scripts/ratio_sweep.py [n_points]
"""

import sys

import numpy as np

from polebounds import koebe_family, lower_bound, mobius_family, verify_inequality


def main(argv):
    n = int(argv[0]) if argv else 17
    print(f"{'p':>6} {'family':>8} {'ratio':>12} {'bound':>12} {'margin':>10} {'lb gap':>10}")
    for p in np.linspace(0.05, 0.95, n):
        p = float(p)
        for fam in (mobius_family, koebe_family):
            rep = verify_inequality(fam(p), p)
            margin = rep.bound.value / rep.ratio
            lb_gap = rep.ratio - lower_bound(p)
            print(
                f"{p:>6.3f} {rep.function_id:>8} {rep.ratio:>12.6f} "
                f"{rep.bound.value:>12.3f} {margin:>10.1f} {lb_gap:>10.2e}"
            )
            assert rep.passed


if __name__ == "__main__":
    main(sys.argv[1:])
