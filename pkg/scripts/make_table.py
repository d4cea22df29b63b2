#!/usr/bin/env python3
"""Regenerate the four-bound comparison table and show minimizer diagnostics.

Usage:
    python scripts/make_table.py [p ...]
"""

import sys

from polebounds import DEFAULT_TABLE_P, minimize_over_q, table_rows
from polebounds.bounds import ANGLE_BOUND_MIN_P, round_half_up


def main(argv):
    p_list = [float(a) for a in argv] or list(DEFAULT_TABLE_P)
    rows = table_rows(p_list)
    print(f"{'p':>7} {'lower':>10} {'angle_min':>12} {'closed_form':>12} {'measure_min':>12} {'q* (measure)':>14}")
    for row in rows:
        q_star = minimize_over_q(row.p, "measure").q_star
        angle = "---" if row.angle_min is None else f"{round_half_up(row.angle_min):.3f}"
        print(
            f"{row.p:>7g} {round_half_up(row.lower):>10.3f} {angle:>12} "
            f"{round_half_up(row.closed_form):>12.3f} {round_half_up(row.measure_min):>12.3f} "
            f"{q_star:>14.5f}"
        )
    print(f"\nangle bound defined for p > sqrt(2)-1 = {ANGLE_BOUND_MIN_P:.6f}")


if __name__ == "__main__":
    main(sys.argv[1:])
