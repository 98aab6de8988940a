"""Mini scaling sweep: wall time against m * log2(n) on a sparse family.

On stars overlaid with a forest (arboricity 2), the randomized colorer
runs in about m * log(n) time even though the max degree is enormous;
the printed ratio staying flat is the point.  Sizes are kept small so
this finishes in a few seconds; bump MAX_EXP for a longer look.  Run it:

    python3 demos/scaling_sweep.py
"""

import math
import statistics

from edgecolor import GenSpec, generate, run_coloring

MIN_EXP = 10
MAX_EXP = 14
REPS = 3


def main():
    print(f"{'n':>7} {'m':>7} {'max deg':>8} {'median ms':>10} {'ms / (m log2 n)':>16}")
    ratios = []
    for exp in range(MIN_EXP, MAX_EXP + 1):
        n = 2**exp
        g = generate(GenSpec(family="star-plus-forests", n=n, alpha=2, seed=n))
        wall_us = statistics.median(
            run_coloring(g, "color-edges", seed=1).wall_us for _ in range(REPS)
        )
        ratio = wall_us / 1000 / (g.m * math.log2(n))
        ratios.append(ratio)
        print(f"{n:>7} {g.m:>7} {g.max_degree:>8} {wall_us / 1000:>10.1f} {ratio:>16.6f}")
    print(f"\nratio spread: {max(ratios) / min(ratios):.2f}x across a {2**(MAX_EXP-MIN_EXP)}x size range")


if __name__ == "__main__":
    main()
