"""Mean reduction factors over seeded 10x10 batteries, cubify vs LLL.

Each battery draws 50 matrices from one generator family and reports the mean
of the per-matrix R and S improvement factors (input over output, computed as
exact rationals before the final float).  Full matrices have every entry
uniform in [0, 100]; columnar matrices are the identity with a random last
column, a shape whose lattice hides a much shorter basis.

Run:  python demos/random_batteries.py
"""

import time

from cubify import GeneratorSpec, run_battery

for family in ("full", "columnar"):
    spec = GeneratorSpec(family=family, dim=10, seed=1)
    t0 = time.perf_counter()
    result = run_battery(spec, 50)
    dt = time.perf_counter() - t0

    print("%s 10x10, 50 matrices, %.1fs" % (family, dt))
    for alg in ("cubify", "lll"):
        print("  %-7s mean R factor %8.2f   mean S factor %8.2f" % (
            alg, result.mean_r_factor(alg), result.mean_s_factor(alg)))
    for flag in result.flags:
        print("  flag:", flag)
    print()
