"""Reduce the bundled 20x20 heterogeneous matrix with cubify and with LLL.

The input mixes unit rows with a dense high-valued row and column, which is
the worst case for plain size reduction: norms shrink fast but the metric
stays full of large off-diagonal entries.

Run:  python demos/heterogeneous_20x20.py
"""

import time
from pathlib import Path

from cubify import (classify, cubify, lattice_equal, lll_reduce, metric_tensor,
                    norm_sum, rhombicity)
from cubify.cli import load_matrix

path = Path(__file__).resolve().parent.parent / "data" / "heterogeneous_20x20.txt"
basis = load_matrix(str(path))

m = metric_tensor(basis)
print("input:   R %d, S %d, class %s" % (
    rhombicity(m), norm_sum(m), classify(basis).value))

t0 = time.perf_counter()
out, report = cubify(basis)
dt = time.perf_counter() - t0
print("cubify:  R %d, S %d  (%d cycles, pre-pass %s, %.2fs)" % (
    report.r_out, report.s_out, report.cycles,
    "on" if report.pre_pass_applied else "off", dt))

t0 = time.perf_counter()
lll = lll_reduce(basis)
dt = time.perf_counter() - t0
ml = metric_tensor(lll)
print("lll 3/4: R %d, S %d  (%.2fs)" % (rhombicity(ml), norm_sum(ml), dt))

# both outputs generate the original lattice
for name, b in (("cubify", out), ("lll", lll)):
    ok, _ = lattice_equal(basis, b)
    print("%s lattice check: %s" % (name, "ok" if ok else "FAILED"))

print()
print("largest |entry| in: %d  out: %d" % (
    max(abs(x) for row in basis for x in row),
    max(abs(x) for row in out for x in row)))
