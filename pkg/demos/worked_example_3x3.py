"""Walk the 3x3 example through each reduction stage.

Run:  python demos/worked_example_3x3.py
"""

from cubify import (Basis, cubify, det, directional_reduction, hyperplanar_pass,
                    lagrange_division, lattice_equal, metric_tensor, norm_sum,
                    rhombicity, simplification)

B = Basis([[1, 1, 1],
           [-1, 0, 2],
           [3, 5, 6]])


def show(label, basis):
    m = metric_tensor(basis)
    print("%-24s R %4d  S %4d   rows %s" % (
        label, rhombicity(m), norm_sum(m), list(basis)))


show("input", B)

# Stage by stage.  Each call is independent (they all start from B), so the
# intermediate qualities are directly comparable.
show("lagrange division", lagrange_division(B))
show("+ simplification", directional_reduction(B))
show("hyperplanar pass", hyperplanar_pass(B))

# The full driver picks options from the matrix class and cycles the stages
# until the rhombicity stops improving.
out, report = cubify(B)
show("cubify (auto)", out)
print()
print("classified as %s, method %d, %d cycles" % (
    report.matrix_class.value, report.options.method, report.cycles))
print("rhombicity per cycle:", report.r_history)

# The report carries the row transform: transform . B == output, |det| = 1.
print("transform rows:", list(report.transform),
      " det", det(report.transform))
ok, z = lattice_equal(B, out)
print("same lattice:", ok)
