"""Reduction driver: classify the input, pick options, cycle until stable.

A cycle is either

  method 1:  sort -> directional -> hyperplanar
  method 2:  sort -> hyperplanar -> directional -> hyperplanar

run while the rhombicity strictly decreases; when a cycle brings no strict
decrease the pre-cycle list is returned.  Near-identity matrices with one
heavy column respond best to method 1, matrices dense with large entries to
method 2, and matrices mixing a heavy column with dense heavy rows get one
extra hyperplanar pass (without sublattice reduction) up front.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum

from ._state import BasisState
from .directional import Variant, _lagrange, _simplify
from .exact import Basis, _as_rows, _matmul, det, metric_tensor, norm_sum, rhombicity
from .hyperplanar import _hyperplanar


class MatrixClass(str, Enum):
    SMALL_COLUMNAR = "small_columnar"
    LARGE_COLUMNAR = "large_columnar"
    LARGE_HETEROGENEOUS = "large_heterogeneous"
    RANDOM = "random"


#: dimension at and above which columnar/heterogeneous matrices count as large
LARGE_DIM = 15

#: a line is "dense with high values" when at least half its entries are
#: nonzero and at least a quarter exceed this magnitude
HIGH_VALUE = 100


def _dense_high(line, n):
    nonzero = sum(1 for x in line if x)
    high = sum(1 for x in line if abs(x) > HIGH_VALUE)
    return nonzero >= (n + 1) // 2 and high >= (n + 3) // 4


def classify(b, *, large_dim=LARGE_DIM) -> MatrixClass:
    """Coarse shape of the matrix, used to pick default reduction options.

    Mostly-zero matrices (at least half the entries zero) with a dense
    high-value column are columnar, or heterogeneous when dense high-value
    rows join the column and the dimension is large.  Everything else,
    including uniformly dense matrices, is random.
    """
    rows = _as_rows(b)
    n = len(rows)
    zeros = sum(1 for row in rows for x in row if x == 0)
    if 2 * zeros < n * n:
        return MatrixClass.RANDOM
    col_hit = any(_dense_high([row[c] for row in rows], n) for c in range(n))
    if not col_hit:
        return MatrixClass.RANDOM
    row_hit = any(_dense_high(row, n) for row in rows)
    if n < large_dim:
        return MatrixClass.SMALL_COLUMNAR
    if row_hit:
        return MatrixClass.LARGE_HETEROGENEOUS
    return MatrixClass.LARGE_COLUMNAR


@dataclass(frozen=True)
class CubifyOptions:
    method: int = 1
    lagrange: Variant = Variant.INSERT
    simplification: Variant = Variant.INSERT
    pre_hyperplanar: bool = False
    max_cycles: int = 1000

    def __post_init__(self):
        if self.method not in (1, 2):
            raise ValueError("method must be 1 or 2")
        object.__setattr__(self, "lagrange", Variant(self.lagrange))
        object.__setattr__(self, "simplification", Variant(self.simplification))
        if self.max_cycles < 1:
            raise ValueError("max_cycles must be positive")


#: default option sets per matrix class
AUTO_OPTIONS = {
    MatrixClass.SMALL_COLUMNAR: CubifyOptions(
        method=1, lagrange=Variant.INSERT, simplification=Variant.INSERT),
    MatrixClass.LARGE_COLUMNAR: CubifyOptions(
        method=1, lagrange=Variant.APPEND, simplification=Variant.INSERT),
    MatrixClass.LARGE_HETEROGENEOUS: CubifyOptions(
        method=1, lagrange=Variant.INSERT, simplification=Variant.INSERT,
        pre_hyperplanar=True),
    MatrixClass.RANDOM: CubifyOptions(
        method=2, lagrange=Variant.APPEND, simplification=Variant.APPEND),
}


def default_options(matrix_class) -> CubifyOptions:
    return AUTO_OPTIONS[MatrixClass(matrix_class)]


@dataclass
class ReductionReport:
    r_in: int
    r_out: int
    s_in: int
    s_out: int
    cycles: int
    matrix_class: MatrixClass
    options: CubifyOptions
    auto: bool
    transform: tuple
    timings: dict = field(default_factory=dict)
    r_history: list = field(default_factory=list)
    pre_pass_applied: bool = False
    max_cycles_exhausted: bool = False


def cubify(b, options: CubifyOptions | None = None, *, large_dim=LARGE_DIM):
    """Reduce a basis; returns (reduced basis, report).

    With options=None the option set is picked from classify(b).  The report
    carries the exact row transform (reduced = transform · input), verified
    against the input before returning.
    """
    basis = Basis(b)
    t_start = time.perf_counter()
    matrix_class = classify(basis, large_dim=large_dim)
    auto = options is None
    opts = default_options(matrix_class) if auto else options

    state = BasisState(basis.rows)
    r_in, s_in = state.r, state.s
    timings = {"pre_hyperplanar": 0.0, "directional": 0.0, "hyperplanar": 0.0}

    pre_applied = False
    if opts.pre_hyperplanar:
        t0 = time.perf_counter()
        _hyperplanar(state, opts.lagrange, reduce_sublattice=False)
        timings["pre_hyperplanar"] += time.perf_counter() - t0
        pre_applied = True

    def directional_phase():
        t0 = time.perf_counter()
        _lagrange(state, len(state.rows), opts.lagrange)
        _simplify(state, opts.simplification)
        timings["directional"] += time.perf_counter() - t0

    def hyperplanar_phase():
        t0 = time.perf_counter()
        _hyperplanar(state, opts.lagrange)
        timings["hyperplanar"] += time.perf_counter() - t0

    r_history = [state.r]
    cycles = 0
    exhausted = False
    while True:
        r_before = state.r
        keep = state.copy()
        state.sort_by_norm()
        if opts.method == 1:
            directional_phase()
            hyperplanar_phase()
        else:
            hyperplanar_phase()
            directional_phase()
            hyperplanar_phase()
        cycles += 1
        r_history.append(state.r)
        if __debug__:
            assert state.consistent()
            assert _matmul(state.trans, basis.rows) == state.rows
        if state.r >= r_before:
            # no strict progress: hand back the pre-cycle list
            state.adopt(keep)
            break
        if cycles >= opts.max_cycles:
            exhausted = True
            break

    transform = tuple(tuple(r) for r in state.trans)
    reduced = Basis(state.rows)
    # exit self-check: the tracked transform must reproduce the output and
    # be unimodular
    if _matmul(transform, basis.rows) != [list(r) for r in reduced.rows]:
        raise AssertionError("transform does not map input to output")
    if abs(det(transform)) != 1:
        raise AssertionError("transform is not unimodular")

    timings["total"] = time.perf_counter() - t_start
    report = ReductionReport(
        r_in=r_in, r_out=state.r, s_in=s_in, s_out=state.s,
        cycles=cycles, matrix_class=matrix_class, options=opts, auto=auto,
        transform=transform, timings=timings, r_history=r_history,
        pre_pass_applied=pre_applied, max_cycles_exhausted=exhausted)
    return reduced, report


def verify_problems(original, reduced, report) -> list:
    """Diagnostics for a claimed reduction; empty when everything checks out."""
    problems = []
    orig = _as_rows(original)
    red = _as_rows(reduced)
    t = report.transform
    if len(t) != len(orig) or any(len(r) != len(orig) for r in t):
        problems.append("transform shape does not match the input")
        return problems
    if _matmul(t, orig) != [list(r) for r in red]:
        problems.append("transform does not map the original to the reduced basis")
    if abs(det(t)) != 1:
        problems.append("transform determinant is not +-1")
    m_in = metric_tensor(orig)
    m_out = metric_tensor(red)
    if rhombicity(m_in) != report.r_in:
        problems.append("recomputed input rhombicity %d != reported %d"
                        % (rhombicity(m_in), report.r_in))
    if norm_sum(m_in) != report.s_in:
        problems.append("recomputed input norm sum %d != reported %d"
                        % (norm_sum(m_in), report.s_in))
    if rhombicity(m_out) != report.r_out:
        problems.append("recomputed output rhombicity %d != reported %d"
                        % (rhombicity(m_out), report.r_out))
    if norm_sum(m_out) != report.s_out:
        problems.append("recomputed output norm sum %d != reported %d"
                        % (norm_sum(m_out), report.s_out))
    return problems


def verify(original, reduced, report) -> bool:
    """Whether reduced, report.transform and the reported R/S all agree."""
    return not verify_problems(original, reduced, report)
