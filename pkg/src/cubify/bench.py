"""Seeded random matrix generation and reduction batteries.

Two families: "full" draws every entry uniformly from the entry range,
"columnar" starts from the identity and redraws the last column.  Batteries
reduce `count` matrices (seeds seed, seed+1, ...) with each requested
algorithm, verify lattice equality per matrix, and aggregate mean reduction
factors R_in/R_out and S_in/S_out.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .cubifier import cubify
from .exact import Basis, SingularBasisError, lattice_equal, metric_tensor, \
    norm_sum, rhombicity
from .lll import lll_reduce

FAMILIES = ("full", "columnar")
ALGORITHMS = ("cubify", "lll")


class GenerationError(RuntimeError):
    pass


class BatteryVerificationError(AssertionError):
    pass


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    dim: int
    entry_range: tuple = (0, 100)
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError("unknown family %r" % (self.family,))
        if self.dim < 2:
            raise ValueError("dim must be at least 2")
        lo, hi = self.entry_range
        if lo >= hi:
            raise ValueError("empty entry range")


def generate(spec: GeneratorSpec) -> Basis:
    """Draw one nonsingular matrix for the spec; singular draws are retried.

    Deterministic for a given spec (seeded Mersenne Twister).  Gives up with
    a "persistent singularity" error after 100 attempts.
    """
    rng = random.Random(spec.seed)
    lo, hi = spec.entry_range
    n = spec.dim
    for _ in range(100):
        if spec.family == "full":
            rows = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]
        else:
            rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
            for i in range(n):
                rows[i][n - 1] = rng.randint(lo, hi)
        try:
            return Basis(rows)
        except SingularBasisError:
            continue
    raise GenerationError("persistent singularity for %r" % (spec,))


@dataclass
class MatrixRecord:
    algorithm: str
    seed: int
    r_in: int
    r_out: int
    s_in: int
    s_out: int
    seconds: float
    basis: Basis | None = None
    reduced: Basis | None = None
    report: object = None

    @property
    def r_factor(self) -> Fraction:
        return Fraction(self.r_in, self.r_out)

    @property
    def s_factor(self) -> Fraction:
        return Fraction(self.s_in, self.s_out)


@dataclass
class BatteryResult:
    spec: GeneratorSpec
    count: int
    algorithms: tuple
    records: list = field(default_factory=list)
    flags: list = field(default_factory=list)

    def for_algorithm(self, algorithm):
        return [rec for rec in self.records if rec.algorithm == algorithm]

    def mean_r_factor(self, algorithm) -> float:
        recs = self.for_algorithm(algorithm)
        return float(sum(rec.r_factor for rec in recs) / len(recs))

    def mean_s_factor(self, algorithm) -> float:
        recs = self.for_algorithm(algorithm)
        return float(sum(rec.s_factor for rec in recs) / len(recs))

    def mean_seconds(self, algorithm) -> float:
        recs = self.for_algorithm(algorithm)
        return sum(rec.seconds for rec in recs) / len(recs)

    def summary(self) -> dict:
        return {alg: {"mean_r_factor": self.mean_r_factor(alg),
                      "mean_s_factor": self.mean_s_factor(alg),
                      "mean_seconds": self.mean_seconds(alg)}
                for alg in self.algorithms}


def _reduce_one(basis, algorithm):
    t0 = time.perf_counter()
    if algorithm == "cubify":
        reduced, report = cubify(basis)
    elif algorithm == "lll":
        reduced, report = lll_reduce(basis), None
    else:
        raise ValueError("unknown algorithm %r" % (algorithm,))
    seconds = time.perf_counter() - t0
    return reduced, report, seconds


def run_battery(spec: GeneratorSpec, count: int,
                algorithms=ALGORITHMS, keep_outputs=False) -> BatteryResult:
    """Reduce count seeded matrices with each algorithm and aggregate.

    Matrix i uses seed spec.seed + i, so any record can be regenerated in
    isolation.  Every reduction is checked to span the input lattice; a
    failure aborts the battery naming the offending seed.
    """
    if count < 1:
        raise ValueError("count must be positive")
    result = BatteryResult(spec=spec, count=count, algorithms=tuple(algorithms))
    for i in range(count):
        mspec = replace(spec, seed=spec.seed + i)
        basis = generate(mspec)
        m_in = metric_tensor(basis)
        r_in, s_in = rhombicity(m_in), norm_sum(m_in)
        for alg in algorithms:
            reduced, report, seconds = _reduce_one(basis, alg)
            ok, _ = lattice_equal(basis, reduced)
            if not ok:
                raise BatteryVerificationError(
                    "%s broke lattice equality at seed %d" % (alg, mspec.seed))
            m_out = metric_tensor(reduced)
            rec = MatrixRecord(
                algorithm=alg, seed=mspec.seed,
                r_in=r_in, r_out=rhombicity(m_out),
                s_in=s_in, s_out=norm_sum(m_out), seconds=seconds)
            if rec.r_out > rec.r_in:
                result.flags.append("%s raised rhombicity at seed %d"
                                    % (alg, mspec.seed))
            if keep_outputs:
                rec.basis = basis
                rec.reduced = reduced
                rec.report = report
            result.records.append(rec)
    return result
