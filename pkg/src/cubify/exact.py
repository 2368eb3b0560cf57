"""Exact integer and rational linear algebra underlying the reduction passes.

Everything here is arbitrary precision: vectors are tuples of Python ints,
rationals are fractions.Fraction.  No floating point enters any computation.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from math import gcd


class DimensionMismatchError(ValueError):
    pass


class SingularBasisError(ValueError):
    pass


class DegenerateHyperplaneError(ValueError):
    """Raised when the vectors meant to span a hyperplane are dependent."""


class DegenerateSublatticeError(ValueError):
    """Raised when a sublattice system is singular."""


def _int(x):
    # operator.index rejects floats instead of silently truncating them
    return operator.index(x)


class Basis:
    """An ordered list of N linearly independent integer vectors of dimension N.

    Rows are the lattice vectors.  Construction validates squareness, integer
    entries and independence (nonzero determinant).
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        if isinstance(rows, Basis):
            self.rows = rows.rows
            return
        rows = tuple(tuple(_int(x) for x in row) for row in rows)
        if not rows:
            raise DimensionMismatchError("empty basis")
        n = len(rows)
        for k, row in enumerate(rows):
            if len(row) != n:
                raise DimensionMismatchError(
                    "row %d has %d coordinates, expected %d" % (k, len(row), n))
        if det(rows) == 0:
            raise SingularBasisError("basis rows are linearly dependent")
        self.rows = rows

    @property
    def dim(self):
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def __eq__(self, other):
        if isinstance(other, Basis):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Basis(%r)" % (list(list(r) for r in self.rows),)


def _as_rows(b):
    if isinstance(b, Basis):
        return b.rows
    return tuple(tuple(_int(x) for x in row) for row in b)


def dot(u, v) -> int:
    """Exact scalar product of two integer vectors."""
    if len(u) != len(v):
        raise DimensionMismatchError("dot of vectors with lengths %d and %d"
                                     % (len(u), len(v)))
    return sum(a * b for a, b in zip(u, v))


def metric_tensor(b):
    """Symmetric matrix of pairwise scalar products of the basis rows."""
    rows = _as_rows(b)
    n = len(rows)
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            d = dot(rows[i], rows[j])
            m[i][j] = d
            m[j][i] = d
    return tuple(tuple(r) for r in m)


def _check_symmetric(m):
    n = len(m)
    for row in m:
        if len(row) != n:
            raise DimensionMismatchError("metric tensor is not square")
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise ValueError("metric tensor is not symmetric")


def rhombicity(m) -> int:
    """Sum of absolute values of all metric tensor entries.

    Bounded below by the norm sum, with equality exactly for orthogonal
    bases; the reduction passes drive this number down.
    """
    _check_symmetric(m)
    return sum(abs(x) for row in m for x in row)


def norm_sum(m) -> int:
    """Trace of the metric tensor: the sum of squared row norms."""
    _check_symmetric(m)
    return sum(m[i][i] for i in range(len(m)))


def sort_by_norm(b) -> Basis:
    """Rows sorted by squared norm, ascending and stable."""
    rows = _as_rows(b)
    return Basis(sorted(rows, key=lambda r: dot(r, r)))


def nearest_int(q) -> int:
    """Closest integer to q; exact halves go to the even neighbour.

    Takes ints and Fractions only.  round() is exact for both and already
    implements the tie convention.
    """
    if isinstance(q, float):
        raise TypeError("nearest_int takes exact arguments, not float")
    return round(q)


def _round_ratio(num: int, den: int) -> int:
    # nearest_int(num/den) without building a Fraction; den > 0
    fl, rem = divmod(num, den)
    twice = 2 * rem
    if twice < den:
        return fl
    if twice > den:
        return fl + 1
    return fl + (fl & 1)


def det(matrix) -> int:
    """Determinant of a square integer matrix, by fraction-free elimination."""
    m = [[_int(x) for x in row] for row in matrix]
    n = len(m)
    for row in m:
        if len(row) != n:
            raise DimensionMismatchError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[k][k]
        for i in range(k + 1, n):
            f = m[i][k]
            for j in range(k + 1, n):
                q, rem = divmod(piv * m[i][j] - f * m[k][j], prev)
                assert rem == 0
                m[i][j] = q
            m[i][k] = 0
        prev = piv
    return sign * m[n - 1][n - 1]


class _Singular(Exception):
    pass


def _solve_exact(a, b):
    """Solve a·X = b exactly; a is n*n ints, b is n*m ints.

    Returns X as a list of n rows of Fractions.  Raises _Singular when a has
    no inverse.  Fraction-free elimination with row pivoting, then rational
    back-substitution.
    """
    n = len(a)
    m = len(b[0]) if n else 0
    aug = [list(a[i]) + list(b[i]) for i in range(n)]
    w = n + m
    prev = 1
    for k in range(n):
        if aug[k][k] == 0:
            for i in range(k + 1, n):
                if aug[i][k]:
                    aug[k], aug[i] = aug[i], aug[k]
                    break
            else:
                raise _Singular
        piv = aug[k][k]
        for i in range(k + 1, n):
            f = aug[i][k]
            for j in range(k + 1, w):
                q, rem = divmod(piv * aug[i][j] - f * aug[k][j], prev)
                assert rem == 0
                aug[i][j] = q
            aug[i][k] = 0
        prev = piv
    xs = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n - 1, -1, -1):
        piv = aug[i][i]
        for col in range(m):
            s = Fraction(aug[i][n + col])
            for j in range(i + 1, n):
                s -= aug[i][j] * xs[j][col]
            xs[i][col] = s / piv
    return xs


def hyperplane_normal(sub):
    """Primitive integer normal to the hyperplane spanned by N-1 vectors.

    The result is orthogonal to every input vector, has entries with gcd 1,
    and its first nonzero component is positive.
    """
    vecs = [tuple(_int(x) for x in v) for v in sub]
    if not vecs:
        raise DimensionMismatchError("no spanning vectors given")
    n = len(vecs[0])
    if len(vecs) != n - 1:
        raise DimensionMismatchError(
            "need %d vectors of dimension %d, got %d" % (n - 1, n, len(vecs)))
    for v in vecs:
        if len(v) != n:
            raise DimensionMismatchError("mixed vector dimensions")

    # fraction-free row echelon, remembering pivot columns
    m = [list(v) for v in vecs]
    piv_cols = []
    prev = 1
    r = 0
    for col in range(n):
        if r == n - 1:
            break
        p = next((i for i in range(r, n - 1) if m[i][col]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][col]
        for i in range(r + 1, n - 1):
            f = m[i][col]
            for j in range(col + 1, n):
                q, rem = divmod(piv * m[i][j] - f * m[r][j], prev)
                assert rem == 0
                m[i][j] = q
            m[i][col] = 0
        prev = piv
        piv_cols.append(col)
        r += 1
    if r < n - 1:
        raise DegenerateHyperplaneError("spanning vectors are linearly dependent")

    free = next(c for c in range(n) if c not in piv_cols)
    x = [Fraction(0)] * n
    x[free] = Fraction(1)
    for i in range(n - 2, -1, -1):
        c = piv_cols[i]
        s = Fraction(0)
        for j in range(c + 1, n):
            if x[j]:
                s += m[i][j] * x[j]
        x[c] = -s / m[i][c]

    den = 1
    for f in x:
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(f * den) for f in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v)
    if lead < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def solve_in_sublattice(cols, target):
    """Coordinates of target in the column span of cols, via the left inverse.

    cols is an N x k integer matrix (k independent columns), target a length-N
    vector of ints or Fractions that must lie in the span.  Solves the normal
    equations (colsT cols) x = colsT target exactly and returns k Fractions.
    """
    rows = [tuple(_int(x) for x in r) for r in cols]
    n = len(rows)
    if n == 0:
        raise DimensionMismatchError("empty matrix")
    k = len(rows[0])
    for r in rows:
        if len(r) != k:
            raise DimensionMismatchError("ragged matrix")
    if len(target) != n:
        raise DimensionMismatchError("target length %d, expected %d"
                                     % (len(target), n))
    t = [Fraction(x) for x in target]

    gram = [[sum(rows[i][a] * rows[i][b] for i in range(n)) for b in range(k)]
            for a in range(k)]
    lden = 1
    for f in t:
        lden = lden * f.denominator // gcd(lden, f.denominator)
    t_int = [int(f * lden) for f in t]
    rhs = [[sum(rows[i][a] * t_int[i] for i in range(n))] for a in range(k)]
    try:
        xs = _solve_exact(gram, rhs)
    except _Singular:
        raise DegenerateSublatticeError("columns are linearly dependent") from None
    return tuple(x[0] / lden for x in xs)


def _transpose(m):
    return [list(col) for col in zip(*m)]


def _matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def lattice_equal(a, b):
    """Whether two bases generate the same lattice.

    Returns (True, Z) with an integer unimodular Z such that a = Z·b, or
    (False, None).  b must be nonsingular.
    """
    ar = _as_rows(a)
    br = _as_rows(b)
    if len(ar) != len(br) or len(ar[0]) != len(br[0]):
        raise DimensionMismatchError("bases of different shapes")
    if det(br) == 0:
        raise SingularBasisError("second basis is singular")
    # a = Z·b  <=>  bT · ZT = aT
    try:
        xs = _solve_exact(_transpose(br), _transpose(ar))
    except _Singular:  # pragma: no cover - det check above
        raise SingularBasisError("second basis is singular") from None
    n = len(ar)
    z = [[None] * n for _ in range(n)]
    for i in range(n):
        for c in range(n):
            f = xs[i][c]
            if f.denominator != 1:
                return False, None
            z[c][i] = int(f)
    if abs(det(z)) != 1:
        return False, None
    return True, tuple(tuple(r) for r in z)
