"""Hyperplanar reduction: shear each vector toward the hyperplane of the rest.

For a chosen vector x the other rows span a hyperplane with primitive normal
p.  The foot of the perpendicular from x onto that hyperplane's direction is
H = (p·x / p·p) p; the gap H - x lies inside the hyperplane, so it has exact
rational coordinates over the sublattice rows.  Rounding those coordinates
gives the lattice point of x's layer nearest the foot in sublattice
coordinates, and x is replaced by it when the full-basis rhombicity strictly
drops.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._state import BasisState
from .directional import Variant, _lagrange
from .exact import (Basis, _int, dot, hyperplane_normal, nearest_int,
                    solve_in_sublattice)


def sublattice_reduce(sub, lagrange_variant=Variant.INSERT):
    """Norm-sort then division sweeps on N-1 vectors living in dimension N."""
    vecs = [tuple(_int(x) for x in v) for v in sub]
    if len(vecs) < 2:
        return tuple(vecs)
    state = BasisState(vecs)
    state.sort_by_norm()
    _lagrange(state, len(vecs), Variant(lagrange_variant))
    return tuple(tuple(r) for r in state.rows)


def _shear_coeffs(isolated, sub):
    """Integer shift coefficients over sub, plus the hyperplane normal."""
    p = hyperplane_normal(sub)
    pp = dot(p, p)
    px = dot(p, isolated)
    # gap from the isolated vector to the foot of the perpendicular
    gap = [Fraction(px * pc, pp) - xc for pc, xc in zip(p, isolated)]
    cols = [[v[i] for v in sub] for i in range(len(p))]
    loc = solve_in_sublattice(cols, gap)
    return [nearest_int(c) for c in loc], p


def shear_vector(isolated, sub):
    """The lattice point on isolated's layer nearest the perpendicular foot.

    Nearest coordinate-wise over the sublattice rows; the result differs
    from isolated by an integer combination of sub and keeps p·result
    unchanged.
    """
    coeffs, _ = _shear_coeffs(isolated, sub)
    out = list(isolated)
    for c, v in zip(coeffs, sub):
        if c:
            for i, x in enumerate(v):
                out[i] += c * x
    return tuple(out)


@dataclass
class AcceptedShear:
    """Trace record for one accepted screening step."""
    normal: tuple
    before: tuple
    after: tuple


def _hyperplanar(state, lagrange_variant=Variant.INSERT,
                 reduce_sublattice=True, trace=None):
    n = len(state.rows)
    if n < 2:
        return
    i = 0
    while i < n:
        cand = state.copy()
        cand.permute([t for t in range(n) if t != i] + [i])
        if reduce_sublattice:
            cand.sort_by_norm(upto=n - 1)
            _lagrange(cand, n - 1, lagrange_variant)
        coeffs, p = _shear_coeffs(cand.rows[n - 1], cand.rows[:n - 1])
        cand.combine_into(n - 1, coeffs, range(n - 1))
        if cand.r < state.r:
            if trace is not None:
                trace.append(AcceptedShear(normal=tuple(p),
                                           before=tuple(state.rows[i]),
                                           after=tuple(cand.rows[n - 1])))
            state.adopt(cand)
            i = 0
        else:
            i += 1


def hyperplanar_pass(b, lagrange_variant=Variant.INSERT, *,
                     reduce_sublattice=True, trace=None) -> Basis:
    """Screen every vector for a shear, restart after each accepted change.

    Each screening isolates one vector by list position, reduces the other
    rows as a sublattice (unless reduce_sublattice is off), shears the
    isolated vector toward the hyperplane foot, and accepts the candidate
    list {reduced sublattice..., sheared vector} only on a strict rhombicity
    decrease.  The pass ends after one full screening with no acceptance.

    trace, when given, is a list that collects an AcceptedShear per accepted
    change.
    """
    basis = Basis(b)
    state = BasisState(basis.rows)
    _hyperplanar(state, Variant(lagrange_variant),
                 reduce_sublattice=reduce_sublattice, trace=trace)
    return Basis(state.rows)
