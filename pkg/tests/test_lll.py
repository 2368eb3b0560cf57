"""Exact LLL: orthogonalization examples and reduction post-conditions.

The reducer carries its Gram-Schmidt data incrementally through swaps; every
post-condition here is checked with a from-scratch gram_schmidt() of the
output, so any drift in the incremental updates shows up immediately.
"""

import random
from fractions import Fraction

import pytest

from cubify import (Basis, SingularBasisError, det, gram_schmidt,
                    lattice_equal, lll_reduce, metric_tensor, norm_sum)

from _helpers import best_s_in_box, random_basis, random_unimodular
from conftest import B_EXAMPLE


def test_gram_schmidt_examples():
    gs = gram_schmidt(((1, 0), (1, 1)))
    assert gs.star == ((1, 0), (0, 1))
    assert gs.mu[1] == (Fraction(1),)
    gs = gram_schmidt(((2, 0), (1, 3)))
    assert gs.star == ((2, 0), (0, 3))
    assert gs.mu[1] == (Fraction(1, 2),)
    assert gs.star_norms == (4, 9)


def test_gram_schmidt_properties():
    rng = random.Random(301)
    for _ in range(25):
        n = rng.randrange(2, 6)
        b = random_basis(n, rng)
        gs = gram_schmidt(b)
        assert gs.star[0] == tuple(Fraction(x) for x in b.rows[0])
        for i in range(n):
            for j in range(i):
                assert sum(a * c for a, c in zip(gs.star[i], gs.star[j])) == 0
        # rows reconstruct from star vectors and coefficients
        for k in range(n):
            acc = list(gs.star[k])
            for j in range(k):
                acc = [a + gs.mu[k][j] * s for a, s in zip(acc, gs.star[j])]
            assert tuple(acc) == tuple(Fraction(x) for x in b.rows[k])


def test_lll_identity_unchanged():
    eye = tuple(tuple(1 if i == j else 0 for j in range(5)) for i in range(5))
    assert lll_reduce(eye).rows == eye


def test_lll_worked_example():
    out = lll_reduce(B_EXAMPLE)
    s = norm_sum(metric_tensor(out))
    assert s <= 10
    # the exhaustive box oracle says 8 is the best reachable norm sum
    assert s == best_s_in_box(Basis(B_EXAMPLE), 10) == 8
    ok, _ = lattice_equal(B_EXAMPLE, out)
    assert ok


def _check_post_conditions(rows, alpha):
    gs = gram_schmidt(rows)
    n = len(gs.mu)
    for k in range(n):
        for j in range(k):
            assert abs(gs.mu[k][j]) <= Fraction(1, 2)
    for k in range(1, n):
        m = gs.mu[k][k - 1]
        assert gs.star_norms[k] >= (alpha - m * m) * gs.star_norms[k - 1]


def test_lll_post_conditions():
    rng = random.Random(307)
    for trial in range(30):
        n = rng.randrange(2, 7)
        b = random_basis(n, rng) if trial % 2 else Basis(random_unimodular(n, rng))
        alpha = (Fraction(3, 4), Fraction(1), Fraction(26, 100))[trial % 3]
        out = lll_reduce(b, alpha)
        _check_post_conditions(out, alpha)
        ok, _ = lattice_equal(b, out)
        assert ok
        assert abs(det(out.rows)) == abs(det(b.rows))


def test_lll_idempotent():
    rng = random.Random(311)
    for _ in range(15):
        b = random_basis(rng.randrange(2, 6), rng)
        once = lll_reduce(b)
        assert lll_reduce(once) == once


def test_lll_alpha_validation():
    with pytest.raises(ValueError):
        lll_reduce(((1, 0), (0, 1)), Fraction(1, 4))
    with pytest.raises(ValueError):
        lll_reduce(((1, 0), (0, 1)), Fraction(5, 4))
    with pytest.raises(ValueError):
        lll_reduce(((1, 0), (0, 1)), 0)


def test_lll_rejects_singular():
    with pytest.raises(SingularBasisError):
        lll_reduce(((1, 2), (2, 4)))
