"""Classification, the cycle driver, and reduction verification."""

import random
from dataclasses import replace

import pytest

from cubify import (AUTO_OPTIONS, CubifyOptions, GeneratorSpec, MatrixClass,
                    SingularBasisError, Variant, classify, cubify,
                    default_options, generate, lattice_equal, metric_tensor,
                    norm_sum, rhombicity, verify, verify_problems)
from cubify.cli import load_matrix

from _helpers import DATA, random_unimodular
from conftest import B_EXAMPLE


def _columnar(n, column):
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, v in enumerate(column):
        rows[i][n - 1] = v
    return rows


def test_classify_columnar_generator_output_is_random():
    b = generate(GeneratorSpec(family="columnar", dim=10, seed=5))
    assert classify(b) is MatrixClass.RANDOM


def test_classify_dense_uniform_is_random():
    b = generate(GeneratorSpec(family="full", dim=10, seed=5))
    assert classify(b) is MatrixClass.RANDOM


def test_classify_fixture_is_large_heterogeneous():
    b = load_matrix(DATA / "heterogeneous_20x20.txt")
    assert classify(b) is MatrixClass.LARGE_HETEROGENEOUS


def test_classify_columnar_by_size():
    col = [1000 + 7 * i for i in range(16)]
    assert classify(_columnar(16, col)) is MatrixClass.LARGE_COLUMNAR
    assert classify(_columnar(10, col[:10])) is MatrixClass.SMALL_COLUMNAR
    assert classify(_columnar(15, col[:15])) is MatrixClass.LARGE_COLUMNAR
    assert classify(_columnar(14, col[:14])) is MatrixClass.SMALL_COLUMNAR


def test_classify_large_dim_is_tunable():
    col = [1000 + 7 * i for i in range(10)]
    assert classify(_columnar(10, col), large_dim=10) is MatrixClass.LARGE_COLUMNAR
    assert classify(_columnar(10, col), large_dim=11) is MatrixClass.SMALL_COLUMNAR


def test_classify_small_heterogeneous_folds_into_small_columnar():
    # dense high-value rows plus a heavy column, but below the size boundary
    rows = _columnar(8, [900, 800, 700, 600, 500, 400, 300, 200])
    rows[0] = [301, -205, 107, 409, -513, 208, 611, 900]
    assert classify(rows) is MatrixClass.SMALL_COLUMNAR


def test_auto_option_table():
    assert AUTO_OPTIONS[MatrixClass.SMALL_COLUMNAR] == CubifyOptions(
        method=1, lagrange=Variant.INSERT, simplification=Variant.INSERT)
    assert AUTO_OPTIONS[MatrixClass.LARGE_COLUMNAR] == CubifyOptions(
        method=1, lagrange=Variant.APPEND, simplification=Variant.INSERT)
    assert AUTO_OPTIONS[MatrixClass.LARGE_HETEROGENEOUS] == CubifyOptions(
        method=1, lagrange=Variant.INSERT, simplification=Variant.INSERT,
        pre_hyperplanar=True)
    assert AUTO_OPTIONS[MatrixClass.RANDOM] == CubifyOptions(
        method=2, lagrange=Variant.APPEND, simplification=Variant.APPEND)
    assert default_options("random") is AUTO_OPTIONS[MatrixClass.RANDOM]


def test_options_validation():
    with pytest.raises(ValueError):
        CubifyOptions(method=3)
    with pytest.raises(ValueError):
        CubifyOptions(max_cycles=0)
    opts = CubifyOptions(lagrange="append", simplification="insert")
    assert opts.lagrange is Variant.APPEND


def test_cubify_identity_one_cycle():
    eye = tuple(tuple(1 if i == j else 0 for j in range(4)) for i in range(4))
    for options in (None, CubifyOptions(method=2)):
        out, rep = cubify(eye, options)
        assert out.rows == eye
        assert rep.cycles == 1
        assert rep.r_in == rep.r_out == rep.s_in == rep.s_out == 4


def test_cubify_worked_example_auto():
    out, rep = cubify(B_EXAMPLE)
    assert rep.auto
    assert rep.matrix_class is MatrixClass.RANDOM
    assert rep.options.method == 2
    assert (rep.r_in, rep.s_in) == (126, 78)
    assert (rep.r_out, rep.s_out) == (10, 8)
    m = metric_tensor(out)
    assert rhombicity(m) == 10 and norm_sum(m) == 8
    ok, z = lattice_equal(out, B_EXAMPLE)
    assert ok
    assert rep.transform == z


def test_cubify_worked_example_method_one():
    opts = CubifyOptions(method=1, lagrange=Variant.INSERT,
                         simplification=Variant.INSERT)
    out, rep = cubify(B_EXAMPLE, opts)
    assert not rep.auto
    assert rep.r_out <= 10
    ok, _ = lattice_equal(B_EXAMPLE, out)
    assert ok


def test_cubify_r_history_is_strictly_decreasing():
    rng = random.Random(401)
    for _ in range(20):
        n = rng.randrange(3, 7)
        scr = random_unimodular(n, rng)
        _, rep = cubify(scr)
        h = rep.r_history
        assert len(h) == rep.cycles + 1
        for i in range(len(h) - 2):
            assert h[i + 1] < h[i]
        assert h[-1] <= h[-2]
        if not rep.max_cycles_exhausted:
            assert h[-1] == h[-2]
            assert h[-1] == rep.r_out


def test_cubify_max_cycles_exhaustion():
    out, rep = cubify(B_EXAMPLE, CubifyOptions(method=2, max_cycles=1))
    assert rep.max_cycles_exhausted
    assert rep.cycles == 1
    assert rep.r_out < rep.r_in
    ok, _ = lattice_equal(B_EXAMPLE, out)
    assert ok


def test_cubify_pre_pass_flagged():
    _, rep = cubify(B_EXAMPLE, CubifyOptions(method=1, pre_hyperplanar=True))
    assert rep.pre_pass_applied
    assert rep.timings["pre_hyperplanar"] >= 0.0
    _, rep = cubify(B_EXAMPLE)
    assert not rep.pre_pass_applied


def test_cubify_rejects_singular():
    with pytest.raises(SingularBasisError):
        cubify(((1, 2, 3), (2, 4, 6), (0, 0, 1)))


def test_verify_accepts_and_rejects():
    out, rep = cubify(B_EXAMPLE)
    assert verify(B_EXAMPLE, out, rep)
    assert verify_problems(B_EXAMPLE, out, rep) == []

    bad = replace(rep, transform=tuple(
        tuple(x + (i == j == 0) for j, x in enumerate(row))
        for i, row in enumerate(rep.transform)))
    assert not verify(B_EXAMPLE, out, bad)
    assert verify_problems(B_EXAMPLE, out, bad)

    bad = replace(rep, r_out=rep.r_out + 1)
    assert not verify(B_EXAMPLE, out, bad)

    bad = replace(rep, s_in=rep.s_in - 1)
    assert not verify(B_EXAMPLE, out, bad)


def test_verify_hand_built_transform():
    reduced = ((0, 1, 0), (1, 0, 1), (-1, 0, 2))
    ok, t = lattice_equal(reduced, B_EXAMPLE)
    assert ok
    out, rep = cubify(B_EXAMPLE)
    hand = replace(rep, transform=t)
    assert verify(B_EXAMPLE, reduced, hand)
