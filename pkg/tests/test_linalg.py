"""Exact solvers over both fields, checked against naive oracles."""

import numpy as np
import pytest

from tzcode import FieldCtx
from tzcode.errors import NoSolution, SingularMatrix
from tzcode.field import qvan
from tzcode.linalg import (
    ff_inv,
    ff_kernel,
    ff_mat_mul,
    ff_mat_vec,
    ff_rank,
    ff_solve,
    fq_inv,
    fq_kernel,
    fq_rank,
    fq_rank_batch,
    fq_solve,
)

from conftest import rng_for


def _identity(ctx, t):
    return [[ctx.one if i == j else ctx.zero for j in range(t)] for i in range(t)]


def test_rank_of_identity(ctx5):
    for t in (1, 2, 4):
        assert ff_rank(_identity(ctx5, t)) == t


def test_kernel_of_zero_matrix(ctx5):
    mat = [[ctx5.zero] * 3 for _ in range(2)]
    basis = ff_kernel(mat)
    assert len(basis) == 3
    for i, vec in enumerate(basis):
        assert vec[i] == ctx5.one


def test_published_dual_basis_system(ctx5):
    lam = [ctx5.one, ctx5.alpha, ctx5.alpha**2, ctx5.alpha**3]
    xi = ctx5.elem([4, 2, 4, 0])
    rhs = [xi.frobenius(2), ctx5.zero, ctx5.zero, ctx5.zero]
    assert rhs[0] == ctx5.elem([4, 3, 4, 0])
    mu = ff_solve(qvan(lam, 4), rhs)
    assert mu == [
        ctx5.elem([1, 2, 1, 0]),
        ctx5.elem([2, 1, 0, 2]),
        ctx5.elem([1, 0, 2, 4]),
        ctx5.elem([0, 2, 4, 2]),
    ]


def _det3(m):
    # cofactor expansion along the first row
    def det2(a, b, c, d):
        return a * d - b * c

    return (
        m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2])
        - m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2])
        + m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1])
    )


def _adjugate3(m):
    def det2(a, b, c, d):
        return a * d - b * c

    cof = [[None] * 3 for _ in range(3)]
    idx = [(1, 2), (0, 2), (0, 1)]
    for i in range(3):
        for j in range(3):
            r = idx[i]
            c = idx[j]
            minor = det2(m[r[0]][c[0]], m[r[0]][c[1]], m[r[1]][c[0]], m[r[1]][c[1]])
            cof[j][i] = minor if (i + j) % 2 == 0 else -minor
    return cof


def test_solve_against_adjugate_oracle_on_subfield_systems():
    # random 3x3 systems with entries in F_27, sitting inside F_729
    ctx = FieldCtx(3, 3)
    rng = rng_for(30)

    def sub_elem():
        acc = ctx.zero
        for b in ctx.subfield_basis:
            acc = acc + b.scale(int(rng.integers(0, 3)))
        return acc

    solved = 0
    while solved < 10:
        m = [[sub_elem() for _ in range(3)] for _ in range(3)]
        det = _det3(m)
        if det.is_zero():
            assert ff_rank(m) < 3
            assert len(ff_kernel(m)) == 3 - ff_rank(m)
            continue
        rhs = [sub_elem() for _ in range(3)]
        inv_det = det.inverse()
        adj = _adjugate3(m)
        expected = [inv_det * acc for acc in ff_mat_vec(adj, rhs)]
        assert ff_solve(m, rhs) == expected
        assert ff_kernel(m) == []
        solved += 1


def test_ff_solve_inconsistent_raises(ctx5):
    mat = [[ctx5.one, ctx5.one], [ctx5.one, ctx5.one]]
    with pytest.raises(NoSolution):
        ff_solve(mat, [ctx5.zero, ctx5.one])


def test_ff_inv_round_trip_and_singular(ctx5):
    rng = rng_for(31)
    while True:
        m = [[ctx5.random_element(rng) for _ in range(3)] for _ in range(3)]
        if ff_rank(m) == 3:
            break
    assert ff_mat_mul(ff_inv(m), m) == _identity(ctx5, 3)
    singular = [row[:] for row in m]
    singular[2] = [x + y for x, y in zip(singular[0], singular[1])]
    with pytest.raises(SingularMatrix):
        ff_inv(singular)


def test_ff_kernel_vectors_annihilate(ctx5):
    rng = rng_for(32)
    for _ in range(10):
        m = [[ctx5.random_element(rng) for _ in range(4)] for _ in range(2)]
        basis = ff_kernel(m)
        assert len(basis) == 4 - ff_rank(m)
        for vec in basis:
            assert all(x.is_zero() for x in ff_mat_vec(m, vec))


# ---------------------------------------------------------------------------
# base-field suite
# ---------------------------------------------------------------------------

def test_fq_solve_and_kernel_random():
    rng = rng_for(33)
    q = 5
    for _ in range(20):
        a = rng.integers(0, q, (4, 6), dtype=np.int64)
        x = rng.integers(0, q, 6, dtype=np.int64)
        b = (a @ x) % q
        sol = fq_solve(a, b, q)
        assert np.array_equal((a @ sol) % q, b)
        for row in fq_kernel(a, q):
            assert not ((a @ row) % q).any()


def test_fq_solve_inconsistent():
    with pytest.raises(NoSolution):
        fq_solve(np.array([[1, 1], [2, 2]]), np.array([0, 1]), 5)


def test_fq_inv_and_singular():
    rng = rng_for(34)
    q = 3
    while True:
        a = rng.integers(0, q, (4, 4), dtype=np.int64)
        if fq_rank(a, q) == 4:
            break
    assert np.array_equal((fq_inv(a, q) @ a) % q, np.eye(4, dtype=np.int64))
    with pytest.raises(SingularMatrix):
        fq_inv(np.zeros((3, 3), dtype=np.int64), q)


def test_fq_rank_batch_matches_scalar_path():
    rng = rng_for(35)
    for q in (3, 5):
        mats = rng.integers(0, q, (200, 4, 5), dtype=np.int64)
        ranks = fq_rank_batch(mats, q)
        for i in range(200):
            assert ranks[i] == fq_rank(mats[i], q)


def test_fq_kernel_reduced_echelon_order():
    # free columns 1 and 3 produce unit entries there, in ascending order
    q = 3
    a = np.array([[1, 2, 0, 1], [0, 0, 1, 2]])
    basis = fq_kernel(a, q)
    assert basis.shape == (2, 4)
    assert basis[0][1] == 1 and basis[1][3] == 1
