"""Tower arithmetic, Frobenius tables, traces, norms, and the Moore matrix."""

import numpy as np
import pytest

from tzcode import FieldCtx, qvan, ext, ext_inv, rank_weight
from tzcode.errors import DivisionByZero, InvalidParameter, UnsupportedCharacteristic
from tzcode.field import Basis
from tzcode.linalg import ff_rank, fq_rank

from conftest import rng_for


def test_reduction_of_alpha_fourth(ctx5):
    # long division of a^4 by a^4 + 2 leaves remainder -2 = 3
    a = ctx5.alpha
    assert a * a**3 == ctx5.scalar(3)


def test_identity_elements(ctx5, ctx3):
    for ctx in (ctx5, ctx3):
        rng = rng_for(11)
        for _ in range(20):
            x = ctx.random_element(rng)
            assert x + ctx.zero == x
            assert x * ctx.one == x
        assert ctx.one.inverse() == ctx.one


def test_gamma_times_xi_is_eta(ctx5):
    gamma = ctx5.elem([3, 2, 1, 1])
    xi = ctx5.elem([4, 2, 4, 0])
    assert gamma * xi == ctx5.elem([0, 1, 0, 4])


def test_field_axioms_sampled(ctx5):
    rng = rng_for(12)
    for _ in range(50):
        a, b, c = (ctx5.random_element(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        if not a.is_zero():
            assert a * a.inverse() == ctx5.one
            assert (a / a) == ctx5.one


def test_division_by_zero(ctx5):
    with pytest.raises(DivisionByZero):
        ctx5.one / ctx5.zero
    with pytest.raises(DivisionByZero):
        ctx5.zero.inverse()


def test_frobenius_of_alpha(ctx5):
    a = ctx5.alpha
    assert a.frobenius(1) == a.scale(3)
    assert a.frobenius(2) == a.scale(4)
    assert a.frobenius(3) == a.scale(2)
    assert a.frobenius(0) == a


def test_frobenius_is_field_automorphism(ctx5):
    rng = rng_for(13)
    for _ in range(30):
        a, b = ctx5.random_element(rng), ctx5.random_element(rng)
        i = int(rng.integers(0, ctx5.m))
        assert (a * b).frobenius(i) == a.frobenius(i) * b.frobenius(i)
        assert (a + b).frobenius(i) == a.frobenius(i) + b.frobenius(i)


def test_frobenius_order_and_inverse(ctx5):
    rng = rng_for(14)
    for _ in range(20):
        a = ctx5.random_element(rng)
        assert a.frobenius(ctx5.m) == a
        for i in range(1, ctx5.m):
            assert a.frobenius(i).frobenius(-i) == a


def test_frobenius_agrees_with_exponentiation(ctx5):
    # independent oracle: plain square-and-multiply with exponent q^i
    rng = rng_for(15)
    for _ in range(25):
        a = ctx5.random_element(rng)
        i = int(rng.integers(0, ctx5.m))
        assert a.frobenius(i) == a ** (ctx5.q**i)


def test_subfield_membership_exhaustive():
    # a in F_{q^n} iff a^(q^n) = a, checked over every element of both small towers
    for q, n in ((3, 2), (5, 2)):
        ctx = FieldCtx(q, n)
        count = 0
        for a in ctx.elements():
            fixed = a.frobenius(n) == a
            assert ctx.in_subfield(a) == fixed
            count += fixed
        assert count == q**n


def test_norm_of_gamma(ctx5):
    assert ctx5.norm_abs(ctx5.elem([3, 2, 1, 1])) == ctx5.scalar(2)


def test_trace_and_norm_trivial_values(ctx5):
    assert ctx5.trace_rel(ctx5.zero) == ctx5.zero
    assert ctx5.norm_abs(ctx5.one) == ctx5.one


def test_trace_of_gamma_xi(ctx5):
    eta = ctx5.elem([3, 2, 1, 1]) * ctx5.elem([4, 2, 4, 0])
    assert ctx5.trace_rel(eta) == ctx5.zero


def test_norm_agrees_with_exponentiation(ctx5, ctx3):
    for ctx in (ctx5, ctx3):
        rng = rng_for(16)
        e = (ctx.q**ctx.m - 1) // (ctx.q - 1)
        for _ in range(15):
            a = ctx.random_element(rng)
            assert ctx.norm_abs(a) == a**e


def test_trace_rel_surjective_linear_kernel_dim_one(ctx5):
    # exhaustive at q=5, n=2: image is all of F_25, kernel has 25 elements
    image = set()
    kernel = 0
    for a in ctx5.elements():
        tr = ctx5.trace_rel(a)
        assert ctx5.in_subfield(tr)
        image.add(tr)
        kernel += tr.is_zero()
    assert len(image) == 25
    assert kernel == 25
    # F_{q^n}-linearity on a sample
    rng = rng_for(17)
    for _ in range(20):
        a = ctx5.random_element(rng)
        c = ctx5.trace_rel(ctx5.random_element(rng))  # arbitrary subfield scalar
        assert ctx5.trace_rel(c * a) == c * ctx5.trace_rel(a)


def test_trace_abs_lands_in_base(ctx5):
    rng = rng_for(18)
    for _ in range(20):
        assert ctx5.in_base(ctx5.trace_abs(ctx5.random_element(rng)))
        assert ctx5.in_base(ctx5.norm_abs(ctx5.random_element(rng)))


# ---------------------------------------------------------------------------
# Moore matrices
# ---------------------------------------------------------------------------

def test_qvan_reproduces_published_system(ctx5):
    lam = [ctx5.one, ctx5.alpha, ctx5.alpha**2, ctx5.alpha**3]
    mat = qvan(lam, 4)
    a = ctx5.alpha
    assert mat[1] == [ctx5.one, a.scale(3), (a**2).scale(4), (a**3).scale(2)]
    assert mat[2] == [ctx5.one, a.scale(4), a**2, (a**3).scale(4)]
    assert mat[3] == [ctx5.one, a.scale(2), (a**2).scale(4), (a**3).scale(3)]


def test_qvan_single_row(ctx5):
    rng = rng_for(19)
    vec = [ctx5.random_element(rng) for _ in range(3)]
    assert qvan(vec, 1) == [vec]


def test_qvan_rank_of_dependent_entries(ctx5):
    a = ctx5.alpha
    mat = qvan([ctx5.one, a, a.scale(3)], 3)
    assert ff_rank(mat) == 2  # entries span the plane <1, a>


def test_qvan_determinant_lemma_exhaustive():
    # det(qvan_2((a0, a1))) = a0 a1^q - a1 a0^q vanishes iff the pair is
    # F_q-dependent, over every pair in F_81
    ctx = FieldCtx(3, 2)
    els = list(ctx.elements())
    for a0 in els:
        f0 = a0.frobenius(1)
        for a1 in els:
            det = a0 * a1.frobenius(1) - a1 * f0
            dep = rank_weight([a0, a1]) < 2
            assert det.is_zero() == dep
    # the determinant drives the Moore-matrix rank, spot-checked
    rng = rng_for(23)
    for _ in range(25):
        pair = [ctx.random_element(rng) for _ in range(2)]
        full = rank_weight(pair) == 2
        assert (ff_rank(qvan(pair, 2)) == 2) == full


def test_qvan_full_rank_via_determinant_product_formula(ctx5):
    # the product formula evaluated directly for the evaluation basis
    lam = [ctx5.one, ctx5.alpha, ctx5.alpha**2, ctx5.alpha**3]
    det = lam[0]
    for j in range(3):
        import itertools

        for cs in itertools.product(range(ctx5.q), repeat=j + 1):
            acc = lam[j + 1]
            for ci, li in zip(cs, lam[: j + 1]):
                acc = acc - li.scale(ci)
            det = det * acc
    assert not det.is_zero()
    assert ff_rank(qvan(lam, 4)) == 4


# ---------------------------------------------------------------------------
# expansion and rank weight
# ---------------------------------------------------------------------------

def test_ext_zero_vector(ctx5):
    basis = ctx5.power_basis
    zeros = [ctx5.zero] * 4
    assert not ext(zeros, basis).any()


def test_ext_power_basis_identity(ctx5):
    basis = ctx5.power_basis
    mat = ext(list(basis), basis)
    assert np.array_equal(mat, np.eye(4, dtype=np.int64))


def test_ext_round_trip_random_bases(ctx5):
    rng = rng_for(20)
    lam = Basis([ctx5.one, ctx5.alpha, ctx5.alpha**2, ctx5.alpha**3])
    for basis in (ctx5.power_basis, lam):
        for _ in range(100):
            x = [ctx5.random_element(rng) for _ in range(5)]
            assert ext_inv(ext(x, basis), basis) == tuple(x)


def test_rank_weight_is_basis_independent(ctx5):
    rng = rng_for(21)
    lam = Basis([ctx5.one, ctx5.alpha, ctx5.alpha**2, ctx5.alpha**3])
    for _ in range(20):
        x = [ctx5.random_element(rng) for _ in range(4)]
        w = rank_weight(x)
        assert 0 <= w <= 4
        assert fq_rank(ext(x, lam), ctx5.q) == w


def test_rank_weight_trivial_cases(ctx5):
    assert rank_weight([ctx5.zero] * 4) == 0
    assert rank_weight([ctx5.one, ctx5.alpha, ctx5.alpha**2, ctx5.alpha**3]) == 4


def test_rank_weight_of_planted_decomposition(ctx5):
    # any product of independent column elements and a full-rank row matrix
    # has rank weight exactly t
    from tzcode.decoder import error_from_decomposition

    rng = rng_for(22)
    for t in (1, 2, 3):
        while True:
            a = [ctx5.random_element(rng) for _ in range(t)]
            if rank_weight(a) == t:
                break
        while True:
            B = rng.integers(0, 5, (t, 4), dtype=np.int64)
            if fq_rank(B, 5) == t:
                break
        assert rank_weight(error_from_decomposition(a, B)) == t


# ---------------------------------------------------------------------------
# construction validation
# ---------------------------------------------------------------------------

def test_even_q_rejected():
    with pytest.raises(UnsupportedCharacteristic):
        FieldCtx(2, 2)
    with pytest.raises(UnsupportedCharacteristic):
        FieldCtx(4, 2)


def test_reducible_modulus_rejected():
    with pytest.raises(InvalidParameter):
        FieldCtx(5, 2, [1, 0, 0, 0, 1])  # x^4 + 1 splits mod 5


def test_nonmonic_modulus_rejected():
    with pytest.raises(InvalidParameter):
        FieldCtx(5, 2, [2, 0, 0, 0, 2])


def test_default_modulus_matches_published_field():
    assert FieldCtx(5, 2).modulus == (2, 0, 0, 0, 1)


def test_element_index_round_trip(ctx3):
    for idx in (0, 1, 5, 80):
        assert ctx3.index_of(ctx3.element_from_index(idx)) == idx


def test_basis_rejects_dependent_elements(ctx5):
    with pytest.raises(InvalidParameter):
        Basis([ctx5.one, ctx5.alpha, ctx5.alpha.scale(2), ctx5.alpha**3])
