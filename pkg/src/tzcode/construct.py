"""Code construction: twist element, trace almost dual basis, G and H, encoding.

A code instance lives over the tower F_q < F_{q^n} < F_{q^2n} and is linear
over the middle field only.  Its generator matrix G (2k x 2n) evaluates the
basis maps x, x^q, gamma x^q, ..., x^(q^(k-1)), gamma x^(q^(k-1)),
gamma x^(q^k) at the evaluation basis lambda; the parity-check matrix H
((4n-2k) x 2n) is built on the trace almost dual basis mu and certifies
membership through a zero relative-trace syndrome.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    DependentEvaluationPoints,
    InvalidParameter,
    MessageNotInSubfield,
    NotACodeword,
    UnsupportedCharacteristic,
)
from .field import FF2n, Basis, FieldCtx, qvan
from .linalg import ff_rank, ff_solve, fq_inv, fq_solve

__all__ = [
    "find_gamma",
    "is_valid_gamma",
    "find_xi",
    "trace_almost_dual",
    "TZCode",
    "build_code",
    "punctured_generator",
]


def is_valid_gamma(ctx: FieldCtx, g: FF2n) -> bool:
    """True when the absolute norm of g is a non-square in F_q."""
    norm = ctx.norm_abs(g).as_base_int()
    return pow(norm, (ctx.q - 1) // 2, ctx.q) == ctx.q - 1


def find_gamma(ctx: FieldCtx) -> FF2n:
    """First element with non-square norm, in coefficient-lexicographic order."""
    if ctx.q % 2 == 0:
        raise UnsupportedCharacteristic("even q admits no non-square norms")
    for idx in range(ctx.q**ctx.m):
        g = ctx.element_from_index(idx)
        if is_valid_gamma(ctx, g):
            return g
    raise InvalidParameter("no element of non-square norm found")  # unreachable for odd q


def find_xi(ctx: FieldCtx, gamma: FF2n) -> FF2n:
    """A nonzero xi with zero relative trace of gamma*xi.

    The relative trace is F_q-linear with kernel an F_{q^n}-line; the first
    echelon kernel vector is taken as its generator eta, and xi = eta/gamma.
    """
    if gamma.is_zero():
        raise InvalidParameter("gamma must be nonzero")
    from .linalg import fq_kernel

    trace_map = (ctx._frob_pows[ctx.n] + ctx._frob_pows[0]) % ctx.q
    kernel = fq_kernel(trace_map, ctx.q)
    eta = FF2n(ctx, kernel[0].copy())
    return eta / gamma


def trace_almost_dual(ctx: FieldCtx, lam: Basis, xi: FF2n, k: int) -> Basis:
    """The unique basis mu paired with lam under shifted q-power inner products.

    mu solves the square Moore system with right-hand side
    (xi^(q^(2n-k)), 0, ..., 0); the coefficient matrix is invertible because
    lam is a basis, so the solution exists and is unique.
    """
    if xi.is_zero():
        raise InvalidParameter("xi must be nonzero")
    system = qvan(list(lam), ctx.m)
    rhs = [xi.frobenius(ctx.m - k)] + [ctx.zero] * (ctx.m - 1)
    mu = ff_solve(system, rhs)
    return Basis(mu)


class TZCode:
    """A fully instantiated code: parameters, G, H, and encoding helpers.

    Instances are immutable after construction and safe for concurrent use.
    Build through build_code rather than directly.
    """

    def __init__(self, ctx: FieldCtx, k: int, lam: Basis, gamma: FF2n, xi: FF2n, mu: Basis):
        self.ctx = ctx
        self.k = k
        self.lam = lam
        self.gamma = gamma
        self.xi = xi
        self.mu = mu

        n, m = ctx.n, ctx.m
        self.length = m
        self.min_distance = m - k + 1
        self.radius = (m - k) // 2

        lam_elems = list(lam)
        mu_elems = list(mu)
        g_rows = [lam_elems]
        for i in range(1, k):
            lam_i = [e.frobenius(i) for e in lam_elems]
            g_rows.append(lam_i)
            g_rows.append([gamma * e for e in lam_i])
        lam_k = [e.frobenius(k) for e in lam_elems]
        g_rows.append([gamma * e for e in lam_k])
        self.G = g_rows

        gamma_2nk = gamma.frobenius(m - k)
        h_rows = [[gamma_2nk * e for e in mu_elems]]
        for i in range(k + 1, m):
            mu_i = [e.frobenius(i) for e in mu_elems]
            h_rows.append(mu_i)
            h_rows.append([gamma * e for e in mu_i])
        h_rows.append([e.frobenius(k) for e in mu_elems])
        self.H = h_rows

        # coordinates in the basis mu^(q^k), used to rebuild B from the locators
        mu_k = np.stack([e.frobenius(k).coeffs for e in mu_elems], axis=1)
        self.mu_k_coords = fq_inv(mu_k, ctx.q)

        # F_q-expansion of the encoding map and a left inverse for unmapping
        sub = ctx.subfield_basis
        enc = np.zeros((2 * k * n, m * m), dtype=np.int64)
        for i in range(2 * k):
            for j in range(n):
                row = sub[j]
                flat = np.zeros(m * m, dtype=np.int64)
                for col in range(m):
                    flat[col * m : (col + 1) * m] = (row * self.G[i][col]).coeffs
                enc[i * n + j] = flat
        self._enc_mat = enc % ctx.q
        eye = np.eye(2 * k * n, dtype=np.int64)
        self.msg_left_inverse = fq_solve(self._enc_mat, eye, ctx.q)

    def validate_message(self, msg) -> tuple:
        msg = tuple(msg)
        if len(msg) != 2 * self.k:
            raise MessageNotInSubfield(f"message needs {2 * self.k} entries, got {len(msg)}")
        for e in msg:
            if not self.ctx.in_subfield(e):
                raise MessageNotInSubfield(f"entry {e!r} is not fixed by the q^n power map")
        return msg

    def encode(self, msg) -> tuple:
        """Codeword msg . G for a message over the subfield of linearity."""
        msg = self.validate_message(msg)
        out = []
        for col in range(self.length):
            acc = msg[0] * self.G[0][col]
            for i in range(1, 2 * self.k):
                acc = acc + msg[i] * self.G[i][col]
            out.append(acc)
        return tuple(out)

    def unmap(self, cw) -> tuple:
        """The unique message encoding to cw; raises NotACodeword otherwise."""
        cw = tuple(cw)
        flat = np.concatenate([c.coeffs for c in cw])
        digits = (flat @ self.msg_left_inverse) % self.ctx.q
        sub = self.ctx.subfield_basis
        n = self.ctx.n
        msg = []
        for i in range(2 * self.k):
            acc = self.ctx.zero
            for j in range(n):
                d = int(digits[i * n + j])
                if d:
                    acc = acc + sub[j].scale(d)
            msg.append(acc)
        msg = tuple(msg)
        if self.encode(msg) != cw:
            raise NotACodeword("vector is not in the code")
        return msg

    def is_codeword(self, v) -> bool:
        """Zero relative-trace syndrome test."""
        for row in self.H:
            acc = row[0] * v[0]
            for x, y in zip(row[1:], list(v)[1:]):
                acc = acc + x * y
            if not self.ctx.trace_rel(acc).is_zero():
                return False
        return True

    def __repr__(self):
        return (
            f"TZCode(q={self.ctx.q}, n={self.ctx.n}, k={self.k}, "
            f"d={self.min_distance}, radius={self.radius})"
        )


def _check_gh_structure(code: TZCode):
    ctx = code.ctx
    m, k = ctx.m, code.k
    corner0 = (code.gamma * code.xi).frobenius(m - k)
    corner1 = code.gamma * code.xi
    for i, grow in enumerate(code.G):
        for j in range(len(code.H)):
            acc = ctx.zero
            for a, b in zip(grow, code.H[j]):
                acc = acc + a * b
            if i == 0 and j == 0:
                expected = corner0
            elif i == 2 * k - 1 and j == 2 * m - 2 * k - 1:
                expected = corner1
            else:
                expected = ctx.zero
            if acc != expected:
                raise InvalidParameter(
                    f"generator/parity-check product violates its structure at ({i}, {j})"
                )


def build_code(ctx: FieldCtx, k: int, lam=None, gamma: FF2n | None = None,
               xi: FF2n | None = None) -> TZCode:
    """Instantiate a code, filling in any of lam, gamma, xi that were omitted.

    Supplied values are validated against their invariants; the structure of
    G H^T is checked before the instance is returned.
    """
    if not 1 <= k <= ctx.m - 1:
        raise InvalidParameter(f"k must satisfy 1 <= k <= {ctx.m - 1}, got {k}")
    if lam is None:
        lam = ctx.power_basis
    elif not isinstance(lam, Basis):
        lam = Basis(lam)
    if gamma is None:
        gamma = find_gamma(ctx)
    elif not is_valid_gamma(ctx, gamma):
        raise InvalidParameter("gamma must have non-square absolute norm")
    if xi is None:
        xi = find_xi(ctx, gamma)
    else:
        if xi.is_zero():
            raise InvalidParameter("xi must be nonzero")
        if not ctx.trace_rel(gamma * xi).is_zero():
            raise InvalidParameter("gamma * xi must have zero relative trace")
    mu = trace_almost_dual(ctx, lam, xi, k)
    code = TZCode(ctx, k, lam, gamma, xi, mu)
    _check_gh_structure(code)
    return code


def punctured_generator(code: TZCode, points):
    """Generator matrix of the evaluation code on fewer points.

    Evaluates the 2k basis maps at the given independent points; only the
    construction is provided, decoding of punctured codes is not.
    """
    ctx = code.ctx
    points = list(points)
    ell = len(points)
    if not code.k <= ell <= ctx.m:
        raise InvalidParameter(f"need k <= #points <= 2n, got {ell}")
    if ff_rank(qvan(points, ell)) != ell:
        raise DependentEvaluationPoints("evaluation points are F_q-dependent")
    rows = [list(points)]
    for i in range(1, code.k):
        p_i = [e.frobenius(i) for e in points]
        rows.append(p_i)
        rows.append([code.gamma * e for e in p_i])
    p_k = [e.frobenius(code.k) for e in points]
    rows.append([code.gamma * e for e in p_k])
    return rows
