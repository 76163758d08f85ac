"""Syndrome-based bounded-minimum-distance decoding.

The pipeline: compute the syndrome s = r H^T; estimate the error rank from
the ranks of shifted syndrome matrices; solve a homogeneous system for the
error span polynomial; extract its root space; solve the locator system for
the locator vector d; rebuild the row-space matrix B from d in the basis
mu^(q^k); subtract the error.

Two regimes exist.  While 2t + k < 2n the syndrome matrices S^(u) decide
everything.  At the boundary 2t + k = 2n (k even) the plain system loses a
row and the matrix is augmented with relative-trace rows (S_exp), which
pins the solution space back to dimension one provided the error entries
lie in the subfield of linearity.

Decoding failures are returned as values, never raised.
"""

from __future__ import annotations

import numpy as np
from dataclasses import dataclass

from .construct import TZCode
from .errors import LocatorSystemInconsistent, NoSolution, SpanDimMismatch
from .field import FF2n, rank_weight
from .linalg import ff_kernel, ff_rank, ff_solve
from .linpoly import LinPoly, root_space

__all__ = [
    "SPAN_DIM_MISMATCH",
    "ROOT_COUNT_MISMATCH",
    "LAMBDA_NOT_IN_SUBFIELD",
    "NO_RANK_FOUND",
    "LOCATOR_SYSTEM_INCONSISTENT",
    "FAILURE_REASONS",
    "DecodeOutcome",
    "syndrome",
    "syndrome_traces",
    "build_S",
    "estimate_rank",
    "build_S_exp",
    "solve_span",
    "solve_locators",
    "recover_B",
    "error_from_decomposition",
    "decode",
]

SPAN_DIM_MISMATCH = "SpanDimMismatch"
ROOT_COUNT_MISMATCH = "RootCountMismatch"
LAMBDA_NOT_IN_SUBFIELD = "LambdaNotInSubfield"
NO_RANK_FOUND = "NoRankFound"
LOCATOR_SYSTEM_INCONSISTENT = "LocatorSystemInconsistent"

FAILURE_REASONS = (
    SPAN_DIM_MISMATCH,
    ROOT_COUNT_MISMATCH,
    LAMBDA_NOT_IN_SUBFIELD,
    NO_RANK_FOUND,
    LOCATOR_SYSTEM_INCONSISTENT,
)


@dataclass(frozen=True)
class DecodeOutcome:
    """Either a decoded (codeword, error, message, t) or a failure reason."""

    success: bool
    codeword: tuple | None = None
    error: tuple | None = None
    message: tuple | None = None
    t: int | None = None
    failure_reason: str | None = None

    @classmethod
    def ok(cls, codeword, error, message, t):
        return cls(True, tuple(codeword), tuple(error), tuple(message), t)

    @classmethod
    def fail(cls, reason: str):
        return cls(False, failure_reason=reason)


def syndrome(code: TZCode, r) -> tuple:
    """s = r H^T; entrywise relative trace vanishes exactly on codewords."""
    r = list(r)
    out = []
    for row in code.H:
        acc = r[0] * row[0]
        for x, y in zip(r[1:], row[1:]):
            acc = acc + x * y
        out.append(acc)
    return tuple(out)


def syndrome_traces(code: TZCode, s) -> tuple:
    return tuple(code.ctx.trace_rel(x) for x in s)


def build_S(code: TZCode, s, u: int):
    """The u x (u+1) shifted syndrome matrix over the odd-index entries."""
    m, k = code.ctx.m, code.k
    if not 1 <= u <= (m - (k + 1)) // 2:
        raise IndexError(f"u must satisfy 1 <= u <= {(m - (k + 1)) // 2}, got {u}")
    return [
        [s[2 * (u + 1 + j - c) - 1].frobenius(c) for c in range(u + 1)]
        for j in range(u)
    ]


def estimate_rank(code: TZCode, s):
    """Largest u with S^(u) of full rank, scanning downwards; None if no u fits."""
    u_max = (code.ctx.m - (code.k + 1)) // 2
    for u in range(u_max, 0, -1):
        if ff_rank(build_S(code, s, u)) == u:
            return u
    return None


def build_S_exp(code: TZCode, s):
    """Trace-augmented 2t x (t+1) span system for the boundary rank t = n - k/2.

    Rows: the t-1 plain shifted rows, then the trace rows.  The trace row at
    shift 0 borrows the final syndrome entry (whose message part dies under
    the trace), and the closing row twists by gamma^(q^2t) so that the whole
    matrix factors through the locator q-powers with exponent 2t.
    """
    ctx = code.ctx
    k = code.k
    if k % 2 != 0:
        from .errors import LimitCaseInapplicable

        raise LimitCaseInapplicable("trace-augmented system needs even k")
    t = ctx.n - k // 2
    st = syndrome_traces(code, s)
    rows = []
    for j in range(1, t):
        rows.append([s[2 * (t + j - c) - 1].frobenius(c) for c in range(t + 1)])
    row = [st[2 * (t - c) - 1].frobenius(c) for c in range(t)]
    row.append(st[4 * t - 1].frobenius(t))
    rows.append(row)
    for j in range(1, t):
        rows.append([st[2 * (t + j - c) - 1].frobenius(c) for c in range(t + 1)])
    g2t = code.gamma.frobenius(2 * t)
    row = [st[0]]
    for c in range(1, t + 1):
        row.append(ctx.trace_rel(g2t * s[2 * (2 * t - c) - 1].frobenius(c)))
    rows.append(row)
    return rows


def solve_span(S) -> LinPoly:
    """Span-polynomial coefficients from a one-dimensional kernel.

    The kernel vector is scaled so its last entry is 1; anything other than
    a one-dimensional kernel with invertible top coefficient is rejected.
    """
    kernel = ff_kernel(S)
    if len(kernel) != 1:
        raise SpanDimMismatch(f"kernel dimension {len(kernel)}, expected 1")
    vec = kernel[0]
    top = vec[-1]
    if top.is_zero():
        raise SpanDimMismatch("kernel vector has zero top coefficient")
    inv = top.inverse()
    ctx = vec[0].ctx
    return LinPoly(ctx, [c * inv for c in vec])


def solve_locators(code: TZCode, a, s):
    """The locator vector d solving the inverse-Frobenius Moore system.

    Row i pairs a^(q^-i) against s_(2i-1)^(q^-i); with independent a the
    coefficient matrix has full column rank, so the solution is unique, and
    inconsistency means the span estimate was wrong.
    """
    ctx = code.ctx
    a = list(a)
    rows = []
    rhs = []
    for i in range(1, ctx.m - code.k):
        rows.append([x.frobenius(-i) for x in a])
        rhs.append(s[2 * i - 1].frobenius(-i))
    try:
        return ff_solve(rows, rhs)
    except NoSolution:
        raise LocatorSystemInconsistent("locator system has no solution") from None


def recover_B(code: TZCode, d) -> np.ndarray:
    """Row l holds the coordinates of d_l in the basis mu^(q^k)."""
    rows = [(code.mu_k_coords @ x.coeffs) % code.ctx.q for x in d]
    return np.stack(rows) if rows else np.zeros((0, code.ctx.m), dtype=np.int64)


def error_from_decomposition(a, B) -> tuple:
    """The error vector a . B rebuilt from a root basis and its row-space matrix."""
    a = list(a)
    ctx = a[0].ctx
    cols = np.stack([x.coeffs for x in a], axis=1)
    coeff = (cols @ np.asarray(B, dtype=np.int64)) % ctx.q
    return tuple(FF2n(ctx, coeff[:, j].copy()) for j in range(coeff.shape[1]))


def _finish(code: TZCode, r, s, span: LinPoly, t: int) -> DecodeOutcome:
    """Shared tail: roots, locators, B, error subtraction, residual check."""
    roots = root_space(span)
    if len(roots) != t:
        return DecodeOutcome.fail(ROOT_COUNT_MISMATCH)
    try:
        d = solve_locators(code, roots, s)
    except LocatorSystemInconsistent:
        return DecodeOutcome.fail(LOCATOR_SYSTEM_INCONSISTENT)
    B = recover_B(code, d)
    err = error_from_decomposition(roots, B)
    cw = tuple(x - y for x, y in zip(r, err))
    # residual check keeps the bounded-distance promise: the corrected word
    # must be a codeword and the error rank must match the estimate
    if rank_weight(err) != t or not code.is_codeword(cw):
        return DecodeOutcome.fail(LOCATOR_SYSTEM_INCONSISTENT)
    return DecodeOutcome.ok(cw, err, code.unmap(cw), t)


def decode(code: TZCode, r, strict_alg1: bool = False) -> DecodeOutcome:
    """Bounded-minimum-distance decoding of a received word.

    With strict_alg1 the boundary branch declares failure the moment its
    hypotheses break.  By default a failed boundary attempt falls through to
    the generic branch instead: a plain error whose span is not defined over
    the subfield can make the augmented matrix reach full rank spuriously,
    and the fallback strictly enlarges the set of corrected words without
    changing behaviour on boundary-conforming errors.
    """
    ctx = code.ctx
    r = tuple(r)
    if len(r) != code.length:
        raise ValueError(f"received word must have length {code.length}")
    s = syndrome(code, r)
    if all(ctx.trace_rel(x).is_zero() for x in s):
        zero_err = tuple(ctx.zero for _ in range(code.length))
        return DecodeOutcome.ok(r, zero_err, code.unmap(r), 0)

    if code.k % 2 == 0:
        t_lim = ctx.n - code.k // 2
        s_exp = build_S_exp(code, s)
        if ff_rank(s_exp) == t_lim:
            reason = None
            try:
                span = solve_span(s_exp)
            except SpanDimMismatch:
                reason = SPAN_DIM_MISMATCH
                span = None
            if span is not None:
                if all(ctx.in_subfield(c) for c in span.coeffs):
                    out = _finish(code, r, s, span, t_lim)
                    if out.success:
                        return out
                    reason = out.failure_reason
                else:
                    reason = LAMBDA_NOT_IN_SUBFIELD
            if strict_alg1:
                return DecodeOutcome.fail(reason)

    t = estimate_rank(code, s)
    if t is None:
        return DecodeOutcome.fail(NO_RANK_FOUND)
    try:
        span = solve_span(build_S(code, s, t))
    except SpanDimMismatch:
        return DecodeOutcome.fail(SPAN_DIM_MISMATCH)
    return _finish(code, r, s, span, t)
