"""Linearized polynomials over F_{q^2n}.

A q-polynomial sum_i f_i x^(q^i) acts as an F_q-linear endomorphism of
F_{q^2n}.  Coefficient index i holds the coefficient of x^(q^i); working
degree stays below 2n since x^(q^2n) = x on the field.
"""

from __future__ import annotations

from .errors import DependentSpan
from .field import FF2n, Basis, ext
from .linalg import fq_kernel

__all__ = ["LinPoly", "span_poly", "root_space"]


class LinPoly:
    """Linearized polynomial with coefficients in F_{q^2n}."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) > ctx.m + 1:
            raise ValueError("working q-degree must stay below 2n")
        self.ctx = ctx
        self.coeffs = coeffs

    @property
    def qdegree(self) -> int:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if not self.coeffs[i].is_zero():
                return i
        return -1  # zero polynomial

    def is_zero(self) -> bool:
        return self.qdegree < 0

    def evaluate(self, x: FF2n) -> FF2n:
        acc = self.ctx.zero
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                acc = acc + c * x.frobenius(i)
        return acc

    __call__ = evaluate

    def __eq__(self, other):
        return isinstance(other, LinPoly) and self.ctx is other.ctx and self.coeffs == other.coeffs

    def __repr__(self):
        return f"LinPoly({list(self.coeffs)})"


def span_poly(ctx, vecs) -> LinPoly:
    """Monic subspace polynomial whose roots are exactly the F_q-span of vecs.

    Built degree by degree: when L kills the span of the first j inputs and
    v is the next one, L'(x) = L(x)^q - L(v)^(q-1) L(x) kills the enlarged
    span and has q-degree j+1.  Dependent inputs make L(v) vanish, which is
    rejected.  The top coefficient is normalized to 1.
    """
    vecs = list(vecs)
    coeffs = [ctx.one]  # the identity polynomial x
    for v in vecs:
        val = ctx.zero
        for i, c in enumerate(coeffs):
            val = val + c * v.frobenius(i)
        if val.is_zero():
            raise DependentSpan("generators are linearly dependent over F_q")
        factor = val.frobenius(1) / val  # val^(q-1)
        raised = [ctx.zero] + [c.frobenius(1) for c in coeffs]
        coeffs = [r - factor * c for r, c in zip(raised, coeffs + [ctx.zero])]
    top = coeffs[-1]
    if top != ctx.one:
        inv = top.inverse()
        coeffs = [c * inv for c in coeffs]
    return LinPoly(ctx, coeffs)


def root_space(f: LinPoly, basis: Basis | None = None):
    """Echelon-canonical F_q-basis of the kernel of f.

    Solves the 2n x 2n base-field system given by expanding the images of a
    basis; the result size is bounded by the q-degree of f.
    """
    ctx = f.ctx
    if basis is None:
        basis = ctx.power_basis
    images = [f.evaluate(b) for b in basis]
    mat = ext(images, basis)
    kernel_rows = fq_kernel(mat, ctx.q)
    return [basis.from_coords(row) for row in kernel_rows]
