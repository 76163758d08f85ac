"""Golden reconstruction of the worked q=5, n=2, k=2 instance.

All constants are frozen coefficient vectors (low degree first) over F_5
for the modulus a^4 + 2.  The check rebuilds the code from the published
gamma and xi and demands entrywise equality for mu, G, H, and G H^T.
"""

from __future__ import annotations

from .construct import build_code
from .field import FieldCtx

Q, N, K = 5, 2, 2
MODULUS = [2, 0, 0, 0, 1]
GAMMA = [3, 2, 1, 1]
XI = [4, 2, 4, 0]
MU = [[1, 2, 1, 0], [2, 1, 0, 2], [1, 0, 2, 4], [0, 2, 4, 2]]
G = [
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    [[1, 0, 0, 0], [0, 3, 0, 0], [0, 0, 4, 0], [0, 0, 0, 2]],
    [[3, 2, 1, 1], [4, 4, 1, 3], [2, 2, 2, 3], [2, 1, 1, 1]],
    [[3, 2, 1, 1], [2, 2, 3, 4], [3, 3, 3, 2], [4, 2, 2, 2]],
]
H = [
    [[0, 1, 0, 4], [1, 0, 4, 0], [0, 4, 0, 2], [4, 0, 2, 0]],
    [[1, 4, 4, 0], [2, 2, 0, 1], [1, 0, 3, 2], [0, 4, 1, 1]],
    [[2, 1, 1, 3], [3, 3, 4, 2], [4, 2, 1, 3], [1, 3, 4, 4]],
    [[1, 3, 1, 0], [2, 4, 0, 3], [1, 0, 2, 1], [0, 3, 4, 3]],
]
GHT_CORNER_00 = [0, 4, 0, 1]
GHT_CORNER_33 = [0, 1, 0, 4]


def reference_code():
    ctx = FieldCtx(Q, N, MODULUS)
    return build_code(ctx, K, gamma=ctx.elem(GAMMA), xi=ctx.elem(XI))


def run_selftest():
    """Returns [(artifact, passed)] for mu, G, H, and G H^T."""
    code = reference_code()
    ctx = code.ctx
    results = []
    results.append(("mu", [list(map(int, e.coeffs)) for e in code.mu] == MU))
    results.append(
        ("G", all(code.G[i][j] == ctx.elem(G[i][j]) for i in range(4) for j in range(4)))
    )
    results.append(
        ("H", all(code.H[i][j] == ctx.elem(H[i][j]) for i in range(4) for j in range(4)))
    )
    ght_ok = True
    for i in range(4):
        for j in range(4):
            acc = ctx.zero
            for a, b in zip(code.G[i], code.H[j]):
                acc = acc + a * b
            if i == 0 and j == 0:
                expected = ctx.elem(GHT_CORNER_00)
            elif i == 3 and j == 3:
                expected = ctx.elem(GHT_CORNER_33)
            else:
                expected = ctx.zero
            if acc != expected:
                ght_ok = False
    results.append(("GH^T", ght_ok))
    return results
