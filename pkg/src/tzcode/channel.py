"""Rank-error channel simulation with counter-based seeding.

Every trial derives its own Philox stream from the master seed and the
trial index, so campaigns are reproducible, order-independent, and safe to
parallelize.  Wall-clock timings are collected alongside but kept out of
the canonical report form, which must be byte-identical across runs with
the same seed.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

import numpy as np

from .construct import TZCode
from .decoder import FAILURE_REASONS, decode
from .errors import InvalidParameter
from .field import FF2n, FieldCtx, rank_weight
from .linalg import fq_rank

__all__ = [
    "RNG_NAME",
    "ChannelSpec",
    "ErrorDecomposition",
    "trial_rng",
    "random_subfield_element",
    "random_message",
    "random_error",
    "TrialReport",
    "simulate",
]

RNG_NAME = "philox4x64"
MISCORRECTION = "Miscorrection"


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Independent stream for one trial: same key, disjoint counter block."""
    return np.random.Generator(np.random.Philox(key=seed, counter=trial << 128))


@dataclass(frozen=True)
class ChannelSpec:
    """Target error rank, an optional subfield restriction, and the seed."""

    t: int
    subfield_only: bool = False
    seed: int = 0

    def validate(self, code: TZCode):
        if not 0 <= self.t <= code.ctx.m:
            raise InvalidParameter(f"t must lie in [0, {code.ctx.m}], got {self.t}")
        if self.subfield_only and self.t > code.ctx.n:
            raise InvalidParameter("subfield-only errors exist only for t <= n")


@dataclass(frozen=True)
class ErrorDecomposition:
    """A planted decomposition e = a . B with its locator vector d."""

    a: tuple
    B: np.ndarray
    d: tuple


def random_subfield_element(ctx: FieldCtx, rng) -> FF2n:
    digits = rng.integers(0, ctx.q, ctx.n)
    acc = ctx.zero
    for b, dgt in zip(ctx.subfield_basis, digits):
        if dgt:
            acc = acc + b.scale(int(dgt))
    return acc


def random_message(code: TZCode, rng) -> tuple:
    return tuple(random_subfield_element(code.ctx, rng) for _ in range(2 * code.k))


def random_error(code: TZCode, spec: ChannelSpec, rng):
    """A uniform rank-t error vector together with the planted decomposition.

    Column-side elements a are drawn until F_q-independent; the row-space
    matrix B is rejection-sampled until full rank (expected under two draws
    for q >= 3).
    """
    spec.validate(code)
    ctx = code.ctx
    t = spec.t
    if t == 0:
        zero = tuple(ctx.zero for _ in range(code.length))
        empty = np.zeros((0, ctx.m), dtype=np.int64)
        return zero, ErrorDecomposition((), empty, ())
    while True:
        if spec.subfield_only:
            a = [random_subfield_element(ctx, rng) for _ in range(t)]
        else:
            a = [ctx.random_element(rng) for _ in range(t)]
        if rank_weight(a) == t:
            break
    while True:
        B = rng.integers(0, ctx.q, (t, ctx.m), dtype=np.int64)
        if fq_rank(B, ctx.q) == t:
            break
    cols = np.stack([x.coeffs for x in a], axis=1)
    coeff = (cols @ B) % ctx.q
    e = tuple(FF2n(ctx, coeff[:, j].copy()) for j in range(ctx.m))
    mu_k = np.stack([x.frobenius(code.k).coeffs for x in code.mu], axis=1)
    d_coeff = (mu_k @ B.T) % ctx.q
    d = tuple(FF2n(ctx, d_coeff[:, i].copy()) for i in range(t))
    return e, ErrorDecomposition(tuple(a), B, d)


@dataclass
class TrialReport:
    """Aggregate of one simulation campaign."""

    params: dict
    trials: int
    successes: int
    failures_by_reason: dict
    timing: dict = field(default_factory=dict)

    def canonical(self) -> dict:
        """Deterministic portion of the report (timings excluded)."""
        return {
            "params": self.params,
            "trials": self.trials,
            "successes": self.successes,
            "failures_by_reason": dict(sorted(self.failures_by_reason.items())),
        }

    def canonical_json(self) -> str:
        return json.dumps(self.canonical(), sort_keys=True, separators=(",", ":"))

    def as_dict(self) -> dict:
        out = self.canonical()
        out["timing"] = self.timing
        return out


def simulate(code: TZCode, spec: ChannelSpec, trials: int,
             strict_alg1: bool = False) -> TrialReport:
    """Seeded campaign: encode, corrupt, decode, compare against the plant.

    A trial counts as a success only when the decoder returns the planted
    codeword, message, and error vector; a decoder success that recovers a
    different codeword is tallied as a miscorrection.
    """
    spec.validate(code)
    counts = {reason: 0 for reason in FAILURE_REASONS}
    counts[MISCORRECTION] = 0
    successes = 0
    times = []
    for trial in range(trials):
        rng = trial_rng(spec.seed, trial)
        msg = random_message(code, rng)
        cw = code.encode(msg)
        e, _ = random_error(code, spec, rng)
        r = tuple(x + y for x, y in zip(cw, e))
        t0 = time.perf_counter()
        out = decode(code, r, strict_alg1=strict_alg1)
        times.append(time.perf_counter() - t0)
        if out.success and out.codeword == cw and out.message == msg and out.error == e:
            successes += 1
        elif out.success:
            counts[MISCORRECTION] += 1
        else:
            counts[out.failure_reason] += 1
    arr = np.array(times) * 1000.0
    timing = {
        "mean_ms": float(arr.mean()) if trials else 0.0,
        "p50_ms": float(np.percentile(arr, 50)) if trials else 0.0,
        "p95_ms": float(np.percentile(arr, 95)) if trials else 0.0,
        "max_ms": float(arr.max()) if trials else 0.0,
    }
    params = {
        "q": code.ctx.q,
        "n": code.ctx.n,
        "k": code.k,
        "t": spec.t,
        "subfield_only": spec.subfield_only,
        "seed": spec.seed,
        "rng": RNG_NAME,
        "strict_alg1": strict_alg1,
    }
    failures = {k: v for k, v in counts.items() if v}
    return TrialReport(params, trials, successes, failures, timing)
