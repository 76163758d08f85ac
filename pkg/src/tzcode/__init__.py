"""Rank-metric MRD codes over F_{q^2n}, linear over the subfield F_{q^n}.

Construction, encoding, syndrome decoding at the full unique radius,
channel simulation, and brute-force oracles for desk-scale verification.
"""

from . import errors
from .bench import BenchReport, bench
from .channel import (
    ChannelSpec,
    ErrorDecomposition,
    TrialReport,
    random_error,
    random_message,
    simulate,
    trial_rng,
)
from .construct import (
    TZCode,
    build_code,
    find_gamma,
    find_xi,
    is_valid_gamma,
    punctured_generator,
    trace_almost_dual,
)
from .decoder import DecodeOutcome, decode, syndrome
from .field import FF2n, Basis, FieldCtx, ext, ext_inv, qvan, rank_weight
from .linpoly import LinPoly, root_space, span_poly
from .oracle import OracleResult, brute_force_decode, min_distance_bruteforce
from .paramfile import load_params, save_params

__version__ = "0.1.0"

__all__ = [
    "errors",
    "FieldCtx",
    "FF2n",
    "Basis",
    "qvan",
    "ext",
    "ext_inv",
    "rank_weight",
    "LinPoly",
    "span_poly",
    "root_space",
    "TZCode",
    "build_code",
    "find_gamma",
    "is_valid_gamma",
    "find_xi",
    "trace_almost_dual",
    "punctured_generator",
    "decode",
    "DecodeOutcome",
    "syndrome",
    "ChannelSpec",
    "ErrorDecomposition",
    "TrialReport",
    "random_error",
    "random_message",
    "simulate",
    "trial_rng",
    "OracleResult",
    "brute_force_decode",
    "min_distance_bruteforce",
    "bench",
    "BenchReport",
    "load_params",
    "save_params",
    "__version__",
]
