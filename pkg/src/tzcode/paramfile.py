"""Flat-file persistence: JSON parameter files and bracketed vector lines.

Field elements serialize as coefficient arrays in the power basis, low
degree first, values in [0, q).  A vector file holds one word per line,
elements separated by commas, each element in square brackets; parsing is
exact and round trips bit for bit.
"""

from __future__ import annotations

import json

from .construct import TZCode, build_code
from .errors import InvalidParameter
from .field import Basis, FieldCtx

__all__ = [
    "params_dict",
    "params_from_dict",
    "save_params",
    "load_params",
    "format_vector",
    "parse_vector",
    "write_vectors",
    "read_vectors",
]

_REQUIRED_KEYS = ("q", "n", "k", "modulus", "gamma", "xi", "lambda", "mu")


def _elem_list(e) -> list:
    return [int(c) for c in e.coeffs]


def params_dict(code: TZCode) -> dict:
    from .channel import RNG_NAME

    return {
        "q": code.ctx.q,
        "n": code.ctx.n,
        "k": code.k,
        "modulus": [int(c) for c in code.ctx.modulus],
        "gamma": _elem_list(code.gamma),
        "xi": _elem_list(code.xi),
        "lambda": [_elem_list(e) for e in code.lam],
        "mu": [_elem_list(e) for e in code.mu],
        "rng": RNG_NAME,
    }


def params_from_dict(data: dict) -> TZCode:
    for key in _REQUIRED_KEYS:
        if key not in data:
            raise InvalidParameter(f"parameter file is missing key {key!r}")
    ctx = FieldCtx(int(data["q"]), int(data["n"]), data["modulus"])
    lam = Basis([ctx.elem(e) for e in data["lambda"]])
    gamma = ctx.elem(data["gamma"])
    xi = ctx.elem(data["xi"])
    code = build_code(ctx, int(data["k"]), lam=lam, gamma=gamma, xi=xi)
    stored_mu = [ctx.elem(e) for e in data["mu"]]
    if list(code.mu) != stored_mu:
        raise InvalidParameter("stored mu does not match the basis recomputed from lambda and xi")
    return code


def save_params(code: TZCode, path):
    with open(path, "w", encoding="utf-8") as fp:
        json.dump(params_dict(code), fp, indent=2)
        fp.write("\n")


def load_params(path) -> TZCode:
    with open(path, "r", encoding="utf-8") as fp:
        return params_from_dict(json.load(fp))


def format_vector(vec) -> str:
    return ",".join("[" + ",".join(str(int(c)) for c in e.coeffs) + "]" for e in vec)


def parse_vector(line: str, ctx: FieldCtx) -> tuple:
    try:
        data = json.loads("[" + line.strip() + "]")
    except json.JSONDecodeError as exc:
        raise InvalidParameter(f"malformed vector line: {line!r}") from exc
    return tuple(ctx.elem(e) for e in data)


def write_vectors(path, vectors):
    with open(path, "w", encoding="utf-8") as fp:
        for vec in vectors:
            fp.write(format_vector(vec))
            fp.write("\n")


def read_vectors(path, ctx: FieldCtx) -> list:
    out = []
    with open(path, "r", encoding="utf-8") as fp:
        for line in fp:
            line = line.strip()
            if line:
                out.append(parse_vector(line, ctx))
    return out
