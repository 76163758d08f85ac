import numpy as np
import pytest

from tzcode import FieldCtx, build_code
from tzcode.channel import ChannelSpec, random_error, random_message, trial_rng
from tzcode.selftest import GAMMA, MODULUS, XI


@pytest.fixture(scope="session")
def ctx5():
    return FieldCtx(5, 2, MODULUS)


@pytest.fixture(scope="session")
def code5(ctx5):
    """The published q=5, n=2, k=2 instance with its explicit gamma and xi."""
    return build_code(ctx5, 2, gamma=ctx5.elem(GAMMA), xi=ctx5.elem(XI))


@pytest.fixture(scope="session")
def ctx3():
    return FieldCtx(3, 2)


@pytest.fixture(scope="session")
def code321(ctx3):
    return build_code(ctx3, 1)


@pytest.fixture(scope="session")
def code322(ctx3):
    return build_code(ctx3, 2)


@pytest.fixture(scope="session")
def ctx33():
    return FieldCtx(3, 3)


@pytest.fixture(scope="session")
def code332(ctx33):
    return build_code(ctx33, 2)


def plant(code, t, rng, subfield=False):
    """One corrupted transmission: (message, codeword, error, decomposition, received)."""
    msg = random_message(code, rng)
    cw = code.encode(msg)
    e, decomp = random_error(code, ChannelSpec(t=t, subfield_only=subfield), rng)
    r = tuple(x + y for x, y in zip(cw, e))
    return msg, cw, e, decomp, r


def rng_for(seed, trial=0):
    return trial_rng(seed, trial)
