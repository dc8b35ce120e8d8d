"""
Random Number Contract

Every run draws from numpy's PCG64 bit generator seeded with the run seed.
Per period exactly two uniforms are consumed, in this order:

    column 0  state transition (period 1: the initial state)
    column 1  private signal

Changing the generator or the order is a breaking change and must bump
RNG_VERSION.
"""

from typing import Iterator

import numpy as np
from numpy.typing import NDArray

from core.errors import ParameterError

RNG_NAME = "numpy-pcg64"
RNG_VERSION = 1

TRANSITION = 0
SIGNAL = 1
DRAWS_PER_PERIOD = 2

SEED_LIMIT = 2**64


def check_seed(seed: int) -> int:
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise ParameterError(f"seed must be an integer, got {seed!r}", "seed")
    if not 0 <= int(seed) < SEED_LIMIT:
        raise ParameterError(f"seed must satisfy 0 <= seed < 2**64, got {seed}", "seed")
    return int(seed)


def make_generator(seed: int) -> np.random.Generator:
    """A fresh generator for one run."""
    return np.random.Generator(np.random.PCG64(check_seed(seed)))


def draw_block(generator: np.random.Generator, periods: int) -> NDArray[np.float64]:
    """Uniforms for ``periods`` consecutive periods, shape (periods, 2)."""
    return generator.random((periods, DRAWS_PER_PERIOD))


def rng_contract(seed: int) -> Iterator[float]:
    """
    The uniform stream of a run, one variate at a time.

    Variates 2k and 2k+1 are the transition and signal draws of period k+1.
    """
    generator = make_generator(seed)
    while True:
        yield from draw_block(generator, 512).ravel()
