"""Shared test helpers.

The dense reference objects here are built from basis enumeration alone
(popcount diagonals, explicit Kronecker products through the library's
``to_dense``), so projector tests never trust the fast path they check.
"""
from __future__ import annotations

import random
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from numproj import PauliString, PauliSum


def dense_projector(n: int, k: int) -> np.ndarray:
    """Reference P(n, k): diagonal indicator of basis states with popcount k."""
    diag = [1.0 if b.bit_count() == k else 0.0 for b in range(1 << n)]
    return np.diag(np.array(diag, dtype=complex))


def random_string(rng: random.Random, n: int) -> PauliString:
    return PauliString(n, rng.getrandbits(n), rng.getrandbits(n), rng.randrange(4))


def random_operator(rng: random.Random, n: int, terms: int) -> PauliSum:
    data: dict[tuple[int, int], complex] = {}
    while len(data) < terms:
        key = (rng.getrandbits(n), rng.getrandbits(n))
        data[key] = complex(rng.uniform(-1, 1), 0.0)
    return PauliSum(n, data)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(90125)
