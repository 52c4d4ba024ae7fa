import numpy as np
import pytest

from nugap import oracle
from nugap.plants import random_stable_plant, textbook_pair

PAIR_POOL_SEED = 2026
PAIR_ORACLE_GRID = 8192


@pytest.fixture(scope="session")
def textbook():
    return textbook_pair()


@pytest.fixture(scope="session")
def gated_pairs():
    """20 seeded random stable pairs with in_C true and a non-tiny gap.

    Each entry is (nominal, plant, oracle_result).
    """
    rng = np.random.default_rng(PAIR_POOL_SEED)
    pairs = []
    while len(pairs) < 20:
        a = random_stable_plant(rng, 3)
        b = random_stable_plant(rng, 3)
        res = oracle.nu_gap(a, b, grid=PAIR_ORACLE_GRID)
        if res.in_c and res.chordal_sup >= 0.05:
            pairs.append((a, b, res))
    return pairs
