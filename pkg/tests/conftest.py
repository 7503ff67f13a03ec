import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # nets / oracles helpers

from lcnsyn import Lcn, LogicalMatrix

FIXTURES = Path(__file__).parent / "fixtures"


def random_lcn(rng: random.Random, n_max: int = 4, m_max: int = 2, q_max: int = 2) -> Lcn:
    n = rng.randint(1, n_max)
    m = rng.randint(1, m_max)
    q = rng.randint(1, q_max)
    L = LogicalMatrix(n, tuple(rng.randint(1, n) for _ in range(n * m)))
    H = LogicalMatrix(q, tuple(rng.randint(1, q) for _ in range(n)))
    return Lcn(n, m, q, L, H)


@pytest.fixture
def rng():
    return random.Random(0x5C17)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES
