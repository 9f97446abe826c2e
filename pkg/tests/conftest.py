import os
import random

import pytest

SEED = int(os.environ.get("OMEGA_SEED", "20260823"))


@pytest.fixture
def rng() -> random.Random:
    """Deterministic generator for the randomized suites; override with OMEGA_SEED."""
    return random.Random(SEED)
