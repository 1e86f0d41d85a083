import random

import pytest

from arrowcat.generators import Bounds
from arrowcat.rings import GF, ZZ


@pytest.fixture
def bounds():
    return Bounds(max_dim=2)


@pytest.fixture
def bounds3():
    return Bounds(max_dim=3)


@pytest.fixture
def rng():
    return random.Random(20260808)


ALL_RINGS = (GF(2), GF(3), GF(5), ZZ)
FIELD_RINGS = (GF(2), GF(3), GF(5))
