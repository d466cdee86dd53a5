import random

import pytest

from ranksat import make_tower


@pytest.fixture(scope="session")
def tower16():
    """F_16 = F_2[a]/(a^4 + a + 1), the golden tower."""
    return make_tower(2, 4, [1, 1, 0, 0, 1])


@pytest.fixture(scope="session")
def tower4():
    return make_tower(2, 2)


@pytest.fixture(scope="session")
def tower9():
    return make_tower(3, 2, [1, 0, 1])


@pytest.fixture(scope="session")
def tower256():
    return make_tower(2, 8)


@pytest.fixture()
def rng():
    return random.Random(20240817)
