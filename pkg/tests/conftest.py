from random import Random

import pytest

from lndfilt.rings import toy_ring


@pytest.fixture
def toy():
    return toy_ring()


@pytest.fixture
def rng():
    return Random(20260814)
