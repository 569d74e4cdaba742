import random

import pytest

from trialgebra import triality, lie_tools


@pytest.fixture(scope="session")
def dtheta():
    return triality.default_dtheta()


@pytest.fixture(scope="session")
def octonion_derivations():
    dim, basis = lie_tools.derivation_algebra(lie_tools.octonion_algebra_spec())
    return dim, basis


@pytest.fixture
def rng():
    return random.Random(20240)
