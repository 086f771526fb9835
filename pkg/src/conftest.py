from src.padic.field import make_extension
from src.padic.field import LocalField
from src.padic.field import qp
import numpy as np
import pytest


@pytest.fixture
def q5() -> LocalField:
    return qp(5)


@pytest.fixture
def q3() -> LocalField:
    return qp(3)


@pytest.fixture
def q5_sqrt5(q5) -> LocalField:
    """Q_5(sqrt 5): totally ramified quadratic."""
    return make_extension(q5, 1, [1, 0, -5])


@pytest.fixture
def q25(q5) -> LocalField:
    """The unramified quadratic extension of Q_5."""
    return make_extension(q5, 2, [1, -5])


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)
