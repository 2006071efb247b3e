import numpy as np
import pytest

from gias3.cutpoly.graphs import BipartiteShape, CompleteShape


@pytest.fixture
def rng():
    return np.random.default_rng(20261017)


@pytest.fixture
def k22():
    return BipartiteShape(2, 2)


@pytest.fixture
def k33():
    return BipartiteShape(3, 3)


@pytest.fixture
def sk22():
    return BipartiteShape(2, 2).suspension()


@pytest.fixture
def k5():
    return CompleteShape(5)
