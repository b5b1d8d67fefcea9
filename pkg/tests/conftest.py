import pytest

from bipolarsoft import datasets

CHOICE = ("e1", "e3", "e4", "e5", "e7", "e8")


@pytest.fixture
def houses_x():
    return datasets.load("houses_x")


@pytest.fixture
def houses_y():
    return datasets.load("houses_y")


@pytest.fixture
def mood_chart():
    return datasets.load("mood_chart")


@pytest.fixture
def candidates():
    return datasets.load("candidates")


@pytest.fixture
def candidate_weights():
    return datasets.candidate_weights()
