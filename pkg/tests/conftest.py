import pytest

from echarr import corpus


@pytest.fixture(scope="session")
def ex28():
    return corpus.ex28()


@pytest.fixture(scope="session")
def ex28_2():
    return corpus.ex28_2()


@pytest.fixture(scope="session")
def smalldude():
    return corpus.smalldude()


@pytest.fixture(scope="session")
def mcs7():
    return corpus.mcs7()


@pytest.fixture(scope="session")
def full_corpus():
    return corpus.full_corpus()
