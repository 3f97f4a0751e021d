import pytest

from corpus import lasso_corpus, real_corpus


@pytest.fixture(scope="session")
def lassos():
    return lasso_corpus()


@pytest.fixture(scope="session")
def reals():
    return real_corpus()
