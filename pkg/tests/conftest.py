import pytest
from hypothesis import settings

from orelab.corpus import load_corpus
from orelab.ringspec import parse_ring

settings.register_profile("orelab", max_examples=60, deadline=None)
settings.load_profile("orelab")


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def z6():
    return parse_ring("zmod(6)")


@pytest.fixture(scope="session")
def z4():
    return parse_ring("zmod(4)")


@pytest.fixture(scope="session")
def t2():
    """Upper triangular 2x2 over F2: e11 = 4, e12 = 2, e22 = 1, identity = 5."""
    return parse_ring("triangular(zmod(2),2)")


@pytest.fixture(scope="session")
def m2():
    return parse_ring("matrix(zmod(2),2)")
