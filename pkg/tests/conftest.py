import random

import pytest

from matroidsplit import corpus as corpus_mod


@pytest.fixture(scope="session")
def corpus8():
    return corpus_mod.enumerate_binary_matroids(8, 4)


@pytest.fixture(scope="session")
def corpus7(corpus8):
    return corpus8.restrict(7)


@pytest.fixture(scope="session")
def corpus6(corpus8):
    return corpus8.restrict(6)


@pytest.fixture(scope="session")
def sample200(corpus8):
    """Deterministic 200-member sample of the size-8 corpus."""
    rng = random.Random(20260811)
    members = list(corpus8.members)
    if len(members) <= 200:
        return tuple(members)
    return tuple(rng.sample(members, 200))
