import pytest

from smashcoh.hopf import integral
from smashcoh.kacqp import kacqp_context
from smashcoh.rationals import Rat


@pytest.fixture(scope="session")
def ctx2():
    """The builtin scenario context at q = 2."""
    return kacqp_context(Rat(2))


@pytest.fixture(scope="session")
def lam(ctx2):
    return integral(ctx2.hopf)
