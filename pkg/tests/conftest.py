import pytest

from hgl import Ideal, Ring


@pytest.fixture
def plane():
    return Ring("x y")


@pytest.fixture
def veronese():
    return Ring("U V W", relations=["V^2 - U*W"])


@pytest.fixture
def vero_ideals(veronese):
    U, V, W = veronese.gens()
    return Ideal(veronese, [U, V]), Ideal(veronese, [U, V, W])
