import random
from fractions import Fraction

import pytest

from grosslat import AlgebraParams, load_fixture


@pytest.fixture(scope="session")
def alg11():
    return AlgebraParams(3, 11)


@pytest.fixture(scope="session")
def alg19():
    return AlgebraParams(1, 19)


@pytest.fixture(scope="session")
def fixture_p11():
    return load_fixture("p11")


@pytest.fixture(scope="session")
def fixture_p31():
    return load_fixture("p31")


@pytest.fixture(scope="session")
def fixture_p19():
    return load_fixture("p19")


@pytest.fixture(scope="session")
def order_p11(fixture_p11):
    return fixture_p11.order()


@pytest.fixture(scope="session")
def order_p31(fixture_p31):
    return fixture_p31.order()


@pytest.fixture(scope="session")
def order_p19(fixture_p19):
    return fixture_p19.order()


def random_quat(rng: random.Random, algebra, span: int = 8, dens=(1, 1, 2, 3, 6)):
    def coord():
        return Fraction(rng.randint(-span, span), rng.choice(dens))
    return algebra.quat(coord(), coord(), coord(), coord())


def random_order_element(rng: random.Random, order, span: int = 5):
    x = order.algebra.quat()
    for b in order.lattice.basis:
        x = x + rng.randint(-span, span) * b
    return x
