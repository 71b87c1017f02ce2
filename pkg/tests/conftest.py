import pytest

from repwild import zoo
from repwild.fields import GF, QQ, cyclotomic


@pytest.fixture(scope="session")
def tp2():
    return zoo.truncated_poly(2)


@pytest.fixture(scope="session")
def tp3():
    return zoo.truncated_poly(3)


@pytest.fixture(scope="session")
def m2():
    return zoo.matrix_units(2)


@pytest.fixture(scope="session")
def z3_cyc():
    return zoo.cyclic_group_algebra(3, cyclotomic(3))


@pytest.fixture(scope="session")
def sl2_u():
    return zoo.restricted_enveloping(zoo.sl2_data(3), GF(3))


@pytest.fixture(scope="session")
def qa2():
    return zoo.quantum_nilpotent("A2", 3)
