import pytest

from mindeg.root_system import build_root_system


@pytest.fixture(scope="session")
def g2():
    return build_root_system("G2")


@pytest.fixture(scope="session")
def b3():
    return build_root_system("B3")


@pytest.fixture(scope="session")
def a2():
    return build_root_system("A2")
