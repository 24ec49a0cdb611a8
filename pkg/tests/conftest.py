import pytest

from petcalc import root_system_from_label


@pytest.fixture(scope="session")
def a1():
    return root_system_from_label("A1")


@pytest.fixture(scope="session")
def a2():
    return root_system_from_label("A2")


@pytest.fixture(scope="session")
def a3():
    return root_system_from_label("A3")


@pytest.fixture(scope="session")
def a4():
    return root_system_from_label("A4")


@pytest.fixture(scope="session")
def b2():
    return root_system_from_label("B2")
