import pytest

from polycodes import field_make


@pytest.fixture(scope="session")
def F2():
    return field_make(2)


@pytest.fixture(scope="session")
def F3():
    return field_make(3)


@pytest.fixture(scope="session")
def F4():
    return field_make(2, 2)


@pytest.fixture(scope="session")
def F5():
    return field_make(5)


@pytest.fixture(scope="session")
def F7():
    return field_make(7)


@pytest.fixture(scope="session")
def F8():
    return field_make(2, 3)


@pytest.fixture(scope="session")
def F9():
    return field_make(3, 2)
