import pytest

from quadcover.covers import SixTuple

REFERENCE = {
    "U1": "1,0,1,0,0,1,2,1,2,1,4,2",
    "U2": "1,0,1,0,0,1,2,1,4,2,2,1",
    "U3": "1,0,1,0,0,1,4,1,3,2,1,1",
    "U4": "1,0,1,0,0,1,1,1,0,3,2,0",
}


@pytest.fixture(scope="session")
def u1():
    return SixTuple.parse(REFERENCE["U1"])


@pytest.fixture(scope="session")
def u2():
    return SixTuple.parse(REFERENCE["U2"])


@pytest.fixture(scope="session")
def u3():
    return SixTuple.parse(REFERENCE["U3"])


@pytest.fixture(scope="session")
def u4():
    return SixTuple.parse(REFERENCE["U4"])


@pytest.fixture(scope="session")
def representatives(u1, u2, u3, u4):
    return {"U1": u1, "U2": u2, "U3": u3, "U4": u4}
