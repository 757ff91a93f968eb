import pytest

from pairideal.fixtures import get_fixture
from pairideal.workbench import Workbench


_CACHE = {}


def bench_for(name, **kw):
    key = (name, tuple(sorted(kw.items())))
    if key not in _CACHE:
        _CACHE[key] = Workbench(get_fixture(name), **kw)
    return _CACHE[key]


@pytest.fixture(scope="session")
def a3():
    return bench_for("a3")


@pytest.fixture(scope="session")
def seven():
    return bench_for("seven")


@pytest.fixture(scope="session")
def bracelet():
    return bench_for("bracelet9", window=5, bound=2)


@pytest.fixture(scope="session")
def u24():
    return bench_for("u:2:4")


@pytest.fixture(scope="session")
def u35():
    return bench_for("u:3:5")


@pytest.fixture(scope="session")
def u12():
    return bench_for("u:1:2")


@pytest.fixture(scope="session")
def boolean3():
    return bench_for("boolean:3")


@pytest.fixture(scope="session")
def fail_a():
    return bench_for("fail_A")
