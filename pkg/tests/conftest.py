import pytest

from qlhopf.acceptance import table
from qlhopf.qldata import cached_builtin


@pytest.fixture(scope="session")
def q3_1():
    return cached_builtin("Q3_minus", lam=1)


@pytest.fixture(scope="session")
def q3_0():
    return cached_builtin("Q3_minus", lam=0)


@pytest.fixture(scope="session")
def table_a0():
    return table(0)


@pytest.fixture(scope="session")
def table_a1():
    return table(1)
