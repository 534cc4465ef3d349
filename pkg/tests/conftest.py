import pytest

from ocgroups import constructions as cons
from ocgroups import suite


@pytest.fixture(scope="session")
def l34():
    return cons.psl_3_4()


@pytest.fixture(scope="session")
def l34b():
    return cons.l3_4_beta()


@pytest.fixture(scope="session")
def s6_catalog():
    return suite.default_catalog(6)


@pytest.fixture(scope="session")
def s4_catalog():
    return suite.scan_catalog(4)
