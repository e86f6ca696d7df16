from pathlib import Path

import pytest

from dqha.examples import registered_algebras, sweedler_hopf, sweedler_twisted

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures():
    return FIXTURES


@pytest.fixture(scope="session", params=[H.name for H in registered_algebras()])
def registered(request):
    return {H.name: H for H in registered_algebras()}[request.param]


@pytest.fixture(scope="session")
def h4():
    return sweedler_hopf()


@pytest.fixture(scope="session")
def h4f():
    return sweedler_twisted()


def all_algebras():
    return registered_algebras() + [sweedler_hopf(), sweedler_twisted()]
