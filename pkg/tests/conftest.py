import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from polytorus.generators import minimal_torus_3k, moebius_torus, tube_complex


@pytest.fixture(scope="session")
def moebius():
    return moebius_torus()


@pytest.fixture(scope="session")
def minimal5():
    return minimal_torus_3k(5)


@pytest.fixture(scope="session")
def tube4():
    return tube_complex(4)


@pytest.fixture(scope="session")
def census8():
    from polytorus.census import enumerate_tori
    return enumerate_tori(8, "a")
