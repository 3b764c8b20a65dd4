from pathlib import Path

import pytest

from roughkit import read_table

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def toy():
    return read_table(FIXTURES / "toy.csv")


@pytest.fixture
def six():
    return read_table(FIXTURES / "six.csv")
