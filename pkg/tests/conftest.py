from pathlib import Path

import pytest

from momentumrank import parse_gains_table

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def table2():
    return parse_gains_table(FIXTURES / "table2.csv")


@pytest.fixture(scope="session")
def abcd():
    return parse_gains_table(FIXTURES / "abcd.csv")
