import json
import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))  # for oracles.py

FIXTURES = pathlib.Path(__file__).parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


def load_fixture(name):
    with open(FIXTURES / f"{name}.json", "r", encoding="utf-8") as fh:
        return json.load(fh)


FIXTURE_NAMES = ("randclosure-s2", "randclosure-s3", "localbass-l1", "cusp", "wiegand-e1")
