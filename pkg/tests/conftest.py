import json
import pathlib

import pytest

from relalg import fixtures as datasets

DATA = pathlib.Path(__file__).parent / "data"


def golden(name):
    with open(DATA / name, encoding="utf-8") as fh:
        return json.load(fh)


def canonical(vector):
    """Renumber a class vector by first occurrence, for comparing partitions."""
    seen = {}
    out = []
    for v in vector:
        if v not in seen:
            seen[v] = len(seen) + 1
        out.append(seen[v])
    return tuple(out)


@pytest.fixture(scope="session")
def ncc():
    return datasets.ncc()


@pytest.fixture(scope="session")
def netcs():
    return datasets.netcs()


@pytest.fixture(scope="session")
def netcsg():
    return datasets.netcsg()


@pytest.fixture(scope="session")
def g20():
    return datasets.g20()
