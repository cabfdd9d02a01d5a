import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dynrefl.document import open_workbench  # noqa: E402
from dynrefl.fixtures import ex53_document, ex89_document, zn3_document  # noqa: E402
from oracles import Ex53  # noqa: E402


@pytest.fixture(scope="session")
def ex53():
    return open_workbench(ex53_document()).build_all()


@pytest.fixture(scope="session")
def ex89():
    return open_workbench(ex89_document()).build_all()


@pytest.fixture(scope="session")
def zn3():
    return open_workbench(zn3_document()).build_all()


@pytest.fixture(scope="session")
def oracle():
    return Ex53()
