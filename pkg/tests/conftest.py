import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from starcomm.group import generate
from starcomm.perm import Permutation


def cycles(degree, *cycle_lists):
    return Permutation.from_cycles(degree, cycle_lists)


@pytest.fixture(scope="session")
def sym3():
    return generate(3, [cycles(3, [0, 1]), cycles(3, [0, 1, 2])], group_id="sym3")


@pytest.fixture(scope="session")
def sym4():
    return generate(4, [cycles(4, [0, 1]), cycles(4, [0, 1, 2, 3])], group_id="sym4")


@pytest.fixture(scope="session")
def alt4():
    return generate(4, [cycles(4, [0, 1, 2]), cycles(4, [1, 2, 3])], group_id="alt4")


@pytest.fixture(scope="session")
def alt5():
    return generate(
        5, [cycles(5, [0, 1, 2, 3, 4]), cycles(5, [0, 1, 2])], group_id="alt5"
    )
