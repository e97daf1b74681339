import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from zerowind import unit_circle, square, polygon


@pytest.fixture(scope="session")
def circle_curve():
    return unit_circle()


@pytest.fixture(scope="session")
def unit_square():
    return square(0.0, 2.0)


@pytest.fixture(scope="session")
def lshape():
    return polygon([0, 2, 2 + 1j, 1 + 1j, 1 + 2j, 2j])
