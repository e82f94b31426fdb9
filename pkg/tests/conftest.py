import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

import pytest

from extalg import GradedAlgebra, parse_presentation


QPLANE = "field Q\ngens x:1 y:1\nrel x*y - 2*y*x\n"
KX = "field Q\ngens x:1\n"
CUBE = "field Q\ngens x:1\nrel x^3\n"
FREE2 = "field Q\ngens x:1 y:1\n"
SQUARE = "field Q\ngens x:1\nrel x^2\n"


@pytest.fixture
def qplane():
    return parse_presentation(QPLANE)


@pytest.fixture
def qplane_algebra(qplane):
    return GradedAlgebra(qplane, 6)


@pytest.fixture
def kx():
    return parse_presentation(KX)


@pytest.fixture
def cube():
    return parse_presentation(CUBE)
