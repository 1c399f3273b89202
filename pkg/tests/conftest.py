from __future__ import annotations

import random
from fractions import Fraction
import pytest
from settings import DEFAULT_SEED
from scripts.torus import LatticeClass
from scripts.torus.points import TorusPoint


@pytest.fixture
def rng() -> random.Random:
    return random.Random(DEFAULT_SEED)


@pytest.fixture(params=list(LatticeClass), ids=lambda lattice: lattice.value)
def lattice(request) -> LatticeClass:
    return request.param


def point(x, y) -> TorusPoint:
    return TorusPoint(Fraction(x), Fraction(y))


GRID_VALUES = [Fraction(0), Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(1, 4), Fraction(3, 4)]
GRID = [TorusPoint(x, y) for x in GRID_VALUES for y in GRID_VALUES]
