from enum import Enum

SIGMA_PREFIX = "s"
LOOP_NAMES = ("a1", "a2")


class BraidFamily(Enum):
    TORUS = "torus"
    ARTIN = "artin"


class SeriesConvention(Enum):
    PRINTED = "printed"
    FIBRATION = "fibration"


# Relator family labels, in emission order
COMMUTE = "commute"
BRAID = "braid"
COMMUTE_LOOP = "commute-a"
SQUARE = "square"
LONG = "long"
TWIST = "twist"
