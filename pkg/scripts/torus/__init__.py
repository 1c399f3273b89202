from enum import Enum


class LatticeClass(Enum):
    ''' Period lattice of the torus, by its ring of multipliers '''
    GENERIC = "generic"
    SQUARE = "square"
    HEXAGONAL = "hexagonal"


def lattice_class(name: str) -> LatticeClass:
    try:
        return LatticeClass(name.lower())
    except ValueError:
        raise KeyError(f"Unknown lattice class {name!r}; expected one of {[c.value for c in LatticeClass]}") from None


# Text symbol of the ring generator tau
TAU = "t"
