from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from scripts.groups.smith import IntegerMatrix
from scripts.torus import TAU, LatticeClass


@dataclass(frozen=True, order=True)
class RingElement:
    """
    a + b·tau in the multiplier ring of a lattice class.
    tau^2 = -1 on SQUARE, tau^2 = tau - 1 on HEXAGONAL (tau = exp(i·pi/3)); GENERIC has b = 0.
    """
    a: int
    b: int = 0

    def __add__(self, other: RingElement) -> RingElement:
        return RingElement(self.a + other.a, self.b + other.b)

    def __sub__(self, other: RingElement) -> RingElement:
        return RingElement(self.a - other.a, self.b - other.b)

    def __neg__(self) -> RingElement:
        return RingElement(-self.a, -self.b)

    def scale(self, factor: int) -> RingElement:
        return RingElement(factor * self.a, factor * self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        tau = TAU if abs(self.b) == 1 else f"{abs(self.b)}*{TAU}"
        if self.a == 0:
            return tau if self.b > 0 else f"-{tau}"
        return f"{self.a}{'+' if self.b > 0 else '-'}{tau}"


ZERO = RingElement(0)
ONE = RingElement(1)
TAU_ELEMENT = RingElement(0, 1)


def validate(lattice: LatticeClass, x: RingElement) -> RingElement:
    if lattice == LatticeClass.GENERIC and x.b:
        raise ValueError(f"{x} is not an integer; the generic lattice only admits integer multipliers")
    return x


def ring_mul(lattice: LatticeClass, x: RingElement, y: RingElement) -> RingElement:
    validate(lattice, x), validate(lattice, y)
    if lattice == LatticeClass.GENERIC:
        return RingElement(x.a * y.a)
    cross = x.a * y.b + x.b * y.a
    square = x.b * y.b
    if lattice == LatticeClass.SQUARE:
        return RingElement(x.a * y.a - square, cross)
    return RingElement(x.a * y.a - square, cross + square)


def ring_pow(lattice: LatticeClass, x: RingElement, exponent: int) -> RingElement:
    result = ONE
    for _ in range(exponent):
        result = ring_mul(lattice, result, x)
    return result


def ring_norm(lattice: LatticeClass, x: RingElement) -> int:
    ''' Squared absolute value, the determinant of multiplication by x '''
    validate(lattice, x)
    if lattice == LatticeClass.SQUARE:
        return x.a * x.a + x.b * x.b
    if lattice == LatticeClass.HEXAGONAL:
        return x.a * x.a + x.a * x.b + x.b * x.b
    return x.a * x.a


def is_unit(lattice: LatticeClass, x: RingElement) -> bool:
    return ring_norm(lattice, x) == 1


# ─────────────────────────────────────────────────────────────
# MARKERS
# ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class MarkerGroup:
    ''' Units of the ring in counterclockwise order, and the canonical half with argument in [0, pi) '''
    units: tuple[RingElement, ...]
    canonical: tuple[RingElement, ...]

    def __len__(self) -> int:
        return len(self.units)


@lru_cache(maxsize=None)
def marker_group(lattice: LatticeClass) -> MarkerGroup:
    half = {
        LatticeClass.GENERIC: 1,
        LatticeClass.SQUARE: 2,
        LatticeClass.HEXAGONAL: 3,
    }[lattice]
    tau = ONE if lattice == LatticeClass.GENERIC else TAU_ELEMENT
    canonical = tuple(ring_pow(lattice, tau, k) for k in range(half))
    return MarkerGroup(canonical + tuple(-unit for unit in canonical), canonical)


def canonical_marker(lattice: LatticeClass, unit: RingElement) -> tuple[int, int]:
    """
    Splits a unit as sign·tau^k with tau^k canonical.
    Returns (k, sign).
    """
    group = marker_group(lattice)
    if unit in group.canonical:
        return group.canonical.index(unit), 1
    if -unit in group.canonical:
        return group.canonical.index(-unit), -1
    raise ValueError(f"{unit} is not a unit of the {lattice.value} ring")


def marker(lattice: LatticeClass, k: int) -> RingElement:
    canonical = marker_group(lattice).canonical
    if not 0 <= k < len(canonical):
        raise ValueError(f"Marker index {k} out of range for the {lattice.value} lattice")
    return canonical[k]


def unit_inverse(lattice: LatticeClass, unit: RingElement) -> RingElement:
    for candidate in marker_group(lattice).units:
        if ring_mul(lattice, unit, candidate) == ONE:
            return candidate
    raise ValueError(f"{unit} is not a unit of the {lattice.value} ring")


def marker_matrix(lattice: LatticeClass, x: RingElement) -> IntegerMatrix:
    ''' Matrix of multiplication by x in the basis (1, tau); columns are x·1 and x·tau '''
    validate(lattice, x)
    image_of_tau = ring_mul(lattice, x, TAU_ELEMENT) if lattice != LatticeClass.GENERIC else RingElement(0, x.a)
    return IntegerMatrix.from_rows([[x.a, image_of_tau.a], [x.b, image_of_tau.b]])


def associates(lattice: LatticeClass, x: RingElement) -> list[RingElement]:
    return [ring_mul(lattice, unit, x) for unit in marker_group(lattice).units]


def is_reduced_associate(lattice: LatticeClass, x: RingElement) -> bool:
    ''' True when x is the lexicographically largest of its associates '''
    return x == max(associates(lattice, x), key=lambda y: (y.a, y.b))


def elements_up_to_norm(lattice: LatticeClass, max_norm: int, min_norm: int = 1) -> list[RingElement]:
    ''' All ring elements with min_norm <= norm <= max_norm, sorted by norm then (a, b) '''
    if lattice == LatticeClass.GENERIC:
        bound_a, bound_b = isqrt(max_norm), 0
    else:
        # a^2 + ab + b^2 >= 3/4 max(a, b)^2
        bound_a = bound_b = isqrt(4 * max_norm // 3) + 1
    elements = [
        RingElement(a, b)
        for a in range(-bound_a, bound_a + 1)
        for b in range(-bound_b, bound_b + 1)
    ]
    elements = [x for x in elements if min_norm <= ring_norm(lattice, x) <= max_norm]
    return sorted(elements, key=lambda x: (ring_norm(lattice, x), x.a, x.b))


ELEMENT_PATTERN = re.compile(
    rf"^\s*(?P<a>[+-]?\d+)?\s*(?:(?P<sign>[+-])?\s*(?:(?P<b>\d+)\s*\*\s*)?(?P<tau>{TAU}))?\s*$"
)


def parse_element(text: str, lattice: LatticeClass | None = None) -> RingElement:
    """
    Parses "a", "a+b*t", "a-b*t", "t", "-t" or "b*t".
    """
    match = ELEMENT_PATTERN.match(text)
    if not match or (match["a"] is None and match["tau"] is None):
        raise ValueError(f"Cannot parse ring element {text!r}")
    a = int(match["a"]) if match["a"] is not None else 0
    b = 0
    if match["tau"]:
        if match["a"] is not None and match["sign"] is None:
            raise ValueError(f"Cannot parse ring element {text!r}")
        b = int(match["b"]) if match["b"] else 1
        b = -b if match["sign"] == "-" else b
    element = RingElement(a, b)
    return validate(lattice, element) if lattice else element
