from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from scripts.groups.smith import smith_normal_form
from scripts.torus import LatticeClass
from scripts.torus.ring import RingElement, is_unit, marker_matrix, validate


@dataclass(frozen=True, order=True)
class TorusPoint:
    ''' Point of the torus in lattice coordinates, both reduced into [0, 1) '''
    x: Fraction
    y: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x) % 1)
        object.__setattr__(self, "y", Fraction(self.y) % 1)

    def __add__(self, other: TorusPoint) -> TorusPoint:
        return TorusPoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other: TorusPoint) -> TorusPoint:
        return TorusPoint(self.x - other.x, self.y - other.y)

    def __neg__(self) -> TorusPoint:
        return TorusPoint(-self.x, -self.y)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def __str__(self) -> str:
        return f"{self.x}:{self.y}"


ORIGIN = TorusPoint(Fraction(0), Fraction(0))


@dataclass(frozen=True)
class Configuration:
    ''' Ordered tuple of distinct torus points '''
    points: tuple[TorusPoint, ...]

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ValueError(f"Configuration points must be distinct: {[str(p) for p in self.points]}")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, index: int) -> TorusPoint:
        return self.points[index]

    def point(self, index: int) -> TorusPoint:
        ''' 1-based access '''
        if not 1 <= index <= len(self.points):
            raise ValueError(f"Index {index} outside 1..{len(self.points)}")
        return self.points[index - 1]

    def unordered(self) -> tuple[TorusPoint, ...]:
        return tuple(sorted(self.points))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.points)


def apply_endo(lattice: LatticeClass, alpha: RingElement, point: TorusPoint) -> TorusPoint:
    if validate(lattice, alpha).is_zero():
        raise ValueError("Multiplication by zero is not an endomorphism of positive degree")
    matrix = marker_matrix(lattice, alpha)
    return TorusPoint(
        matrix[0, 0] * point.x + matrix[0, 1] * point.y,
        matrix[1, 0] * point.x + matrix[1, 1] * point.y,
    )


@lru_cache(maxsize=None)
def endo_kernel(lattice: LatticeClass, alpha: RingElement) -> tuple[TorusPoint, ...]:
    """
    Points killed by alpha, sorted. With U·A·V = diag(d1, d2) the kernel is
    V·(k1/d1, k2/d2) for 0 <= k_i < d_i, so it has d1·d2 = norm(alpha) points.
    """
    if validate(lattice, alpha).is_zero():
        raise ValueError("Zero has no finite kernel")
    D, _, V = smith_normal_form(marker_matrix(lattice, alpha))
    d1, d2 = D[0, 0], D[1, 1]
    kernel = {
        TorusPoint(
            V[0, 0] * Fraction(k1, d1) + V[0, 1] * Fraction(k2, d2),
            V[1, 0] * Fraction(k1, d1) + V[1, 1] * Fraction(k2, d2),
        )
        for k1 in range(d1)
        for k2 in range(d2)
    }
    return tuple(sorted(kernel))


def point_order(point: TorusPoint) -> int:
    ''' Least k >= 1 with k·p = 0 '''
    return lcm(point.x.denominator, point.y.denominator)


def sum_map(points: Configuration | tuple[TorusPoint, ...]) -> TorusPoint:
    total = ORIGIN
    for point in points:
        total = total + point
    return total


def difference_eval(lattice: LatticeClass, unit: RingElement, i: int, j: int, configuration: Configuration) -> TorusPoint:
    ''' unit·(q_i - q_j) with 1-based indices '''
    if i == j:
        raise ValueError(f"A difference needs two distinct indices, got {i} twice")
    if not is_unit(lattice, unit):
        raise ValueError(f"{unit} is not a unit of the {lattice.value} ring")
    return apply_endo(lattice, unit, configuration.point(i) - configuration.point(j))


def reducing_translations(configuration: Configuration) -> list[TorusPoint]:
    ''' The n^2 translations t with s(Q + t) = 0 '''
    n = len(configuration)
    total = sum_map(configuration)
    return sorted(
        TorusPoint((k1 - total.x) / n, (k2 - total.y) / n)
        for k1 in range(n)
        for k2 in range(n)
    )


def translate(configuration: Configuration, shift: TorusPoint) -> Configuration:
    return Configuration(tuple(point + shift for point in configuration))


# ─────────────────────────────────────────────────────────────
# LINEAR FORMS
# ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class LinearForm:
    ''' Map (T^2)^n -> T^2, q -> sum k_i·q_i + c, coefficients keyed by 1-based index '''
    coefficients: tuple[tuple[int, RingElement], ...]
    constant: TorusPoint = ORIGIN

    def evaluate(self, lattice: LatticeClass, configuration: Configuration) -> TorusPoint:
        total = self.constant
        for index, coefficient in self.coefficients:
            if not coefficient.is_zero():
                total = total + apply_endo(lattice, coefficient, configuration.point(index))
        return total

    def is_symmetric(self, n: int) -> bool:
        values = dict(self.coefficients)
        return len({values.get(index, RingElement(0)) for index in range(1, n + 1)}) == 1


def symmetric_form(coefficient: RingElement, constant: TorusPoint, n: int) -> LinearForm:
    ''' The form k·s(Q) + c, which only depends on the unordered configuration '''
    return LinearForm(tuple((index, coefficient) for index in range(1, n + 1)), constant)


# ─────────────────────────────────────────────────────────────
# PARSING AND SAMPLING
# ─────────────────────────────────────────────────────────────

def parse_point(text: str) -> TorusPoint:
    try:
        x, y = text.strip().split(":")
        return TorusPoint(Fraction(x), Fraction(y))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"Cannot parse torus point {text!r}; expected x:y with rational coordinates") from None


def parse_configuration(text: str) -> Configuration:
    ''' "0:0,1/2:0,0:1/2" '''
    return Configuration(tuple(parse_point(chunk) for chunk in text.split(",") if chunk.strip()))


def random_point(rng: random.Random, denominator: int) -> TorusPoint:
    return TorusPoint(Fraction(rng.randrange(denominator), denominator), Fraction(rng.randrange(denominator), denominator))


def random_configuration(rng: random.Random, n: int, denominator: int) -> Configuration:
    if n > denominator * denominator:
        raise ValueError(f"Only {denominator ** 2} grid points for {n} distinct samples")
    points: list[TorusPoint] = []
    while len(points) < n:
        if (point := random_point(rng, denominator)) not in points:
            points.append(point)
    return Configuration(tuple(points))
