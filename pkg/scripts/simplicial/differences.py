from __future__ import annotations

from dataclasses import dataclass
from scripts.simplicial import MARKER_TOKENS, VERTEX_SEPARATOR
from scripts.torus import LatticeClass
from scripts.torus.points import Configuration, TorusPoint, difference_eval
from scripts.torus.ring import RingElement, canonical_marker, is_unit, marker, marker_group


@dataclass(frozen=True, order=True)
class Difference:
    """
    Vertex e_{m;i,j} = m·(q_i - q_j) of the difference complex.
    marker is the exponent k of the canonical marker tau^k, so vertices sort
    by (marker, i, j) with 1 < tau < tau^2.
    """
    marker: int
    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j or min(self.i, self.j) < 1:
            raise ValueError(f"Invalid difference indices ({self.i}, {self.j})")
        if self.marker < 0:
            raise ValueError(f"Invalid marker index {self.marker}")

    @property
    def support(self) -> frozenset[int]:
        return frozenset((self.i, self.j))

    def __str__(self) -> str:
        return f"{MARKER_TOKENS[self.marker]}:{self.i},{self.j}"


@dataclass(frozen=True)
class FormalCombination:
    ''' Sparse sum of ring coefficients times q_index, sorted by index, zeros dropped '''
    terms: tuple[tuple[int, RingElement], ...]

    @classmethod
    def of(cls, coefficients: dict[int, RingElement]) -> FormalCombination:
        return cls(tuple(sorted((index, value) for index, value in coefficients.items() if not value.is_zero())))

    def __str__(self) -> str:
        return " + ".join(f"({value})q{index}" for index, value in self.terms) or "0"


def check_difference(lattice: LatticeClass, vertex: Difference) -> Difference:
    marker(lattice, vertex.marker)
    return vertex


def vertex_set(n: int, lattice: LatticeClass) -> list[Difference]:
    if n < 2:
        raise ValueError(f"The difference complex needs n >= 2, got {n}")
    count = len(marker_group(lattice).canonical)
    return [
        Difference(k, i, j)
        for k in range(count)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
    ]


def canonical_difference(lattice: LatticeClass, unit: RingElement, i: int, j: int) -> Difference:
    ''' unit·(q_i - q_j) as a vertex; a non-canonical unit u is rewritten as (-u)·(q_j - q_i) '''
    k, sign = canonical_marker(lattice, unit)
    return Difference(k, i, j) if sign == 1 else Difference(k, j, i)


def formal_difference(lattice: LatticeClass, first: Difference, second: Difference) -> FormalCombination:
    ''' first - second as a formal combination of the q's '''
    coefficients: dict[int, RingElement] = {}
    for vertex, sign in ((first, 1), (second, -1)):
        value = marker(lattice, check_difference(lattice, vertex).marker).scale(sign)
        coefficients[vertex.i] = coefficients.get(vertex.i, RingElement(0)) + value
        coefficients[vertex.j] = coefficients.get(vertex.j, RingElement(0)) - value
    return FormalCombination.of(coefficients)


def is_difference(lattice: LatticeClass, combination: FormalCombination) -> Difference | None:
    ''' Recognizes u·q_e - u·q_g with u a unit, in canonical form '''
    if len(combination.terms) != 2:
        return None
    (e, first), (g, second) = combination.terms
    if first != -second or not is_unit(lattice, first):
        return None
    return canonical_difference(lattice, first, e, g)


def proper_remainder_oracle(lattice: LatticeClass, first: Difference, second: Difference) -> Difference | None:
    ''' The difference first - second when it is itself a vertex; this decides adjacency '''
    if first == second:
        raise ValueError(f"Adjacency of {first} with itself is undefined")
    return is_difference(lattice, formal_difference(lattice, first, second))


def proper_remainder_rule(first: Difference, second: Difference) -> bool:
    ''' Equal markers and exactly one of the two index positions shared '''
    if first == second:
        raise ValueError(f"Adjacency of {first} with itself is undefined")
    return first.marker == second.marker and ((first.i == second.i) != (first.j == second.j))


def evaluate_difference(lattice: LatticeClass, vertex: Difference, configuration: Configuration) -> TorusPoint:
    return difference_eval(lattice, marker(lattice, vertex.marker), vertex.i, vertex.j, configuration)


def parse_difference(text: str, lattice: LatticeClass | None = None) -> Difference:
    ''' "t:1,2" is tau·(q1 - q2) '''
    try:
        token, indices = text.strip().split(":")
        i, j = (int(index) for index in indices.split(","))
        vertex = Difference(MARKER_TOKENS.index(token.strip()), i, j)
    except ValueError:
        raise ValueError(f"Cannot parse difference {text!r}; expected marker:i,j with marker in {MARKER_TOKENS}") from None
    return check_difference(lattice, vertex) if lattice else vertex


def parse_differences(text: str, lattice: LatticeClass | None = None) -> list[Difference]:
    return [parse_difference(chunk, lattice) for chunk in text.split(VERTEX_SEPARATOR) if chunk.strip()]
