from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from settings import logging
from scripts.torus import LatticeClass
from scripts.torus.points import Configuration, TorusPoint, apply_endo, random_point
from scripts.torus.ring import ONE, RingElement, is_unit, marker_group, ring_mul, unit_inverse


@dataclass(frozen=True)
class TorusAutomorphism:
    ''' z -> unit·z + translation '''
    unit: RingElement
    translation: TorusPoint

    def __str__(self) -> str:
        return f"z -> ({self.unit})z + {self.translation}"


def aut_identity() -> TorusAutomorphism:
    return TorusAutomorphism(ONE, TorusPoint(0, 0))


def _check(lattice: LatticeClass, automorphism: TorusAutomorphism) -> None:
    if not is_unit(lattice, automorphism.unit):
        raise ValueError(f"{automorphism.unit} is not a unit of the {lattice.value} ring")


def aut_compose(lattice: LatticeClass, second: TorusAutomorphism, first: TorusAutomorphism) -> TorusAutomorphism:
    ''' second ∘ first: (u2, c2)∘(u1, c1) = (u2·u1, u2·c1 + c2) '''
    _check(lattice, second), _check(lattice, first)
    return TorusAutomorphism(
        ring_mul(lattice, second.unit, first.unit),
        apply_endo(lattice, second.unit, first.translation) + second.translation,
    )


def aut_invert(lattice: LatticeClass, automorphism: TorusAutomorphism) -> TorusAutomorphism:
    _check(lattice, automorphism)
    inverse = unit_inverse(lattice, automorphism.unit)
    return TorusAutomorphism(inverse, -apply_endo(lattice, inverse, automorphism.translation))


def aut_apply(lattice: LatticeClass, automorphism: TorusAutomorphism, target: TorusPoint | Configuration):
    _check(lattice, automorphism)
    if isinstance(target, Configuration):
        return Configuration(tuple(aut_apply(lattice, automorphism, point) for point in target))
    return apply_endo(lattice, automorphism.unit, target) + automorphism.translation


def diagonal_orbit_equal(lattice: LatticeClass, first: Configuration, second: Configuration) -> TorusAutomorphism | None:
    """
    Finds A in Aut T^2 with A·first = second as unordered sets, or None.
    Tries every unit u and every translation sending first[0] onto some point of second.
    """
    if len(first) != len(second):
        raise ValueError(f"Configurations of different sizes {len(first)} and {len(second)}")
    if not len(first):
        return aut_identity()
    target = second.unordered()
    for unit in marker_group(lattice).units:
        for point in second:
            candidate = TorusAutomorphism(unit, point - apply_endo(lattice, unit, first[0]))
            if aut_apply(lattice, candidate, first).unordered() == target:
                logging.debug(f"Configurations related by {candidate}")
                return candidate
    return None


def random_automorphism(lattice: LatticeClass, rng: random.Random, denominator: int) -> TorusAutomorphism:
    units = marker_group(lattice).units
    return TorusAutomorphism(units[rng.randrange(len(units))], random_point(rng, denominator))


# ─────────────────────────────────────────────────────────────
# SUM-MULTIPLIER RIGIDITY
# ─────────────────────────────────────────────────────────────

def sum_multiplier(lattice: LatticeClass, unit: RingElement, k: RingElement, n: int) -> RingElement:
    ''' Multiplier m0 + n·k of a unit twisted by k times the sum map '''
    if not is_unit(lattice, unit):
        raise ValueError(f"{unit} is not a unit of the {lattice.value} ring")
    return unit + k.scale(n)


def rigidity_counterexamples(lattice: LatticeClass, n: int, bound: int) -> list[tuple[RingElement, tuple[int, ...], RingElement]]:
    """
    Searches units m0 and integer weights k_m (|k_m| <= bound, one per unit m)
    for which m0 + n·sum(k_m·m) is a unit although sum(k_m·m) != 0.
    Returns (m0, weights, multiplier) triples.
    """
    units = marker_group(lattice).units
    found, seen = [], set()
    for weights in product(range(-bound, bound + 1), repeat=len(units)):
        k = RingElement(0)
        for weight, unit in zip(weights, units):
            k = k + unit.scale(weight)
        if k.is_zero() or k in seen:
            continue
        seen.add(k)
        for m0 in units:
            multiplier = sum_multiplier(lattice, m0, k, n)
            if is_unit(lattice, multiplier):
                found.append((m0, weights, multiplier))
    logging.info(f"Rigidity search on {lattice.value}, n={n}: {len(found)} counterexamples")
    return found
