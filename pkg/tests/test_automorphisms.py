from __future__ import annotations

import random
import pytest
from scripts.torus import LatticeClass
from scripts.torus.automorphisms import (
    aut_apply, aut_compose, aut_identity, aut_invert, diagonal_orbit_equal, random_automorphism,
    rigidity_counterexamples,
)
from scripts.torus.points import Configuration, parse_configuration, random_configuration, random_point


def test_group_laws(lattice, rng):
    for _ in range(20):
        a, b, c = (random_automorphism(lattice, rng, 12) for _ in range(3))
        p = random_point(rng, 12)
        assert aut_compose(lattice, aut_compose(lattice, a, b), c) == aut_compose(lattice, a, aut_compose(lattice, b, c))
        assert aut_compose(lattice, a, aut_invert(lattice, a)) == aut_identity()
        assert aut_apply(lattice, aut_compose(lattice, a, b), p) == aut_apply(lattice, a, aut_apply(lattice, b, p))


def test_orbit_equality_finds_the_automorphism(lattice, rng):
    for _ in range(10):
        configuration = random_configuration(rng, 4, 12)
        moved = aut_apply(lattice, random_automorphism(lattice, rng, 12), configuration)
        shuffled = Configuration(tuple(reversed(moved.points)))
        automorphism = diagonal_orbit_equal(lattice, configuration, shuffled)
        assert automorphism is not None
        assert aut_apply(lattice, automorphism, configuration).unordered() == shuffled.unordered()


def test_orbit_equality_respects_difference_orders(lattice):
    first = parse_configuration("0:0,1/2:0")
    assert diagonal_orbit_equal(lattice, first, parse_configuration("0:0,1/3:0")) is None
    assert diagonal_orbit_equal(lattice, first, parse_configuration("0:0,1/5:0")) is None
    assert diagonal_orbit_equal(lattice, Configuration(()), Configuration(())) == aut_identity()
    with pytest.raises(ValueError):
        diagonal_orbit_equal(lattice, first, parse_configuration("0:0"))


@pytest.mark.slow
def test_orbit_equality_on_two_hundred_seeded_cases(lattice):
    rng = random.Random(2024)
    for _ in range(200):
        configuration = random_configuration(rng, rng.randint(1, 5), 12)
        moved = aut_apply(lattice, random_automorphism(lattice, rng, 12), configuration)
        witness = diagonal_orbit_equal(lattice, configuration, moved)
        assert witness is not None
        assert aut_apply(lattice, witness, configuration).unordered() == moved.unordered()


def test_orbit_equality_is_symmetric_and_transitive(lattice, rng):
    for _ in range(10):
        first = random_configuration(rng, 3, 6)
        second = aut_apply(lattice, random_automorphism(lattice, rng, 6), first)
        third = aut_apply(lattice, random_automorphism(lattice, rng, 6), second)
        unrelated = random_configuration(rng, 3, 6)
        assert diagonal_orbit_equal(lattice, first, first) is not None
        assert diagonal_orbit_equal(lattice, second, first) is not None
        assert diagonal_orbit_equal(lattice, first, third) is not None
        forward = diagonal_orbit_equal(lattice, first, unrelated) is not None
        assert forward == (diagonal_orbit_equal(lattice, unrelated, first) is not None)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_no_unit_sum_multipliers_beyond_two_points(lattice, n):
    assert rigidity_counterexamples(lattice, n, 2) == []


def test_two_points_admit_unit_multipliers():
    assert rigidity_counterexamples(LatticeClass.GENERIC, 2, 1)
