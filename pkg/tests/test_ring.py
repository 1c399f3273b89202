from __future__ import annotations

import pytest
from scripts.torus import LatticeClass, lattice_class
from scripts.torus.ring import (
    ONE, TAU_ELEMENT, RingElement, canonical_marker, elements_up_to_norm, is_reduced_associate, marker_group,
    marker_matrix, parse_element, ring_mul, ring_norm, ring_pow, unit_inverse,
)

SQUARE, HEXAGONAL, GENERIC = LatticeClass.SQUARE, LatticeClass.HEXAGONAL, LatticeClass.GENERIC


def _box(lattice, size=3):
    return [
        RingElement(a, b)
        for a in range(-size, size + 1)
        for b in (range(-size, size + 1) if lattice != GENERIC else [0])
    ]


def test_tau_relations():
    assert ring_mul(SQUARE, TAU_ELEMENT, TAU_ELEMENT) == RingElement(-1)
    assert ring_mul(HEXAGONAL, TAU_ELEMENT, TAU_ELEMENT) == RingElement(-1, 1)
    assert ring_pow(HEXAGONAL, TAU_ELEMENT, 3) == RingElement(-1)
    assert ring_pow(HEXAGONAL, TAU_ELEMENT, 6) == ONE
    assert ring_pow(SQUARE, TAU_ELEMENT, 4) == ONE


def test_norms():
    assert ring_norm(SQUARE, RingElement(1, 1)) == 2
    assert ring_norm(HEXAGONAL, RingElement(1, 1)) == 3
    assert ring_norm(HEXAGONAL, RingElement(2, -1)) == 3
    assert ring_norm(GENERIC, RingElement(-3)) == 9


def test_norm_is_multiplicative_and_matches_determinant(lattice):
    elements = _box(lattice, 2)
    for x in elements:
        assert marker_matrix(lattice, x).determinant() == ring_norm(lattice, x)
        for y in elements:
            assert ring_norm(lattice, ring_mul(lattice, x, y)) == ring_norm(lattice, x) * ring_norm(lattice, y)


def test_tau_matrices():
    assert marker_matrix(SQUARE, TAU_ELEMENT).entries == ((0, -1), (1, 0))
    assert marker_matrix(HEXAGONAL, TAU_ELEMENT).entries == ((0, -1), (1, 1))
    assert marker_matrix(GENERIC, RingElement(3)).entries == ((3, 0), (0, 3))


def test_marker_groups(lattice):
    group = marker_group(lattice)
    assert len(group) == {GENERIC: 2, SQUARE: 4, HEXAGONAL: 6}[lattice]
    assert len(group.canonical) * 2 == len(group)
    for unit in group.units:
        assert ring_norm(lattice, unit) == 1
        assert ring_mul(lattice, unit, unit_inverse(lattice, unit)) == ONE
    assert marker_group(HEXAGONAL).canonical == (ONE, TAU_ELEMENT, RingElement(-1, 1))


def test_canonical_marker():
    assert canonical_marker(HEXAGONAL, RingElement(0, -1)) == (1, -1)
    assert canonical_marker(SQUARE, RingElement(-1)) == (0, -1)
    with pytest.raises(ValueError):
        canonical_marker(SQUARE, RingElement(1, 1))


@pytest.mark.parametrize("text, expected", [
    ("5", RingElement(5)),
    ("2-3*t", RingElement(2, -3)),
    ("1+t", RingElement(1, 1)),
    ("t", RingElement(0, 1)),
    ("-t", RingElement(0, -1)),
    ("3*t", RingElement(0, 3)),
    ("-2", RingElement(-2)),
])
def test_parse_element(text, expected):
    assert parse_element(text) == expected
    assert parse_element(str(expected)) == expected


def test_parse_errors():
    for text in ["", "abc", "3t", "1+2"]:
        with pytest.raises(ValueError):
            parse_element(text)
    with pytest.raises(ValueError):
        parse_element("1+t", GENERIC)
    with pytest.raises(KeyError):
        lattice_class("rhombic")


def test_elements_by_norm():
    norm_three = elements_up_to_norm(HEXAGONAL, 3, min_norm=2)
    assert len(norm_three) == 6
    assert all(ring_norm(HEXAGONAL, x) == 3 for x in norm_three)
    assert elements_up_to_norm(GENERIC, 4, min_norm=2) == [RingElement(-2), RingElement(2)]
    assert len(elements_up_to_norm(SQUARE, 1)) == 4


def test_reduced_associates():
    assert is_reduced_associate(SQUARE, RingElement(1, 1))
    assert not is_reduced_associate(SQUARE, RingElement(-1, 1))
    assert is_reduced_associate(GENERIC, RingElement(2))
    assert not is_reduced_associate(GENERIC, RingElement(-2))
